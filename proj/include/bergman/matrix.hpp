#ifndef BERGMAN_MATRIX_HPP
#define BERGMAN_MATRIX_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace bergman {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major. Operator matrices in the
/// orthonormal basis are stored here; the adjoint is the conjugate transpose.
class CMatrix {
public:
    explicit CMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {
        if (n <= 0) throw std::invalid_argument("CMatrix: need positive dimension");
    }

    static CMatrix identity(int n) {
        CMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int dim() const { return n_; }

    std::complex<double>& operator()(int i, int j) { return a_[idx(i, j)]; }
    const std::complex<double>& operator()(int i, int j) const { return a_[idx(i, j)]; }

    CMatrix adjoint() const {
        CMatrix m(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m(i, j) = std::conj((*this)(j, i));
        return m;
    }

    std::vector<std::complex<double>> apply(const std::vector<std::complex<double>>& v) const {
        if (static_cast<int>(v.size()) != n_)
            throw std::invalid_argument("CMatrix::apply: length mismatch");
        std::vector<std::complex<double>> out(static_cast<size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            std::complex<double> sum = 0.0;
            for (int j = 0; j < n_; ++j) sum += (*this)(i, j) * v[static_cast<size_t>(j)];
            out[static_cast<size_t>(i)] = sum;
        }
        return out;
    }

    std::complex<double> trace() const {
        std::complex<double> t = 0.0;
        for (int i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& x : a_) s += std::norm(x);
        return std::sqrt(s);
    }

    /// Max entry modulus over the leading block of the given size
    /// (the whole matrix when block <= 0).
    double max_abs(int block = 0) const {
        const int b = (block <= 0 || block > n_) ? n_ : block;
        double m = 0.0;
        for (int i = 0; i < b; ++i)
            for (int j = 0; j < b; ++j) m = std::max(m, std::abs((*this)(i, j)));
        return m;
    }

    friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("CMatrix: dimension mismatch");
        CMatrix c(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int k = 0; k < a.n_; ++k) {
                const auto aik = a(i, k);
                if (aik == std::complex<double>(0.0)) continue;
                for (int j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend CMatrix operator+(const CMatrix& a, const CMatrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("CMatrix: dimension mismatch");
        CMatrix c(a.n_);
        for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
        return c;
    }

    friend CMatrix operator-(const CMatrix& a, const CMatrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("CMatrix: dimension mismatch");
        CMatrix c(a.n_);
        for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] - b.a_[i];
        return c;
    }

    friend CMatrix operator*(std::complex<double> s, const CMatrix& a) {
        CMatrix c(a.n_);
        for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = s * a.a_[i];
        return c;
    }

private:
    size_t idx(int i, int j) const { return static_cast<size_t>(i) * n_ + j; }

    int n_;
    std::vector<std::complex<double>> a_;
};

inline double vector_norm(const std::vector<std::complex<double>>& v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

} // namespace bergman

#endif
