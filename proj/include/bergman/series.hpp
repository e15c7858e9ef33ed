#ifndef BERGMAN_SERIES_HPP
#define BERGMAN_SERIES_HPP

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bergman {

using cplx = std::complex<double>;

/// A holomorphic function represented by its first N+1 Taylor coefficients
/// at the origin. All binary operations require matching truncation degree.
/// Values are immutable; every operation returns a fresh series.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("TruncatedSeries: need at least one coefficient");
    }

    static TruncatedSeries zero(int trunc_degree) {
        return TruncatedSeries(std::vector<cplx>(static_cast<size_t>(trunc_degree) + 1));
    }

    static TruncatedSeries constant(cplx value, int trunc_degree) {
        auto s = zero(trunc_degree);
        s.coeffs_[0] = value;
        return s;
    }

    /// coef * z^j, or zero if j exceeds the truncation degree.
    static TruncatedSeries monomial(int j, cplx coef, int trunc_degree) {
        auto s = zero(trunc_degree);
        if (j <= trunc_degree) s.coeffs_[static_cast<size_t>(j)] = coef;
        return s;
    }

    int trunc_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<cplx>& coeffs() const { return coeffs_; }
    cplx coeff(int j) const { return coeffs_[static_cast<size_t>(j)]; }

    bool is_zero(double eps = 0.0) const {
        for (const auto& c : coeffs_)
            if (std::abs(c) > eps) return false;
        return true;
    }

private:
    std::vector<cplx> coeffs_;
};

namespace detail {
inline void require_same_degree(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.trunc_degree() != b.trunc_degree())
        throw std::invalid_argument("TruncatedSeries: truncation degree mismatch");
}
} // namespace detail

inline TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    detail::require_same_degree(a, b);
    std::vector<cplx> c(a.coeffs());
    for (size_t j = 0; j < c.size(); ++j) c[j] += b.coeff(static_cast<int>(j));
    return TruncatedSeries(std::move(c));
}

inline TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    detail::require_same_degree(a, b);
    std::vector<cplx> c(a.coeffs());
    for (size_t j = 0; j < c.size(); ++j) c[j] -= b.coeff(static_cast<int>(j));
    return TruncatedSeries(std::move(c));
}

inline TruncatedSeries scale(const TruncatedSeries& a, cplx s) {
    std::vector<cplx> c(a.coeffs());
    for (auto& x : c) x *= s;
    return TruncatedSeries(std::move(c));
}

/// Cauchy product, truncated. The first N+1 coefficients are exact: low
/// coefficients of a product depend only on low coefficients of the factors.
inline TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
    detail::require_same_degree(a, b);
    const int n = a.trunc_degree();
    std::vector<cplx> c(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        cplx sum = 0.0;
        for (int i = 0; i <= j; ++i) sum += a.coeff(i) * b.coeff(j - i);
        c[static_cast<size_t>(j)] = sum;
    }
    return TruncatedSeries(std::move(c));
}

/// k-th derivative. The top k coefficients of the result are unknowable from
/// a degree-N truncation and are set to zero; the prefix 0..N-k is exact.
inline TruncatedSeries differentiate(const TruncatedSeries& a, int order = 1) {
    if (order < 0) throw std::invalid_argument("differentiate: negative order");
    const int n = a.trunc_degree();
    std::vector<cplx> c(static_cast<size_t>(n) + 1);
    for (int j = 0; j + order <= n; ++j) {
        double fact = 1.0;
        for (int i = 1; i <= order; ++i) fact *= static_cast<double>(j + i);
        c[static_cast<size_t>(j)] = a.coeff(j + order) * fact;
    }
    return TruncatedSeries(std::move(c));
}

/// Horner evaluation of the truncated polynomial.
inline cplx evaluate(const TruncatedSeries& a, cplx z0) {
    cplx acc = 0.0;
    for (int j = a.trunc_degree(); j >= 0; --j) acc = acc * z0 + a.coeff(j);
    return acc;
}

/// Multiply by z^n, dropping coefficients past the truncation degree.
inline TruncatedSeries shift(const TruncatedSeries& a, int n) {
    if (n < 0) throw std::invalid_argument("shift: negative shift");
    const int N = a.trunc_degree();
    std::vector<cplx> c(static_cast<size_t>(N) + 1);
    for (int j = n; j <= N; ++j) c[static_cast<size_t>(j)] = a.coeff(j - n);
    return TruncatedSeries(std::move(c));
}

inline TruncatedSeries pow(const TruncatedSeries& a, int j) {
    if (j < 0) throw std::invalid_argument("pow: negative exponent");
    auto acc = TruncatedSeries::constant(1.0, a.trunc_degree());
    for (int i = 0; i < j; ++i) acc = multiply(acc, a);
    return acc;
}

/// Coefficients of (1 - q z)^{-s}: coeff_j = Gamma(s+j)/(Gamma(s) j!) q^j,
/// built by the multiplicative recurrence coeff_j = coeff_{j-1} q (s+j-1)/j.
/// This is the shared shape of the reproducing kernel, the derivative kernel
/// and the canonical symbols.
inline TruncatedSeries binomial_kernel_series(cplx q, double s, int trunc_degree) {
    if (s <= 0.0) throw std::invalid_argument("binomial_kernel_series: need s > 0");
    std::vector<cplx> c(static_cast<size_t>(trunc_degree) + 1);
    c[0] = 1.0;
    for (int j = 1; j <= trunc_degree; ++j)
        c[static_cast<size_t>(j)] =
            c[static_cast<size_t>(j - 1)] * q * ((s + j - 1.0) / j);
    return TruncatedSeries(std::move(c));
}

/// u^p for real p via the J.C.P. Miller recurrence; requires u(0) != 0.
/// Used for series of the form (1 - eta w phi(z))^{-(k+alpha+2)}.
inline TruncatedSeries pow_real(const TruncatedSeries& u, double p) {
    const cplx u0 = u.coeff(0);
    if (std::abs(u0) == 0.0)
        throw std::invalid_argument("pow_real: zero constant term");
    const int N = u.trunc_degree();
    std::vector<cplx> w(static_cast<size_t>(N) + 1);
    w[0] = std::pow(u0, cplx(p, 0.0));
    for (int n = 1; n <= N; ++n) {
        cplx sum = 0.0;
        for (int k = 1; k <= n; ++k)
            sum += ((p + 1.0) * k - n) * u.coeff(k) * w[static_cast<size_t>(n - k)];
        w[static_cast<size_t>(n)] = sum / (static_cast<double>(n) * u0);
    }
    return TruncatedSeries(std::move(w));
}

} // namespace bergman

#endif
