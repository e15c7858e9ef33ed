#ifndef BERGMAN_SPACE_HPP
#define BERGMAN_SPACE_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "bergman/series.hpp"

namespace bergman {

/// The weighted Bergman space of weight alpha > -1, truncated at degree N.
/// Holds the monomial norm table ||z^j||^2 = j! Gamma(alpha+2)/Gamma(j+alpha+2)
/// and the orthonormal-basis scales s_j = 1/sqrt(||z^j||^2).
///
/// The norm table is built by the ratio recurrence
///   ||z^{j+1}||^2 = ||z^j||^2 (j+1)/(j+alpha+2),
/// which stays in range for N up to 512 where Gamma quotients would overflow.
class SpaceContext {
public:
    SpaceContext(double alpha, int trunc_degree) : alpha_(alpha), N_(trunc_degree) {
        if (alpha <= -1.0) throw std::invalid_argument("SpaceContext: need alpha > -1");
        if (trunc_degree < 0) throw std::invalid_argument("SpaceContext: negative degree");
        norm_sq_.resize(static_cast<size_t>(N_) + 1);
        basis_scale_.resize(static_cast<size_t>(N_) + 1);
        norm_sq_[0] = 1.0;
        for (int j = 0; j < N_; ++j)
            norm_sq_[static_cast<size_t>(j) + 1] =
                norm_sq_[static_cast<size_t>(j)] * (j + 1.0) / (j + alpha_ + 2.0);
        for (int j = 0; j <= N_; ++j)
            basis_scale_[static_cast<size_t>(j)] = 1.0 / std::sqrt(norm_sq_[static_cast<size_t>(j)]);
    }

    double alpha() const { return alpha_; }
    int trunc_degree() const { return N_; }
    double norm_sq(int j) const { return norm_sq_[static_cast<size_t>(j)]; }
    /// s_j with gamma_j = s_j z^j.
    double basis_scale(int j) const { return basis_scale_[static_cast<size_t>(j)]; }

    /// p_n = (alpha+2)(alpha+3)...(alpha+n+1), with p_0 = 1.
    double derivative_kernel_factor(int n) const {
        double p = 1.0;
        for (int i = 1; i <= n; ++i) p *= alpha_ + 1.0 + i;
        return p;
    }

    void require_degree(const TruncatedSeries& f) const {
        if (f.trunc_degree() != N_)
            throw std::invalid_argument("SpaceContext: series degree does not match context");
    }

private:
    double alpha_;
    int N_;
    std::vector<double> norm_sq_;
    std::vector<double> basis_scale_;
};

/// <f, g> = sum_j f_j conj(g_j) ||z^j||^2, by monomial orthogonality.
inline cplx inner_product(const SpaceContext& ctx, const TruncatedSeries& f,
                          const TruncatedSeries& g) {
    ctx.require_degree(f);
    ctx.require_degree(g);
    cplx sum = 0.0;
    for (int j = 0; j <= ctx.trunc_degree(); ++j)
        sum += f.coeff(j) * std::conj(g.coeff(j)) * ctx.norm_sq(j);
    return sum;
}

inline double space_norm(const SpaceContext& ctx, const TruncatedSeries& f) {
    return std::sqrt(std::abs(inner_product(ctx, f, f)));
}

/// K_w(z) = (1 - conj(w) z)^{-(alpha+2)}, truncated.
inline TruncatedSeries reproducing_kernel(const SpaceContext& ctx, cplx w) {
    if (std::abs(w) >= 1.0)
        throw std::domain_error("reproducing_kernel: w outside the unit disk");
    return binomial_kernel_series(std::conj(w), ctx.alpha() + 2.0, ctx.trunc_degree());
}

/// K^[n]_w(z) = p_n z^n (1 - conj(w) z)^{-(n+alpha+2)}, truncated.
inline TruncatedSeries derivative_kernel(const SpaceContext& ctx, cplx w, int n) {
    if (std::abs(w) >= 1.0)
        throw std::domain_error("derivative_kernel: w outside the unit disk");
    if (n < 1 || n > ctx.trunc_degree())
        throw std::invalid_argument("derivative_kernel: order out of range");
    auto base = binomial_kernel_series(std::conj(w), n + ctx.alpha() + 2.0, ctx.trunc_degree());
    return scale(shift(base, n), ctx.derivative_kernel_factor(n));
}

/// Coordinates of f in the orthonormal basis: v_j = f_j / s_j.
inline std::vector<cplx> monomial_to_basis(const SpaceContext& ctx, const TruncatedSeries& f) {
    ctx.require_degree(f);
    std::vector<cplx> v(static_cast<size_t>(ctx.trunc_degree()) + 1);
    for (int j = 0; j <= ctx.trunc_degree(); ++j)
        v[static_cast<size_t>(j)] = f.coeff(j) / ctx.basis_scale(j);
    return v;
}

inline TruncatedSeries basis_to_monomial(const SpaceContext& ctx, const std::vector<cplx>& v) {
    if (static_cast<int>(v.size()) != ctx.trunc_degree() + 1)
        throw std::invalid_argument("basis_to_monomial: length mismatch");
    std::vector<cplx> c(v.size());
    for (int j = 0; j <= ctx.trunc_degree(); ++j)
        c[static_cast<size_t>(j)] = v[static_cast<size_t>(j)] * ctx.basis_scale(j);
    return TruncatedSeries(std::move(c));
}

} // namespace bergman

#endif
