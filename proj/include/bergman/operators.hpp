#ifndef BERGMAN_OPERATORS_HPP
#define BERGMAN_OPERATORS_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bergman/matrix.hpp"
#include "bergman/series.hpp"
#include "bergman/space.hpp"

namespace bergman {

/// Antilinear conjugation f -> mu * conj(f(conj(eta z))); on Taylor
/// coefficients this is f_j -> mu eta^j conj(f_j).
struct Conjugation {
    cplx mu;
    cplx eta;

    Conjugation(cplx mu_, cplx eta_) : mu(mu_), eta(eta_) {
        if (std::abs(std::abs(mu) - 1.0) > 1e-12 || std::abs(std::abs(eta) - 1.0) > 1e-12)
            throw std::invalid_argument("Conjugation: mu and eta must be unimodular");
    }
};

inline TruncatedSeries conjugate(const Conjugation& c, const TruncatedSeries& f) {
    const int N = f.trunc_degree();
    std::vector<cplx> out(static_cast<size_t>(N) + 1);
    cplx eta_pow = 1.0;
    for (int j = 0; j <= N; ++j) {
        out[static_cast<size_t>(j)] = c.mu * eta_pow * std::conj(f.coeff(j));
        eta_pow *= c.eta;
    }
    return TruncatedSeries(std::move(out));
}

enum class SymbolMode { Explicit, CanonicalSymmetric, CanonicalHermitian };

/// The data (c_k, psi_k)_{k=1..n} and phi defining the operator
/// sum_k c_k psi_k(z) f^(k)(phi(z)). Canonical factories build the symbol
/// forms that make the operator complex symmetric or Hermitian.
class SymbolSet {
public:
    static SymbolSet explicit_symbols(const SpaceContext& ctx, std::vector<cplx> c,
                                      std::vector<TruncatedSeries> psi, TruncatedSeries phi) {
        if (c.empty() || c.size() != psi.size())
            throw std::invalid_argument("SymbolSet: need matching nonempty c and psi lists");
        for (const auto& p : psi) ctx.require_degree(p);
        ctx.require_degree(phi);
        validate_self_map(phi);
        return SymbolSet(SymbolMode::Explicit, std::move(c), std::move(psi), std::move(phi));
    }

    /// psi_k(z) = a_k z^k / (1 - eta b z)^{k+alpha+2},
    /// phi(z)   = b + c_phi z / (1 - eta b z).
    static SymbolSet canonical_symmetric(const SpaceContext& ctx, std::vector<cplx> c,
                                         std::vector<cplx> a, cplx b, cplx c_phi, cplx eta) {
        if (c.empty() || c.size() != a.size())
            throw std::invalid_argument("SymbolSet: need matching nonempty c and a lists");
        if (std::abs(b) >= 1.0)
            throw std::domain_error("SymbolSet: phi is not a self-map of the unit disk (|b| >= 1)");
        if (std::abs(std::abs(eta) - 1.0) > 1e-12)
            throw std::invalid_argument("SymbolSet: eta must be unimodular");
        const int N = ctx.trunc_degree();
        std::vector<TruncatedSeries> psi;
        psi.reserve(a.size());
        for (size_t k = 1; k <= a.size(); ++k) {
            auto base = binomial_kernel_series(eta * b, static_cast<double>(k) + ctx.alpha() + 2.0, N);
            psi.push_back(scale(shift(base, static_cast<int>(k)), a[k - 1]));
        }
        auto phi = add(TruncatedSeries::constant(b, N),
                       scale(shift(binomial_kernel_series(eta * b, 1.0, N), 1), c_phi));
        validate_self_map(phi);
        SymbolSet s(SymbolMode::CanonicalSymmetric, std::move(c), std::move(psi), std::move(phi));
        s.a_ = std::move(a);
        s.b_ = b;
        s.c_phi_ = c_phi;
        s.eta_ = eta;
        return s;
    }

    /// Hermitian family: the symmetric form with eta b replaced by conj(b)
    /// and real a_k, c_phi.
    static SymbolSet canonical_hermitian(const SpaceContext& ctx, std::vector<cplx> c,
                                         std::vector<double> a, cplx b, double c_phi) {
        if (c.empty() || c.size() != a.size())
            throw std::invalid_argument("SymbolSet: need matching nonempty c and a lists");
        if (std::abs(b) >= 1.0)
            throw std::domain_error("SymbolSet: phi is not a self-map of the unit disk (|b| >= 1)");
        const int N = ctx.trunc_degree();
        std::vector<TruncatedSeries> psi;
        std::vector<cplx> ac;
        psi.reserve(a.size());
        for (size_t k = 1; k <= a.size(); ++k) {
            auto base = binomial_kernel_series(std::conj(b), static_cast<double>(k) + ctx.alpha() + 2.0, N);
            psi.push_back(scale(shift(base, static_cast<int>(k)), a[k - 1]));
            ac.emplace_back(a[k - 1]);
        }
        auto phi = add(TruncatedSeries::constant(b, N),
                       scale(shift(binomial_kernel_series(std::conj(b), 1.0, N), 1), c_phi));
        validate_self_map(phi);
        SymbolSet s(SymbolMode::CanonicalHermitian, std::move(c), std::move(psi), std::move(phi));
        s.a_ = std::move(ac);
        s.b_ = b;
        s.c_phi_ = c_phi;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()); }
    const std::vector<cplx>& weights() const { return c_; }
    cplx weight(int k) const { return c_[static_cast<size_t>(k) - 1]; } // 1-based
    const TruncatedSeries& psi(int k) const { return psi_[static_cast<size_t>(k) - 1]; }
    const TruncatedSeries& phi() const { return phi_; }
    SymbolMode mode() const { return mode_; }

    bool is_canonical() const { return mode_ != SymbolMode::Explicit; }
    const std::vector<cplx>& canonical_a() const { return a_; }
    cplx canonical_b() const { return b_; }
    cplx canonical_c_phi() const { return c_phi_; }
    /// The conjugation parameter the symmetric family was built with
    /// (eta = 1 for the Hermitian family with real b).
    cplx canonical_eta() const { return eta_; }

    /// Smallest 1-based k with c_k != 0, or 0 when all weights vanish.
    int min_nonzero_weight_index() const {
        for (size_t k = 0; k < c_.size(); ++k)
            if (std::abs(c_[k]) != 0.0) return static_cast<int>(k) + 1;
        return 0;
    }

    /// Sample |phi| on a circle near the boundary; composition only makes
    /// sense when phi maps the disk into itself, and the canonical family
    /// has no simple parameter criterion for that.
    static void validate_self_map(const TruncatedSeries& phi) {
        constexpr int kAngles = 256;
        constexpr double kRadius = 0.999;
        double max_mod = 0.0;
        for (int i = 0; i < kAngles; ++i) {
            const double theta = 2.0 * 3.14159265358979323846 * i / kAngles;
            const cplx z = kRadius * cplx(std::cos(theta), std::sin(theta));
            max_mod = std::max(max_mod, std::abs(evaluate(phi, z)));
        }
        if (max_mod >= 1.0 - 1e-9)
            throw std::domain_error("SymbolSet: phi is not a self-map of the unit disk");
    }

private:
    SymbolSet(SymbolMode mode, std::vector<cplx> c, std::vector<TruncatedSeries> psi,
              TruncatedSeries phi)
        : mode_(mode), c_(std::move(c)), psi_(std::move(psi)), phi_(std::move(phi)) {}

    SymbolMode mode_;
    std::vector<cplx> c_;
    std::vector<TruncatedSeries> psi_;
    TruncatedSeries phi_;
    std::vector<cplx> a_;
    cplx b_ = 0.0;
    cplx c_phi_ = 0.0;
    cplx eta_ = 1.0;
};

/// Matrix of f -> psi * f^(k) o phi in the orthonormal basis. Column j is
/// assembled in the monomial basis as psi * (j!/(j-k)!) phi^{j-k} and then
/// rescaled entrywise by s_j / s_i; the monomial columns are prefix-exact.
inline CMatrix assemble_D(const SpaceContext& ctx, const TruncatedSeries& psi,
                          const TruncatedSeries& phi, int k) {
    ctx.require_degree(psi);
    ctx.require_degree(phi);
    const int N = ctx.trunc_degree();
    if (k < 1 || k > N) throw std::invalid_argument("assemble_D: derivative order out of range");
    CMatrix m(N + 1);
    auto phi_pow = TruncatedSeries::constant(1.0, N); // phi^{j-k}, updated incrementally
    for (int j = k; j <= N; ++j) {
        double fall = 1.0; // j!/(j-k)!
        for (int i = 0; i < k; ++i) fall *= static_cast<double>(j - i);
        auto col = scale(multiply(psi, phi_pow), fall);
        for (int i = 0; i <= N; ++i)
            m(i, j) = col.coeff(i) * (ctx.basis_scale(j) / ctx.basis_scale(i));
        if (j < N) phi_pow = multiply(phi_pow, phi);
    }
    return m;
}

/// Matrix of sum_k c_k D_{k, psi_k, phi}.
inline CMatrix assemble_L(const SpaceContext& ctx, const SymbolSet& s) {
    CMatrix m(ctx.trunc_degree() + 1);
    for (int k = 1; k <= s.order(); ++k) {
        if (s.weight(k) == cplx(0.0)) continue;
        m = m + s.weight(k) * assemble_D(ctx, s.psi(k), s.phi(), k);
    }
    return m;
}

inline CMatrix adjoint(const CMatrix& m) { return m.adjoint(); }

/// Closed-form adjoint action on the reproducing kernel:
/// L* K_w = sum_k conj(c_k psi_k(w)) K^[k]_{phi(w)}.
inline TruncatedSeries adjoint_on_kernel(const SpaceContext& ctx, const SymbolSet& s, cplx w) {
    if (std::abs(w) >= 1.0)
        throw std::domain_error("adjoint_on_kernel: w outside the unit disk");
    const cplx phi_w = evaluate(s.phi(), w);
    if (std::abs(phi_w) >= 1.0)
        throw std::domain_error("adjoint_on_kernel: phi(w) outside the unit disk");
    auto acc = TruncatedSeries::zero(ctx.trunc_degree());
    for (int k = 1; k <= s.order(); ++k) {
        const cplx coef = std::conj(s.weight(k) * evaluate(s.psi(k), w));
        if (coef == cplx(0.0)) continue;
        acc = add(acc, scale(derivative_kernel(ctx, phi_w, k), coef));
    }
    return acc;
}

/// Matrix of C T* C for the antilinear sandwich with C = C_{mu,eta}:
/// (C T* C)_{ij} = eta^i m_{ji} eta^{-j}. The mu factors cancel.
inline CMatrix conjugation_transform(const Conjugation& c, const CMatrix& m) {
    const int n = m.dim();
    std::vector<cplx> eta_pow(static_cast<size_t>(n));
    eta_pow[0] = 1.0;
    for (int i = 1; i < n; ++i) eta_pow[static_cast<size_t>(i)] = eta_pow[static_cast<size_t>(i) - 1] * c.eta;
    CMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out(i, j) = eta_pow[static_cast<size_t>(i)] * m(j, i) * std::conj(eta_pow[static_cast<size_t>(j)]);
    return out;
}

} // namespace bergman

#endif
