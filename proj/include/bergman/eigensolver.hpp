#ifndef BERGMAN_EIGENSOLVER_HPP
#define BERGMAN_EIGENSOLVER_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bergman/matrix.hpp"

namespace bergman {

struct EigenResult {
    std::vector<std::complex<double>> eigenvalues; // unordered
    int iterations = 0;
    bool converged = true;
};

/// Householder reduction to upper Hessenberg form; unitary similarity, so
/// the spectrum and the Frobenius norm are preserved.
inline CMatrix hessenberg(const CMatrix& m) {
    using C = std::complex<double>;
    const int n = m.dim();
    CMatrix h = m;
    for (int k = 0; k < n - 2; ++k) {
        // Householder vector for column k, rows k+1..n-1.
        double colnorm = 0.0;
        for (int i = k + 1; i < n; ++i) colnorm += std::norm(h(i, k));
        colnorm = std::sqrt(colnorm);
        if (colnorm == 0.0) continue;
        C x0 = h(k + 1, k);
        C phase = (std::abs(x0) == 0.0) ? C(1.0) : x0 / std::abs(x0);
        C alpha = -phase * colnorm;
        std::vector<C> v(static_cast<size_t>(n), C(0.0));
        v[static_cast<size_t>(k) + 1] = x0 - alpha;
        for (int i = k + 2; i < n; ++i) v[static_cast<size_t>(i)] = h(i, k);
        double vnorm_sq = 0.0;
        for (int i = k + 1; i < n; ++i) vnorm_sq += std::norm(v[static_cast<size_t>(i)]);
        if (vnorm_sq == 0.0) continue;

        // h <- (I - 2 v v^H / |v|^2) h
        for (int j = 0; j < n; ++j) {
            C dot = 0.0;
            for (int i = k + 1; i < n; ++i) dot += std::conj(v[static_cast<size_t>(i)]) * h(i, j);
            dot *= 2.0 / vnorm_sq;
            for (int i = k + 1; i < n; ++i) h(i, j) -= dot * v[static_cast<size_t>(i)];
        }
        // h <- h (I - 2 v v^H / |v|^2)
        for (int i = 0; i < n; ++i) {
            C dot = 0.0;
            for (int j = k + 1; j < n; ++j) dot += h(i, j) * v[static_cast<size_t>(j)];
            dot *= 2.0 / vnorm_sq;
            for (int j = k + 1; j < n; ++j) h(i, j) -= dot * std::conj(v[static_cast<size_t>(j)]);
        }
        // Clean the annihilated part of the column.
        h(k + 1, k) = alpha;
        for (int i = k + 2; i < n; ++i) h(i, k) = 0.0;
    }
    return h;
}

namespace detail {

/// Eigenvalue of [[a,b],[c,d]] closest to d (Wilkinson shift).
inline std::complex<double> wilkinson_shift(std::complex<double> a, std::complex<double> b,
                                            std::complex<double> c, std::complex<double> d) {
    using C = std::complex<double>;
    const C tr = a + d;
    const C det = a * d - b * c;
    C disc = std::sqrt(tr * tr - 4.0 * det);
    C l1 = (tr + disc) / 2.0;
    C l2 = (tr - disc) / 2.0;
    return (std::abs(l1 - d) < std::abs(l2 - d)) ? l1 : l2;
}

/// Complex Givens rotation zeroing b against a: returns (c, s) with c real,
/// [c conj(s); -s c] [a; b] = [r; 0].
inline std::pair<double, std::complex<double>> givens(std::complex<double> a,
                                                      std::complex<double> b) {
    const double r = std::sqrt(std::norm(a) + std::norm(b));
    if (r == 0.0) return {1.0, 0.0};
    if (std::abs(a) == 0.0) return {0.0, std::conj(b) / std::abs(b)};
    const double c = std::abs(a) / r;
    const std::complex<double> s = (std::conj(a) / std::abs(a)) * b / r;
    return {c, s};
}

/// Crude two-sided diagonal balancing pass (powers of 2), for stress tests
/// on badly scaled inputs. Similarity transform, spectrum unchanged.
inline void balance(CMatrix& a) {
    const int n = a.dim();
    bool again = true;
    int sweeps = 0;
    while (again && sweeps++ < 20) {
        again = false;
        for (int i = 0; i < n; ++i) {
            double row = 0.0, col = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                row += std::abs(a(i, j));
                col += std::abs(a(j, i));
            }
            if (row == 0.0 || col == 0.0) continue;
            double f = 1.0;
            while (col * 2.0 < row) { col *= 2.0; row /= 2.0; f *= 2.0; }
            while (col >= row * 4.0) { col /= 2.0; row *= 2.0; f /= 2.0; }
            if (f != 1.0) {
                again = true;
                for (int j = 0; j < n; ++j) { a(i, j) /= f; a(j, i) *= f; }
            }
        }
    }
}

} // namespace detail

/// All eigenvalues via single-shift complex QR on the Hessenberg form.
/// Deflation when a subdiagonal entry drops below tol * (|h_ii| + |h_jj|).
inline EigenResult eigenvalues(const CMatrix& m, double tol = 1e-14, int max_iter = 0,
                               bool do_balance = false) {
    using C = std::complex<double>;
    const int n = m.dim();
    if (max_iter <= 0) max_iter = 30 * n;

    CMatrix work = m;
    if (do_balance) detail::balance(work);
    CMatrix h = hessenberg(work);

    EigenResult res;
    res.eigenvalues.assign(static_cast<size_t>(n), C(0.0));

    auto subdiag_small = [&](int i) {
        const double thresh = tol * (std::abs(h(i, i)) + std::abs(h(i + 1, i + 1)));
        return std::abs(h(i + 1, i)) <= std::max(thresh, std::numeric_limits<double>::min());
    };

    int hi = n - 1;
    int iters = 0;
    while (hi >= 0) {
        if (hi == 0) {
            res.eigenvalues[0] = h(0, 0);
            break;
        }
        if (subdiag_small(hi - 1)) {
            res.eigenvalues[static_cast<size_t>(hi)] = h(hi, hi);
            --hi;
            continue;
        }
        if (iters >= max_iter) {
            // Non-convergence: flag and report the remaining diagonal as-is.
            res.converged = false;
            for (int i = 0; i <= hi; ++i) res.eigenvalues[static_cast<size_t>(i)] = h(i, i);
            break;
        }
        ++iters;

        // Active block [lo, hi].
        int lo = hi;
        while (lo > 0 && !subdiag_small(lo - 1)) --lo;

        const C sigma = detail::wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi),
                                                h(hi, hi - 1), h(hi, hi));

        // Explicit QR step on the active block: H - sigma I = QR, H <- RQ + sigma I.
        for (int i = lo; i <= hi; ++i) h(i, i) -= sigma;
        std::vector<std::pair<double, C>> rots(static_cast<size_t>(hi - lo));
        for (int i = lo; i < hi; ++i) {
            auto [c, s] = detail::givens(h(i, i), h(i + 1, i));
            rots[static_cast<size_t>(i - lo)] = {c, s};
            for (int j = i; j <= hi; ++j) {
                const C t1 = h(i, j), t2 = h(i + 1, j);
                h(i, j) = c * t1 + std::conj(s) * t2;
                h(i + 1, j) = -s * t1 + c * t2;
            }
        }
        for (int i = lo; i < hi; ++i) {
            const auto [c, s] = rots[static_cast<size_t>(i - lo)];
            for (int j = lo; j <= std::min(i + 2, hi); ++j) {
                const C t1 = h(j, i), t2 = h(j, i + 1);
                h(j, i) = c * t1 + s * t2;
                h(j, i + 1) = -std::conj(s) * t1 + c * t2;
            }
        }
        for (int i = lo; i <= hi; ++i) h(i, i) += sigma;
    }
    res.iterations = iters;
    return res;
}

struct SpectrumMatch {
    double max_distance = 0.0;
    std::vector<std::pair<int, int>> pairing; // (index in a, index in b)
};

/// Greedy minimal bipartite matching: repeatedly pair the globally closest
/// unmatched values. Returns the pairing and its worst pair distance.
inline SpectrumMatch match_spectra(const std::vector<std::complex<double>>& a,
                                   const std::vector<std::complex<double>>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("match_spectra: length mismatch");
    const int n = static_cast<int>(a.size());
    std::vector<bool> used_a(static_cast<size_t>(n)), used_b(static_cast<size_t>(n));
    SpectrumMatch match;
    for (int round = 0; round < n; ++round) {
        double best = std::numeric_limits<double>::infinity();
        int bi = -1, bj = -1;
        for (int i = 0; i < n; ++i) {
            if (used_a[static_cast<size_t>(i)]) continue;
            for (int j = 0; j < n; ++j) {
                if (used_b[static_cast<size_t>(j)]) continue;
                const double d = std::abs(a[static_cast<size_t>(i)] - b[static_cast<size_t>(j)]);
                if (d < best) { best = d; bi = i; bj = j; }
            }
        }
        used_a[static_cast<size_t>(bi)] = used_b[static_cast<size_t>(bj)] = true;
        match.pairing.emplace_back(bi, bj);
        match.max_distance = std::max(match.max_distance, best);
    }
    return match;
}

} // namespace bergman

#endif
