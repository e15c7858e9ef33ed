// Acceptance suite: one line per criterion, exit nonzero on any failure.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bergman/checks.hpp"
#include "bergman/config.hpp"
#include "bergman/report.hpp"
#include "oracles.hpp"

using namespace bergman;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok, double worst = -1.0) {
    std::printf("%s criterion %2d: %s", ok ? "PASS" : "FAIL", criterion, what.c_str());
    if (worst >= 0.0) std::printf("  (worst residual %.3e)", worst);
    std::printf("\n");
    if (!ok) ++g_failures;
}

TruncatedSeries random_poly(int N, int max_deg, std::mt19937& rng) {
    std::uniform_real_distribution<double> radius(0.0, 1.0), angle(0.0, 6.283185307179586);
    std::vector<cplx> c(static_cast<size_t>(N) + 1, cplx(0.0));
    for (int j = 0; j <= max_deg; ++j) {
        const double r = radius(rng), t = angle(rng);
        c[static_cast<size_t>(j)] = r * cplx(std::cos(t), std::sin(t));
    }
    return TruncatedSeries(std::move(c));
}

std::vector<cplx> disk_points(int count, double radius, std::mt19937& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<cplx> pts;
    for (int i = 0; i < count; ++i) {
        const double r = radius * std::sqrt(unit(rng));
        const double t = 6.283185307179586 * unit(rng);
        pts.emplace_back(r * std::cos(t), r * std::sin(t));
    }
    return pts;
}

// --- Criterion 1: reproducing identities --------------------------------
void criterion_reproducing() {
    std::mt19937 rng(0);
    SpaceContext ctx(0.0, 64);
    const auto ws = disk_points(20, 0.8, rng);
    double worst0 = 0.0, worstk = 0.0;
    bool ok = true;
    for (int trial = 0; trial < 100; ++trial) {
        auto f = random_poly(64, 60, rng);
        const double fn = space_norm(ctx, f);
        for (const cplx w : ws) {
            const auto kw = reproducing_kernel(ctx, w);
            const double r0 = std::abs(inner_product(ctx, f, kw) - evaluate(f, w));
            worst0 = std::max(worst0, r0 / (1.0 + fn));
            ok &= r0 <= 1e-10 * (1.0 + fn);
            for (int k = 1; k <= 3; ++k) {
                const auto kd = derivative_kernel(ctx, w, k);
                const cplx want = evaluate(differentiate(f, k), w);
                const double rk = std::abs(inner_product(ctx, f, kd) - want);
                worstk = std::max(worstk, rk / (1.0 + std::abs(want)));
                ok &= rk <= 1e-9 * (1.0 + std::abs(want));
            }
        }
    }
    report(1, "reproducing identities for K_w and K^[k]_w", ok, std::max(worst0, worstk));
}

// --- Criterion 2: adjoint-on-kernel cross-check --------------------------
void criterion_adjoint_kernel() {
    std::mt19937 rng(0);
    SpaceContext ctx(0.0, 64);
    std::vector<SymbolSet> sets;
    sets.push_back(SymbolSet::canonical_symmetric(ctx, {cplx(1.0)}, {cplx(1.0)}, 0.3, 0.4, 1.0));
    sets.push_back(SymbolSet::canonical_symmetric(ctx, {cplx(1.0), cplx(0.5)},
                                                  {cplx(1.0), cplx(0.4)}, cplx(0.2, 0.1), 0.3,
                                                  cplx(0.0, 1.0)));
    sets.push_back(SymbolSet::canonical_symmetric(ctx, {cplx(0.0), cplx(1.0)},
                                                  {cplx(0.7), cplx(0.9)}, 0.0, 0.5, 1.0));
    sets.push_back(SymbolSet::canonical_hermitian(ctx, {cplx(1.0)}, {0.5}, cplx(0.2, 0.1), 0.3));
    sets.push_back(SymbolSet::canonical_hermitian(ctx, {cplx(0.6), cplx(0.3)}, {0.5, 0.2},
                                                  0.25, 0.35));
    for (int i = 0; i < 5; ++i) {
        auto psi1 = random_poly(64, 4, rng);
        auto psi2 = random_poly(64, 5, rng);
        auto phi = scale(TruncatedSeries::monomial(1, 1.0, 64), cplx(0.3, 0.2));
        sets.push_back(SymbolSet::explicit_symbols(ctx, {cplx(1.0), cplx(0.4, 0.2)},
                                                   {psi1, psi2}, phi));
    }
    const auto ws = disk_points(10, 0.6, rng);
    const int T = trusted_degree(ctx);
    double worst = 0.0;
    bool ok = true;
    for (const auto& s : sets) {
        const auto mh = assemble_L(ctx, s).adjoint();
        for (const cplx w : ws) {
            const auto closed = adjoint_on_kernel(ctx, s, w);
            const auto via = basis_to_monomial(
                ctx, mh.apply(monomial_to_basis(ctx, reproducing_kernel(ctx, w))));
            double res = 0.0;
            for (int j = 0; j <= T; ++j)
                res += std::norm(closed.coeff(j) - via.coeff(j)) * ctx.norm_sq(j);
            res = std::sqrt(res);
            worst = std::max(worst, res);
            ok &= res <= 1e-8;
        }
    }
    report(2, "adjoint-on-kernel closed form vs matrix route", ok, worst);
}

// --- Criterion 3: complex symmetry grid + falsification ------------------
void criterion_symmetry() {
    bool ok = true;
    double worst_pass = 0.0, weakest_falsify = 1e300;
    for (double alpha : {0.0, 0.5, 1.0})
        for (double b_abs : {0.0, 0.3})
            for (double cphi_abs : {0.2, 0.4})
                for (int n : {1, 2, 3})
                    for (cplx eta : {cplx(1.0, 0.0), cplx(0.0, 1.0)}) {
                        SpaceContext ctx(alpha, 64);
                        std::vector<cplx> c, a;
                        for (int k = 1; k <= n; ++k) {
                            c.emplace_back(1.0 / k, 0.1);
                            a.emplace_back(0.8, -0.1 * k);
                        }
                        const cplx b(b_abs, 0.0), cphi(cphi_abs, 0.0);
                        auto sym = SymbolSet::canonical_symmetric(ctx, c, a, b, cphi, eta);
                        Conjugation conj(1.0, eta);
                        auto rep = check_symmetry(ctx, sym, conj);
                        worst_pass = std::max(worst_pass, rep.residual);
                        ok &= rep.pass;

                        // three perturbation families, frozen threshold 1e-4
                        std::vector<TruncatedSeries> psi;
                        for (int k = 1; k <= n; ++k) psi.push_back(sym.psi(k));
                        auto psi_noisy = psi;
                        psi_noisy[0] = add(psi_noisy[0], TruncatedSeries::monomial(2, 0.01, 64));
                        auto bad_psi = SymbolSet::explicit_symbols(ctx, c, psi_noisy, sym.phi());
                        const double r1 = check_symmetry(ctx, bad_psi, conj).residual;

                        auto phi_noisy = add(sym.phi(), TruncatedSeries::monomial(2, 0.01, 64));
                        auto bad_phi = SymbolSet::explicit_symbols(ctx, c, psi, phi_noisy);
                        const double r2 = check_symmetry(ctx, bad_phi, conj).residual;

                        weakest_falsify = std::min({weakest_falsify, r1, r2});
                        ok &= r1 >= 1e-4 && r2 >= 1e-4;

                        // eta mismatch: vacuous at b = 0 (diagonal matrix is
                        // entrywise-symmetric for every eta), so test at b != 0
                        if (b_abs != 0.0) {
                            const cplx eta_off = eta * cplx(std::cos(0.1), std::sin(0.1));
                            const double r3 =
                                check_symmetry(ctx, sym, Conjugation(1.0, eta_off)).residual;
                            weakest_falsify = std::min(weakest_falsify, r3);
                            ok &= r3 >= 1e-4;
                        }
                    }
    report(3, "symmetry grid passes and perturbations falsify", ok, worst_pass);
    std::printf("      (weakest falsification residual %.3e, threshold 1e-04)\n", weakest_falsify);
}

// --- Criterion 4: normality for b = 0 ------------------------------------
void criterion_normal() {
    bool ok = true;
    double worst = 0.0;
    for (double alpha : {0.0, 0.5, 1.0})
        for (double cphi : {0.2, 0.5})
            for (int n : {1, 2, 3}) {
                SpaceContext ctx(alpha, 64);
                std::vector<cplx> c, a;
                for (int k = 1; k <= n; ++k) {
                    c.emplace_back(0.9 / k, 0.2);
                    a.emplace_back(1.0, 0.1 * k);
                }
                auto sym = SymbolSet::canonical_symmetric(ctx, c, a, 0.0, cphi, 1.0);
                auto rep = check_normal(ctx, sym, 1e-10);
                worst = std::max(worst, rep.residual);
                ok &= rep.pass && rep.hypothesis_met;
            }
    report(4, "normality and basis-norm identity for phi(0) = 0 families", ok, worst);
}

// --- Criterion 5: Hermitian grid + falsification --------------------------
void criterion_hermitian() {
    bool ok = true;
    double worst = 0.0;
    for (double alpha : {0.0, 0.5, 1.0})
        for (cplx b : {cplx(0.0, 0.0), cplx(0.2, 0.1)})
            for (double cphi : {0.2, 0.35})
                for (int n : {1, 2}) {
                    SpaceContext ctx(alpha, 64);
                    std::vector<cplx> c;
                    std::vector<double> a;
                    for (int k = 1; k <= n; ++k) {
                        c.emplace_back(1.0 / k, 0.0);
                        a.push_back(0.6 / k);
                    }
                    auto herm = SymbolSet::canonical_hermitian(ctx, c, a, b, cphi);
                    auto rep = check_hermitian(ctx, herm);
                    worst = std::max(worst, rep.residual);
                    ok &= rep.pass;

                    // non-real a_1 falsifies
                    std::vector<TruncatedSeries> psi;
                    for (int k = 1; k <= n; ++k) psi.push_back(herm.psi(k));
                    psi[0] = scale(psi[0], cplx(0.0, 1.0));
                    auto bad = SymbolSet::explicit_symbols(ctx, c, psi, herm.phi());
                    ok &= !check_hermitian(ctx, bad).pass;
                }
    report(5, "Hermitian grid passes and non-real a_1 falsifies", ok, worst);
}

// --- Criterion 6: kernel shape --------------------------------------------
void criterion_kernel() {
    SpaceContext ctx(0.0, 64);
    bool ok = true;
    double worst = 0.0;
    const std::vector<std::vector<cplx>> weights = {
        {cplx(1.0), cplx(1.0)}, {cplx(0.0), cplx(1.0)}, {cplx(0.0), cplx(0.0), cplx(1.0)}};
    for (const auto& c : weights) {
        std::vector<cplx> a(c.size(), cplx(1.0));
        auto sym = SymbolSet::canonical_symmetric(ctx, c, a, 0.2, 0.4, 1.0);
        auto m = assemble_L(ctx, sym);
        const int m_min = sym.min_nonzero_weight_index();
        for (int j = 0; j < m_min; ++j) {
            double col = 0.0, row = 0.0;
            for (int i = 0; i <= 64; ++i) {
                col += std::norm(m(i, j));
                row += std::norm(m(j, i));
            }
            worst = std::max({worst, std::sqrt(col), std::sqrt(row)});
            ok &= std::sqrt(col) <= 1e-10 && std::sqrt(row) <= 1e-10;
        }
        for (int j = m_min; j <= 32; ++j) {
            double col = 0.0;
            for (int i = 0; i <= 64; ++i) col += std::norm(m(i, j));
            ok &= std::sqrt(col) >= 1e-3;
        }
        ok &= check_kernel(ctx, sym).pass;
    }
    report(6, "kernel of L and L* is exactly the predicted polynomial space", ok, worst);
}

// --- Criterion 7: closed-form spectrum vs QR -------------------------------
void criterion_spectrum() {
    bool ok = true;
    double worst_pair = 0.0, worst_vec = 0.0;
    for (double alpha : {0.0, 0.5})
        for (double cphi : {0.3, 0.5})
            for (int n : {1, 2, 3}) {
                SpaceContext ctx(alpha, 64);
                std::vector<cplx> c, a;
                for (int k = 1; k <= n; ++k) {
                    c.emplace_back(1.0 / k, 0.15);
                    a.emplace_back(0.9, -0.05 * k);
                }
                auto sym = SymbolSet::canonical_symmetric(ctx, c, a, 0.0, cphi, 1.0);
                auto rep = check_spectrum(ctx, sym, 1e-10);
                worst_pair = std::max(worst_pair, rep.pairing_distance);
                worst_vec = std::max(worst_vec, rep.max_eigvec_residual);
                ok &= rep.hypothesis_met && rep.numerical.converged;
                ok &= rep.pairing_distance <= 1e-10 && rep.max_eigvec_residual <= 1e-12;
            }
    report(7, "closed-form spectrum matches QR eigenvalues and eigenvectors", ok,
           std::max(worst_pair, worst_vec));
}

// --- Criterion 8: eigensolver against the characteristic-polynomial oracle -
void criterion_eigensolver() {
    std::mt19937 rng(0);
    bool ok = true;
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        auto m = oracles::random_matrix(8, rng);
        auto qr = eigenvalues(m);
        ok &= qr.converged;
        auto roots = oracles::polynomial_roots(oracles::characteristic_polynomial(m));
        const double d = match_spectra(qr.eigenvalues, roots).max_distance;
        worst = std::max(worst, d);
        ok &= d <= 1e-8;

        cplx sum = 0.0, prod = 1.0;
        for (const cplx& l : qr.eigenvalues) {
            sum += l;
            prod *= l;
        }
        ok &= std::abs(sum - m.trace()) <= 1e-9 * (1.0 + std::abs(m.trace()));
        const cplx det = oracles::determinant_cofactor(m);
        ok &= std::abs(prod - det) <= 1e-8 * (1.0 + std::abs(det));
    }
    report(8, "QR eigenvalues match the determinant-expansion oracle", ok, worst);
}

// --- Criterion 9: conjugation axioms ---------------------------------------
void criterion_conjugation() {
    std::mt19937 rng(0);
    SpaceContext ctx(0.5, 64);
    // mu, eta exactly unimodular so C^2 = I holds bit-for-bit
    Conjugation c(cplx(0.0, 1.0), cplx(0.0, 1.0));
    bool ok = true;
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        auto f = random_poly(64, 64, rng);
        auto g = random_poly(64, 64, rng);
        auto back = conjugate(c, conjugate(c, f));
        for (int j = 0; j <= 64; ++j) ok &= back.coeff(j) == f.coeff(j);
        const cplx lhs = inner_product(ctx, conjugate(c, f), conjugate(c, g));
        const cplx rhs = inner_product(ctx, g, f);
        const double d = std::abs(lhs - rhs);
        worst = std::max(worst, d);
        ok &= d <= 1e-12;
    }
    report(9, "conjugation axioms: involution and <Cf,Cg> = <g,f>", ok, worst);
}

// --- Criterion 10: CLI contract --------------------------------------------
std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(BERGOP_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

void criterion_cli() {
    const std::string dir = "acceptance_cli_fixtures";
    std::system(("mkdir -p " + dir).c_str());

    const std::string good = dir + "/good.json";
    std::ofstream(good) << R"({
        "alpha": 0.0, "trunc_degree": 32, "seed": 0,
        "conjugation": {"mu": [1, 0], "eta": [1, 0]},
        "symbols": {"mode": "canonical_symmetric", "c": [[1, 0]], "a": [[1, 0]],
                    "b": [0.3, 0], "c_phi": [0.4, 0], "eta": [1, 0]},
        "checks": ["symmetry"]
    })";
    const std::string invalid = dir + "/invalid.json";
    std::ofstream(invalid) << R"({
        "alpha": 0.0, "trunc_degree": 32,
        "symbols": {"mode": "canonical_symmetric", "c": [[1, 0]], "a": [[1, 0]],
                    "b": [1.2, 0], "c_phi": [0.4, 0], "eta": [1, 0]},
        "checks": ["symmetry"]
    })";
    const std::string gated = dir + "/gated.json";
    std::ofstream(gated) << R"({
        "alpha": 0.0, "trunc_degree": 32,
        "symbols": {"mode": "canonical_symmetric", "c": [[1, 0]], "a": [[1, 0]],
                    "b": [0.3, 0], "c_phi": [0.4, 0], "eta": [1, 0]},
        "checks": ["spectrum"]
    })";

    bool ok = true;
    ok &= run_cli("check --config " + good + " --out " + dir + "/rep1.json") == 0;
    ok &= run_cli("check --config " + good + " --out " + dir + "/rep2.json") == 0;
    ok &= slurp(dir + "/rep1.json") == slurp(dir + "/rep2.json");
    ok &= !slurp(dir + "/rep1.json").empty();
    ok &= run_cli("check --config " + invalid) == 1;
    ok &= run_cli("check --config " + gated) == 2;
    report(10, "CLI determinism and documented exit codes", ok);
}

} // namespace

int main() {
    criterion_reproducing();
    criterion_adjoint_kernel();
    criterion_symmetry();
    criterion_normal();
    criterion_hermitian();
    criterion_kernel();
    criterion_spectrum();
    criterion_eigensolver();
    criterion_conjugation();
    criterion_cli();
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
