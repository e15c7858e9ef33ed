#ifndef BERGMAN_CONFIG_HPP
#define BERGMAN_CONFIG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bergman/operators.hpp"

namespace bergman {

/// A run configuration, parsed from a JSON config file. Complex numbers are
/// [re, im] pairs throughout.
struct RunConfig {
    double alpha = 0.0;
    int trunc_degree = 64;
    unsigned seed = 0;

    cplx mu{1.0, 0.0};
    cplx eta{1.0, 0.0};

    std::string mode; // canonical_symmetric | canonical_hermitian | explicit
    std::vector<cplx> c;
    std::vector<cplx> a;              // canonical modes
    cplx b{0.0, 0.0};                 // canonical modes
    cplx c_phi{0.0, 0.0};             // canonical modes
    cplx sym_eta{1.0, 0.0};           // canonical_symmetric
    std::vector<std::vector<cplx>> psi_coeffs; // explicit mode
    std::vector<cplx> phi_coeffs;              // explicit mode

    std::vector<std::string> checks;
    std::map<std::string, double> tolerances;

    std::string out_path;
    std::string out_format = "json";
};

namespace detail {

inline cplx parse_complex(const nlohmann::ordered_json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument("config: " + what + " must be a [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

inline std::vector<cplx> parse_complex_list(const nlohmann::ordered_json& j,
                                            const std::string& what) {
    if (!j.is_array()) throw std::invalid_argument("config: " + what + " must be an array");
    std::vector<cplx> out;
    for (const auto& e : j) out.push_back(parse_complex(e, what + " entry"));
    return out;
}

} // namespace detail

inline RunConfig parse_config(const nlohmann::ordered_json& j) {
    RunConfig cfg;
    if (j.contains("alpha")) cfg.alpha = j.at("alpha").get<double>();
    if (j.contains("trunc_degree")) cfg.trunc_degree = j.at("trunc_degree").get<int>();
    if (cfg.trunc_degree < 8 || cfg.trunc_degree > 512)
        throw std::invalid_argument("config: trunc_degree must be in [8, 512]");
    if (j.contains("seed")) cfg.seed = j.at("seed").get<unsigned>();

    if (j.contains("conjugation")) {
        const auto& cj = j.at("conjugation");
        if (cj.contains("mu")) cfg.mu = detail::parse_complex(cj.at("mu"), "conjugation.mu");
        if (cj.contains("eta")) cfg.eta = detail::parse_complex(cj.at("eta"), "conjugation.eta");
    }

    if (j.contains("symbols")) {
        const auto& sj = j.at("symbols");
        cfg.mode = sj.at("mode").get<std::string>();
        cfg.c = detail::parse_complex_list(sj.at("c"), "symbols.c");
        if (cfg.mode == "canonical_symmetric" || cfg.mode == "canonical_hermitian") {
            if (sj.contains("psi") || sj.contains("phi"))
                throw std::invalid_argument("config: explicit psi/phi not allowed in canonical mode");
            cfg.a = detail::parse_complex_list(sj.at("a"), "symbols.a");
            cfg.b = detail::parse_complex(sj.at("b"), "symbols.b");
            cfg.c_phi = detail::parse_complex(sj.at("c_phi"), "symbols.c_phi");
            if (sj.contains("eta"))
                cfg.sym_eta = detail::parse_complex(sj.at("eta"), "symbols.eta");
        } else if (cfg.mode == "explicit") {
            if (sj.contains("a") || sj.contains("b") || sj.contains("c_phi"))
                throw std::invalid_argument("config: canonical fields not allowed in explicit mode");
            for (const auto& p : sj.at("psi"))
                cfg.psi_coeffs.push_back(detail::parse_complex_list(p, "symbols.psi entry"));
            cfg.phi_coeffs = detail::parse_complex_list(sj.at("phi"), "symbols.phi");
        } else {
            throw std::invalid_argument("config: unknown symbols.mode '" + cfg.mode + "'");
        }
    }

    if (j.contains("checks"))
        for (const auto& name : j.at("checks")) cfg.checks.push_back(name.get<std::string>());
    if (j.contains("tolerances"))
        for (const auto& [name, value] : j.at("tolerances").items())
            cfg.tolerances[name] = value.get<double>();
    if (j.contains("output")) {
        const auto& oj = j.at("output");
        if (oj.contains("path")) cfg.out_path = oj.at("path").get<std::string>();
        if (oj.contains("format")) cfg.out_format = oj.at("format").get<std::string>();
    }
    if (cfg.out_format != "json" && cfg.out_format != "csv")
        throw std::invalid_argument("config: output format must be json or csv");
    return cfg;
}

/// Pads or truncates an explicit coefficient list to the context degree.
inline TruncatedSeries series_from_coeffs(const SpaceContext& ctx, const std::vector<cplx>& cs) {
    std::vector<cplx> out(static_cast<size_t>(ctx.trunc_degree()) + 1, cplx(0.0));
    for (size_t i = 0; i < cs.size() && i < out.size(); ++i) out[i] = cs[i];
    return TruncatedSeries(std::move(out));
}

inline SymbolSet build_symbols(const SpaceContext& ctx, const RunConfig& cfg) {
    if (cfg.mode == "canonical_symmetric")
        return SymbolSet::canonical_symmetric(ctx, cfg.c, cfg.a, cfg.b, cfg.c_phi, cfg.sym_eta);
    if (cfg.mode == "canonical_hermitian") {
        std::vector<double> a_real;
        for (const cplx& ak : cfg.a) a_real.push_back(ak.real());
        return SymbolSet::canonical_hermitian(ctx, cfg.c, a_real, cfg.b, cfg.c_phi.real());
    }
    if (cfg.mode == "explicit") {
        std::vector<TruncatedSeries> psi;
        for (const auto& p : cfg.psi_coeffs) psi.push_back(series_from_coeffs(ctx, p));
        return SymbolSet::explicit_symbols(ctx, cfg.c, std::move(psi),
                                           series_from_coeffs(ctx, cfg.phi_coeffs));
    }
    throw std::invalid_argument("config: no symbols given");
}

} // namespace bergman

#endif
