#ifndef BERGMAN_REPORT_HPP
#define BERGMAN_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "bergman/checks.hpp"

namespace bergman {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const CheckReport& r) {
    ordered_json j;
    j["name"] = r.name;
    j["residual"] = r.residual;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    j["hypothesis_met"] = r.hypothesis_met;
    j["details"] = ordered_json::array();
    for (const auto& d : r.details)
        j["details"].push_back({{"label", d.label}, {"value", d.value}});
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline ordered_json to_json(const SpectrumReport& r) {
    ordered_json j;
    j["name"] = "spectrum";
    j["residual"] = std::max(r.pairing_distance, r.max_eigvec_residual);
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    j["hypothesis_met"] = r.hypothesis_met;
    j["pairing_distance"] = r.pairing_distance;
    j["max_eigvec_residual"] = r.max_eigvec_residual;
    j["min_nonzero_index"] = r.min_nonzero_index;
    j["iterations"] = r.numerical.iterations;
    j["converged"] = r.numerical.converged;
    j["details"] = ordered_json::array();
    for (size_t m = 0; m < r.closed_form.size(); ++m) {
        ordered_json row;
        row["m"] = m;
        row["closed_form"] = {r.closed_form[m].real(), r.closed_form[m].imag()};
        j["details"].push_back(row);
    }
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

/// Spectrum table with the closed-form value for each degree paired against
/// the nearest numerical eigenvalue. CSV rows match the JSON details.
inline std::string spectrum_csv(const SpectrumReport& r) {
    std::string out = "m,closed_form_re,closed_form_im,numerical_re,numerical_im,pair_distance\n";
    if (r.closed_form.empty()) return out;
    const auto match = match_spectra(r.closed_form, r.numerical.eigenvalues);
    std::vector<int> partner(r.closed_form.size(), -1);
    for (const auto& [i, k] : match.pairing) partner[static_cast<size_t>(i)] = k;
    char buf[256];
    for (size_t m = 0; m < r.closed_form.size(); ++m) {
        const cplx cf = r.closed_form[m];
        const cplx nu = r.numerical.eigenvalues[static_cast<size_t>(partner[m])];
        std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g,%.17g,%.17g,%.17g\n", m,
                      cf.real(), cf.imag(), nu.real(), nu.imag(), std::abs(cf - nu));
        out += buf;
    }
    return out;
}

} // namespace bergman

#endif
