#pragma once

#include <json.hpp>

#include "adelic/verify.hpp"

namespace adelic {

// Report schema:
//   {identity_id, inputs, lhs: [re, im], rhs: [re, im], residual,
//    pole_guard_ok, verdict, tolerance, truncated_partials?}
inline nlohmann::ordered_json report_to_json(const RegProductReport& rep) {
    nlohmann::ordered_json j;
    j["identity_id"] = rep.identity_id;
    j["inputs"] = rep.inputs;
    j["lhs"] = {rep.lhs.real(), rep.lhs.imag()};
    j["rhs"] = {rep.rhs.real(), rep.rhs.imag()};
    j["residual"] = rep.residual;
    j["pole_guard_ok"] = rep.pole_guard_ok;
    j["verdict"] = verdict_name(rep.verdict);
    j["tolerance"] = rep.tolerance;
    if (!rep.truncated_partials.empty()) {
        nlohmann::ordered_json parts = nlohmann::ordered_json::array();
        for (const auto& [cutoff, value] : rep.truncated_partials)
            parts.push_back({{"cutoff", cutoff}, {"partial", {value.real(), value.imag()}}});
        j["truncated_partials"] = parts;
    }
    return j;
}

} // namespace adelic
