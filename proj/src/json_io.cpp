#include "qtangle/json_io.hpp"

#include <fstream>

namespace qtangle {

using nlohmann::ordered_json;

ordered_json state_to_json(const PureState& state) {
    ordered_json j;
    j["n_qubits"] = state.n_qubits();
    auto& amps = j["amplitudes"] = ordered_json::array();
    for (const cplx& a : state.amplitudes())
        amps.push_back(ordered_json::array({a.real(), a.imag()}));
    return j;
}

PureState state_from_json(const nlohmann::json& j) {
    const int n = j.at("n_qubits").get<int>();
    if (n < 2 || n > 4)
        throw wrong_length("n_qubits must be 2, 3 or 4, got " + std::to_string(n));
    const auto& arr = j.at("amplitudes");
    if (!arr.is_array() || arr.size() != (std::size_t{1} << n))
        throw wrong_length("amplitudes array must have exactly 2^n entries");
    std::vector<cplx> amps;
    amps.reserve(arr.size());
    for (const auto& pair : arr) {
        if (!pair.is_array() || pair.size() != 2)
            throw wrong_length("each amplitude must be a [re, im] pair");
        amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return PureState::make(n, std::move(amps));
}

PureState load_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open state file: " + path);
    nlohmann::json j;
    in >> j;
    return state_from_json(j);
}

namespace {

std::string pair_key(const std::pair<int, int>& p) {
    return std::to_string(p.first) + std::to_string(p.second);
}

}  // namespace

ordered_json invariant_set_to_json(const InvariantSet& inv) {
    ordered_json j;
    j["T"] = inv.T;
    ordered_json f;
    for (const auto& [k, v] : inv.F) f[std::to_string(k)] = v;
    j["F"] = std::move(f);
    ordered_json f2;
    for (const auto& [k, v] : inv.F2) f2[pair_key(k)] = v;
    j["F2"] = std::move(f2);
    if (!inv.F3.empty()) {
        ordered_json f3;
        for (const auto& [k, v] : inv.F3)
            f3[std::to_string(k[0]) + std::to_string(k[1]) + std::to_string(k[2])] = v;
        j["F3"] = std::move(f3);
    }
    ordered_json s;
    for (const auto& [k, v] : inv.S) s[pair_key(k)] = v;
    j["S"] = std::move(s);
    ordered_json e;
    for (const auto& [k, v] : inv.E) e[pair_key(k)] = v;
    j["E"] = std::move(e);
    j["e_variant"] = to_string(inv.e_variant);
    return j;
}

ordered_json tangle_report_to_json(const TangleReport& rep) {
    return ordered_json{{"tau", rep.tau},
                        {"tau_squared", rep.tau_squared},
                        {"method", to_string(rep.method)}};
}

ordered_json relation_report_to_json(const RelationReport& rep) {
    ordered_json j;
    j["relation"] = to_string(rep.relation);
    j["residual"] = rep.residual;
    ordered_json comps;
    for (const auto& [k, v] : rep.components) comps[k] = v;
    j["components"] = std::move(comps);
    if (rep.relation == Relation::eq15) j["e_variant"] = to_string(rep.e_variant);
    j["state_digest"] = rep.state_digest;
    return j;
}

ordered_json catalog_entry_to_json(const CatalogEntry& entry) {
    ordered_json j;
    j["name"] = entry.name;
    j["n_qubits"] = entry.n_qubits;
    ordered_json params;
    for (const auto& [k, v] : entry.parameters)
        params[k] = ordered_json::array({v.real(), v.imag()});
    j["parameters"] = std::move(params);
    ordered_json exp;
    for (const auto& [k, v] : entry.expected) exp[k] = v;
    j["expected"] = std::move(exp);
    return j;
}

}  // namespace qtangle
