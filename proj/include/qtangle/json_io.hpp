#pragma once

#include <string>

#include "json.hpp"
#include "qtangle/catalog.hpp"
#include "qtangle/invariants.hpp"
#include "qtangle/relations.hpp"
#include "qtangle/state.hpp"
#include "qtangle/tangles.hpp"

namespace qtangle {

inline constexpr const char* kToolVersion = "1.0.0";

// State file format: {"n_qubits": n, "amplitudes": [[re, im], ...]}
// with 2^n entries, qubit 1 the most significant bit of the index.
nlohmann::ordered_json state_to_json(const PureState& state);
PureState state_from_json(const nlohmann::json& j);
PureState load_state_file(const std::string& path);

nlohmann::ordered_json invariant_set_to_json(const InvariantSet& inv);
nlohmann::ordered_json tangle_report_to_json(const TangleReport& rep);
nlohmann::ordered_json relation_report_to_json(const RelationReport& rep);
nlohmann::ordered_json catalog_entry_to_json(const CatalogEntry& entry);

}  // namespace qtangle
