#pragma once

#include <map>
#include <string>
#include <vector>

#include "qtangle/state.hpp"

namespace qtangle {

// Named state family evaluated at concrete parameters, together with
// the closed-form invariant values known for it (keys like "F1",
// "S12", "tau3_squared", "sum_F3"). Fixture source for regression and
// acceptance tests.
struct CatalogEntry {
    std::string name;
    int n_qubits = 0;
    std::map<std::string, cplx> parameters;
    std::map<std::string, double> expected;
};

struct CatalogResult {
    PureState state;
    CatalogEntry entry;
};

std::vector<std::string> catalog_names();

// Throws unknown_name for an unrecognized family and bad_parameters when
// the family's normalization constraint is violated beyond 1e-10.
// Omitted parameters take the family defaults.
CatalogResult catalog_build(const std::string& name,
                            const std::map<std::string, cplx>& parameters = {});

}  // namespace qtangle
