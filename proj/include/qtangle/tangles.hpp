#pragma once

#include <string>

#include "qtangle/state.hpp"

namespace qtangle {

enum class TangleMethod { eq14, ckw_oracle, monogamy, eq17, eq17_amplitude_formula };

const char* to_string(TangleMethod m);

struct TangleReport {
    double tau = 0.0;          // >= 0
    double tau_squared = 0.0;  // tau * tau
    TangleMethod method = TangleMethod::eq14;
};

// Three-tangle from the antilinear sigma_y sigma_y {sigma_x, sigma_z, I}
// expectations, combined in complex arithmetic with one final magnitude.
TangleReport three_tangle(const PureState& state);

// Cayley hyperdeterminant form, 4|d1 - 2 d2 + 4 d3| in the amplitudes.
// Independent of the antilinear route above.
TangleReport three_tangle_ckw_oracle(const PureState& state);

// Second independent check on the oracle: C^2_{1(23)} - C^2_12 - C^2_13
// from reduced-density-matrix concurrences. Internal cross-check, not a
// user-facing measure.
TangleReport three_tangle_monogamy(const PureState& state);

enum class FourTangleMethod { antilinear, amplitude_formula };

TangleReport four_tangle(const PureState& state, FourTangleMethod method);

}  // namespace qtangle
