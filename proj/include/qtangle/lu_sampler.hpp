#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qtangle/state.hpp"

namespace qtangle {

// Deterministic counter-derived random stream. Streams derived from the
// same (seed, index) produce identical draws regardless of thread count
// or platform; no standard-library distributions are used, so output is
// reproducible bit-for-bit across toolchains.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : state_(mix(seed)) {}

    // Stream for sample `index` of a run keyed by `seed`.
    static RngStream derive(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next_u64();
    double uniform01();  // [0, 1)
    double gaussian();   // standard normal, Box-Muller
    cplx complex_gaussian();

private:
    static std::uint64_t mix(std::uint64_t x);

    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Row-major 2x2 complex matrix.
using Mat2 = std::array<cplx, 4>;

struct LocalUnitary {
    std::vector<Mat2> factors;  // one per qubit, qubit 1 first

    int n_qubits() const { return static_cast<int>(factors.size()); }
};

// Haar-distributed U(2) element: QR of a complex Ginibre matrix with the
// R-diagonal phase normalization (Gram-Schmidt with positive real R
// diagonal is exactly that).
Mat2 haar_single_qubit(RngStream& rng);

LocalUnitary random_local_unitary(int n_qubits, RngStream& rng);

// (U1 x ... x Un)|psi>
PureState apply_local_unitary(const PureState& state, const LocalUnitary& lu);

// Haar-uniform normalized state: 2^n complex standard Gaussians, normalized.
PureState random_state(int n_qubits, RngStream& rng);

}  // namespace qtangle
