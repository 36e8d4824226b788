#pragma once

#include <complex>
#include <vector>

#include "qtangle/errors.hpp"

namespace qtangle {

using cplx = std::complex<double>;

enum class PauliAxis { X, Y, Z };

// Product of single-qubit Paulis; qubits not listed carry identity.
// Qubit indices are 1-based, qubit 1 being the most significant bit
// of the amplitude index.
class PauliString {
public:
    struct Factor {
        int qubit;  // 1-based
        PauliAxis axis;
    };

    PauliString(int n_qubits, std::vector<Factor> factors);

    int n_qubits() const { return n_qubits_; }
    const std::vector<Factor>& factors() const { return factors_; }

private:
    int n_qubits_;
    std::vector<Factor> factors_;  // sorted by qubit, distinct
};

// Normalized pure state of n qubits, n in {2,3,4}. Amplitude index k
// encodes the basis ket |b1 b2 ... bn> with b1 the most significant bit.
// Immutable after construction.
class PureState {
public:
    static PureState make(int n_qubits, std::vector<cplx> amplitudes);

    // No length/norm validation beyond the power-of-two length check.
    // Used by homogeneity tests that need unnormalized vectors.
    static PureState unchecked(int n_qubits, std::vector<cplx> amplitudes);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<cplx>& amplitudes() const { return amplitudes_; }
    const cplx& operator[](std::size_t k) const { return amplitudes_[k]; }

    double norm_squared() const;

private:
    PureState(int n_qubits, std::vector<cplx> amplitudes);

    int n_qubits_;
    std::vector<cplx> amplitudes_;
};

// P|psi> as a signed/phased bit permutation of the amplitudes.
PureState apply_pauli(const PureState& state, const PauliString& p);

// Re<psi|P|psi>; throws hermiticity_violated if the imaginary part
// exceeds 1e-10 (implementation bug, not bad input).
double expectation(const PureState& state, const PauliString& p);

// <psi|P|psi*> with |psi*> the componentwise conjugate in the
// computational basis. Bilinear, generally complex.
cplx antilinear_expectation(const PureState& state, const PauliString& p);

PureState conjugate(const PureState& state);

}  // namespace qtangle
