#include "qtangle/state.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace qtangle {

namespace {

constexpr double kConstructionTol = 1e-6;

// Bit mask selecting qubit q (1-based, MSB first) in an n-qubit index.
inline std::uint64_t qubit_mask(int n_qubits, int qubit) {
    return std::uint64_t{1} << (n_qubits - qubit);
}

}  // namespace

PauliString::PauliString(int n_qubits, std::vector<Factor> factors)
    : n_qubits_(n_qubits), factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end(),
              [](const Factor& a, const Factor& b) { return a.qubit < b.qubit; });
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const int q = factors_[i].qubit;
        if (q < 1 || q > n_qubits_)
            throw qubit_out_of_range("pauli factor qubit " + std::to_string(q) +
                                     " outside [1," + std::to_string(n_qubits_) + "]");
        if (i > 0 && factors_[i - 1].qubit == q)
            throw repeated_indices("duplicate qubit " + std::to_string(q) +
                                   " in pauli string");
    }
}

PureState::PureState(int n_qubits, std::vector<cplx> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

PureState PureState::make(int n_qubits, std::vector<cplx> amplitudes) {
    const std::size_t want = std::size_t{1} << n_qubits;
    if (amplitudes.size() != want)
        throw wrong_length("expected " + std::to_string(want) + " amplitudes, got " +
                           std::to_string(amplitudes.size()));
    double n2 = 0.0;
    for (const cplx& a : amplitudes) n2 += std::norm(a);
    if (n2 == 0.0) throw not_normalizable("zero amplitude vector");
    const double norm = std::sqrt(n2);
    if (std::abs(norm - 1.0) >= kConstructionTol)
        throw norm_too_far_off("state norm " + std::to_string(norm) +
                               " deviates from 1 by 1e-6 or more; normalize explicitly");
    for (cplx& a : amplitudes) a /= norm;
    return PureState(n_qubits, std::move(amplitudes));
}

PureState PureState::unchecked(int n_qubits, std::vector<cplx> amplitudes) {
    const std::size_t want = std::size_t{1} << n_qubits;
    if (amplitudes.size() != want)
        throw wrong_length("expected " + std::to_string(want) + " amplitudes, got " +
                           std::to_string(amplitudes.size()));
    return PureState(n_qubits, std::move(amplitudes));
}

double PureState::norm_squared() const {
    double n2 = 0.0;
    for (const cplx& a : amplitudes_) n2 += std::norm(a);
    return n2;
}

PureState apply_pauli(const PureState& state, const PauliString& p) {
    if (p.n_qubits() != state.n_qubits())
        throw size_mismatch("pauli string is for " + std::to_string(p.n_qubits()) +
                            " qubits, state has " + std::to_string(state.n_qubits()));
    const int n = state.n_qubits();
    std::vector<cplx> out(state.amplitudes());
    for (const auto& f : p.factors()) {
        const std::uint64_t mask = qubit_mask(n, f.qubit);
        std::vector<cplx> next(out.size());
        switch (f.axis) {
            case PauliAxis::X:
                for (std::size_t k = 0; k < out.size(); ++k) next[k ^ mask] = out[k];
                break;
            case PauliAxis::Y:
                // sigma_y |0> = i|1>, sigma_y |1> = -i|0>
                for (std::size_t k = 0; k < out.size(); ++k)
                    next[k ^ mask] = (k & mask) ? cplx(0, -1) * out[k] : cplx(0, 1) * out[k];
                break;
            case PauliAxis::Z:
                for (std::size_t k = 0; k < out.size(); ++k)
                    next[k] = (k & mask) ? -out[k] : out[k];
                break;
        }
        out = std::move(next);
    }
    return PureState::unchecked(n, std::move(out));
}

double expectation(const PureState& state, const PauliString& p) {
    const PureState ps = apply_pauli(state, p);
    cplx acc = 0.0;
    for (std::size_t k = 0; k < state.dim(); ++k)
        acc += std::conj(state[k]) * ps[k];
    if (std::abs(acc.imag()) >= 1e-10)
        throw hermiticity_violated("imaginary part " + std::to_string(acc.imag()) +
                                   " of a hermitian expectation");
    return acc.real();
}

cplx antilinear_expectation(const PureState& state, const PauliString& p) {
    const PureState ps = apply_pauli(conjugate(state), p);
    cplx acc = 0.0;
    for (std::size_t k = 0; k < state.dim(); ++k)
        acc += std::conj(state[k]) * ps[k];
    return acc;
}

PureState conjugate(const PureState& state) {
    std::vector<cplx> amps(state.amplitudes());
    for (cplx& a : amps) a = std::conj(a);
    return PureState::unchecked(state.n_qubits(), std::move(amps));
}

}  // namespace qtangle
