#include "qtangle/lu_sampler.hpp"

#include <cmath>
#include <numbers>

namespace qtangle {

std::uint64_t RngStream::mix(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RngStream RngStream::derive(std::uint64_t seed, std::uint64_t index) {
    return RngStream(mix(seed) ^ mix(index * 0xd1342543de82ef95ULL + 1));
}

std::uint64_t RngStream::next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double RngStream::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform01();
    while (u1 == 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
}

cplx RngStream::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
}

Mat2 haar_single_qubit(RngStream& rng) {
    for (;;) {
        const cplx g00 = rng.complex_gaussian(), g10 = rng.complex_gaussian();
        const cplx g01 = rng.complex_gaussian(), g11 = rng.complex_gaussian();
        const double n1 = std::sqrt(std::norm(g00) + std::norm(g10));
        if (n1 < 1e-100) continue;  // degenerate draw, retry
        const cplx q00 = g00 / n1, q10 = g10 / n1;
        const cplx proj = std::conj(q00) * g01 + std::conj(q10) * g11;
        const cplx w0 = g01 - proj * q00, w1 = g11 - proj * q10;
        const double n2 = std::sqrt(std::norm(w0) + std::norm(w1));
        if (n2 < 1e-100) continue;
        return Mat2{q00, w0 / n2, q10, w1 / n2};
    }
}

LocalUnitary random_local_unitary(int n_qubits, RngStream& rng) {
    LocalUnitary lu;
    lu.factors.reserve(n_qubits);
    for (int q = 0; q < n_qubits; ++q) lu.factors.push_back(haar_single_qubit(rng));
    return lu;
}

PureState apply_local_unitary(const PureState& state, const LocalUnitary& lu) {
    if (lu.n_qubits() != state.n_qubits())
        throw size_mismatch("local unitary has " + std::to_string(lu.n_qubits()) +
                            " factors, state has " + std::to_string(state.n_qubits()) +
                            " qubits");
    const int n = state.n_qubits();
    std::vector<cplx> amps(state.amplitudes());
    for (int q = 1; q <= n; ++q) {
        const Mat2& u = lu.factors[q - 1];
        const std::size_t mask = std::size_t{1} << (n - q);
        for (std::size_t k = 0; k < amps.size(); ++k) {
            if (k & mask) continue;
            const cplx a0 = amps[k], a1 = amps[k | mask];
            amps[k] = u[0] * a0 + u[1] * a1;
            amps[k | mask] = u[2] * a0 + u[3] * a1;
        }
    }
    return PureState::unchecked(n, std::move(amps));
}

PureState random_state(int n_qubits, RngStream& rng) {
    std::vector<cplx> amps(std::size_t{1} << n_qubits);
    double n2 = 0.0;
    for (cplx& a : amps) {
        a = rng.complex_gaussian();
        n2 += std::norm(a);
    }
    const double norm = std::sqrt(n2);
    for (cplx& a : amps) a /= norm;
    return PureState::unchecked(n_qubits, std::move(amps));
}

}  // namespace qtangle
