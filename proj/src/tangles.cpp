#include "qtangle/tangles.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace qtangle {

namespace {

void require_qubits(const PureState& state, int n) {
    if (state.n_qubits() != n)
        throw wrong_qubit_count("expected a " + std::to_string(n) + "-qubit state, got " +
                                std::to_string(state.n_qubits()));
}

TangleReport report(double tau, TangleMethod m) {
    return TangleReport{tau, tau * tau, m};
}

// v^T (sigma_y x sigma_y) w for 4-component vectors; symmetric bilinear.
cplx spin_flip_form(const std::array<cplx, 4>& v, const std::array<cplx, 4>& w) {
    return -v[0] * w[3] + v[1] * w[2] + v[2] * w[1] - v[3] * w[0];
}

// Concurrence of a rank-<=2 two-qubit state given as rho = sum_r |v_r><v_r|.
// The nonzero spin-flip spectrum equals the singular values of the 2x2
// symmetric matrix A_rs = v_r^T (YY) v_s, so C = s1 - s2 in closed form.
double concurrence_rank2(const std::array<std::array<cplx, 4>, 2>& v) {
    const cplx a00 = spin_flip_form(v[0], v[0]);
    const cplx a01 = spin_flip_form(v[0], v[1]);
    const cplx a11 = spin_flip_form(v[1], v[1]);
    // Hermitian A^dag A: eigenvalues from trace and determinant.
    const double tr = std::norm(a00) + 2.0 * std::norm(a01) + std::norm(a11);
    const cplx det_a = a00 * a11 - a01 * a01;
    const double det = std::norm(det_a);
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    const double s1 = std::sqrt(std::max(0.0, 0.5 * (tr + disc)));
    const double s2 = std::sqrt(std::max(0.0, 0.5 * (tr - disc)));
    return std::max(0.0, s1 - s2);
}

}  // namespace

const char* to_string(TangleMethod m) {
    switch (m) {
        case TangleMethod::eq14: return "eq14";
        case TangleMethod::ckw_oracle: return "ckw_oracle";
        case TangleMethod::monogamy: return "monogamy";
        case TangleMethod::eq17: return "eq17";
        case TangleMethod::eq17_amplitude_formula: return "eq17_amplitude_formula";
    }
    return "?";
}

TangleReport three_tangle(const PureState& state) {
    require_qubits(state, 3);
    const cplx c1 = antilinear_expectation(
        state, PauliString(3, {{1, PauliAxis::Y}, {2, PauliAxis::Y}, {3, PauliAxis::X}}));
    const cplx c2 = antilinear_expectation(
        state, PauliString(3, {{1, PauliAxis::Y}, {2, PauliAxis::Y}, {3, PauliAxis::Z}}));
    const cplx c3 = antilinear_expectation(
        state, PauliString(3, {{1, PauliAxis::Y}, {2, PauliAxis::Y}}));
    return report(std::abs(c1 * c1 + c2 * c2 - c3 * c3), TangleMethod::eq14);
}

TangleReport three_tangle_ckw_oracle(const PureState& state) {
    require_qubits(state, 3);
    const auto& a = state.amplitudes();
    const cplx d1 = a[0] * a[0] * a[7] * a[7] + a[1] * a[1] * a[6] * a[6] +
                    a[2] * a[2] * a[5] * a[5] + a[4] * a[4] * a[3] * a[3];
    const cplx d2 = a[0] * a[7] * a[3] * a[4] + a[0] * a[7] * a[5] * a[2] +
                    a[0] * a[7] * a[6] * a[1] + a[3] * a[4] * a[5] * a[2] +
                    a[3] * a[4] * a[6] * a[1] + a[5] * a[2] * a[6] * a[1];
    const cplx d3 = a[0] * a[6] * a[5] * a[3] + a[7] * a[1] * a[2] * a[4];
    return report(4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3), TangleMethod::ckw_oracle);
}

TangleReport three_tangle_monogamy(const PureState& state) {
    require_qubits(state, 3);
    const auto& a = state.amplitudes();

    // Reduced density matrix of qubit 1 (MSB); C^2_{1(23)} = 4 det rho1.
    std::array<std::array<cplx, 2>, 2> rho1{};
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q)
            for (int r = 0; r < 4; ++r)
                rho1[p][q] += a[p * 4 + r] * std::conj(a[q * 4 + r]);
    const double c2_1_23 =
        4.0 * (rho1[0][0] * rho1[1][1] - rho1[0][1] * rho1[1][0]).real();

    // rho12 = sum_r |v_r><v_r| with v_r the qubit-3-conditioned slices;
    // likewise rho13 conditioned on qubit 2.
    std::array<std::array<cplx, 4>, 2> v12{}, v13{};
    for (int r = 0; r < 2; ++r)
        for (int p = 0; p < 4; ++p) {
            v12[r][p] = a[p * 2 + r];
            v13[r][p] = a[(p >> 1) * 4 + r * 2 + (p & 1)];
        }

    const double c12 = concurrence_rank2(v12);
    const double c13 = concurrence_rank2(v13);
    const double tau = std::max(0.0, c2_1_23 - c12 * c12 - c13 * c13);
    return report(tau, TangleMethod::monogamy);
}

TangleReport four_tangle(const PureState& state, FourTangleMethod method) {
    require_qubits(state, 4);
    if (method == FourTangleMethod::antilinear) {
        const cplx v = antilinear_expectation(
            state, PauliString(4, {{1, PauliAxis::Y},
                                   {2, PauliAxis::Y},
                                   {3, PauliAxis::Y},
                                   {4, PauliAxis::Y}}));
        return report(std::abs(v), TangleMethod::eq17);
    }
    const auto& a = state.amplitudes();
    const cplx v = 2.0 * (a[0] * a[15] - a[1] * a[14] - a[2] * a[13] + a[3] * a[12] -
                          a[4] * a[11] + a[5] * a[10] + a[6] * a[9] - a[7] * a[8]);
    return report(std::abs(v), TangleMethod::eq17_amplitude_formula);
}

}  // namespace qtangle
