#include "qtangle/invariants.hpp"

#include <string>

namespace qtangle {

namespace {

constexpr std::array<PauliAxis, 3> kAxes = {PauliAxis::X, PauliAxis::Y, PauliAxis::Z};

void check_qubit(const PureState& state, int q) {
    if (q < 1 || q > state.n_qubits())
        throw qubit_out_of_range("qubit " + std::to_string(q) + " outside [1," +
                                 std::to_string(state.n_qubits()) + "]");
}

}  // namespace

double BetaMatrix::frobenius_squared() const {
    double s = 0.0;
    for (const auto& row : entries)
        for (double e : row) s += e * e;
    return s;
}

double BetaMatrix::determinant() const {
    const auto& b = entries;
    return b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
           b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
           b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
}

const char* to_string(EVariant v) {
    return v == EVariant::paper ? "paper" : "adjugate";
}

double t_invariant(const PureState& state) { return state.norm_squared(); }

BlochVector bloch_vector(const PureState& state, int k) {
    check_qubit(state, k);
    BlochVector u{k, {}};
    for (int a = 0; a < 3; ++a)
        u.components[a] =
            expectation(state, PauliString(state.n_qubits(), {{k, kAxes[a]}}));
    return u;
}

double f_single(const PureState& state, int k) {
    return bloch_vector(state, k).norm_squared();
}

BetaMatrix beta_matrix(const PureState& state, int i, int j) {
    check_qubit(state, i);
    check_qubit(state, j);
    if (i == j) throw equal_indices("beta matrix needs two distinct qubits");
    BetaMatrix b{i, j, {}};
    for (int a = 0; a < 3; ++a)
        for (int c = 0; c < 3; ++c)
            b.entries[a][c] = expectation(
                state, PauliString(state.n_qubits(), {{i, kAxes[a]}, {j, kAxes[c]}}));
    return b;
}

double f_pair(const PureState& state, int i, int j) {
    return beta_matrix(state, i, j).frobenius_squared();
}

double f_triple(const PureState& state, int i, int j, int k) {
    check_qubit(state, i);
    check_qubit(state, j);
    check_qubit(state, k);
    if (i == j || i == k || j == k)
        throw repeated_indices("f_triple needs three distinct qubits");
    double s = 0.0;
    for (PauliAxis a : kAxes)
        for (PauliAxis b : kAxes)
            for (PauliAxis c : kAxes) {
                const double e = expectation(
                    state, PauliString(state.n_qubits(), {{i, a}, {j, b}, {k, c}}));
                s += e * e;
            }
    return s;
}

double s_pair(const PureState& state, int i, int j) {
    return beta_matrix(state, i, j).determinant();
}

double e_pair(const PureState& state, int i, int j, EVariant variant) {
    const BetaMatrix bm = beta_matrix(state, i, j);
    const auto& b = bm.entries;
    const auto ui = bloch_vector(state, i).components;
    const auto uj = bloch_vector(state, j).components;

    // Cofactor matrix of beta; coeff[a][b] multiplies ui[a]*uj[b].
    std::array<std::array<double, 3>, 3> coeff = {{
        {b[1][1] * b[2][2] - b[1][2] * b[2][1], b[1][2] * b[2][0] - b[1][0] * b[2][2],
         b[1][0] * b[2][1] - b[1][1] * b[2][0]},
        {b[0][2] * b[2][1] - b[0][1] * b[2][2], b[0][0] * b[2][2] - b[0][2] * b[2][0],
         b[0][1] * b[2][0] - b[0][0] * b[2][1]},
        {b[0][1] * b[1][2] - b[0][2] * b[1][1], b[0][2] * b[1][0] - b[0][0] * b[1][2],
         b[0][0] * b[1][1] - b[0][1] * b[1][0]},
    }};
    if (variant == EVariant::paper) {
        // The printed table flips this one minor relative to the cofactor.
        coeff[1][2] = -coeff[1][2];
    }

    double e = 0.0;
    for (int a = 0; a < 3; ++a)
        for (int c = 0; c < 3; ++c) e += ui[a] * uj[c] * coeff[a][c];
    return e;
}

InvariantSet invariant_set(const PureState& state, EVariant variant) {
    const int n = state.n_qubits();
    InvariantSet inv;
    inv.e_variant = variant;
    inv.T = t_invariant(state);
    for (int k = 1; k <= n; ++k) inv.F[k] = f_single(state, k);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            inv.F2[{i, j}] = f_pair(state, i, j);
            inv.S[{i, j}] = s_pair(state, i, j);
            inv.E[{i, j}] = e_pair(state, i, j, variant);
        }
    if (n == 4) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k)
                    inv.F3[{i, j, k}] = f_triple(state, i, j, k);
    }
    return inv;
}

}  // namespace qtangle
