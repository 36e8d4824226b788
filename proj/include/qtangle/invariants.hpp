#pragma once

#include <array>
#include <map>

#include "qtangle/state.hpp"

namespace qtangle {

struct BlochVector {
    int qubit;                         // 1-based
    std::array<double, 3> components;  // (x, y, z) expectations

    double norm_squared() const {
        return components[0] * components[0] + components[1] * components[1] +
               components[2] * components[2];
    }
};

// 3x3 real two-qubit correlation matrix. Rows index the axis on qubit i,
// columns the axis on qubit j.
struct BetaMatrix {
    int i, j;  // distinct, 1-based
    std::array<std::array<double, 3>, 3> entries;

    double frobenius_squared() const;
    double determinant() const;  // cofactor expansion
};

// Which sign pattern the degree-8 form uses for its 2x2 minors. `paper`
// follows the printed coefficient table verbatim; `adjugate` uses the
// cofactor matrix of beta. They differ only in the sign of the minor
// multiplying u_i^y u_j^z.
enum class EVariant { paper, adjugate };

const char* to_string(EVariant v);

struct InvariantSet {
    double T = 0.0;
    std::map<int, double> F;
    std::map<std::pair<int, int>, double> F2;
    std::map<std::array<int, 3>, double> F3;
    std::map<std::pair<int, int>, double> S;
    std::map<std::pair<int, int>, double> E;
    EVariant e_variant = EVariant::adjugate;
};

double t_invariant(const PureState& state);
BlochVector bloch_vector(const PureState& state, int k);
double f_single(const PureState& state, int k);
BetaMatrix beta_matrix(const PureState& state, int i, int j);
double f_pair(const PureState& state, int i, int j);
double f_triple(const PureState& state, int i, int j, int k);
double s_pair(const PureState& state, int i, int j);
double e_pair(const PureState& state, int i, int j, EVariant variant);

// All invariants for all index combinations. F3 is populated for
// 4-qubit states only; f_triple itself also accepts the full n=3 triple.
InvariantSet invariant_set(const PureState& state, EVariant variant);

}  // namespace qtangle
