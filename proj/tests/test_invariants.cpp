#include <cmath>

#include "doctest.h"
#include "qtangle/invariants.hpp"
#include "qtangle/lu_sampler.hpp"
#include "qtangle/state.hpp"
#include "test_helpers.hpp"

using namespace qtangle;
using namespace qtangle::testing;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

PureState ghz3(cplx a0 = kInvSqrt2, cplx a7 = kInvSqrt2) {
    std::vector<cplx> a(8, 0.0);
    a[0] = a0;
    a[7] = a7;
    return PureState::make(3, std::move(a));
}

PureState w3(cplx a1, cplx a2, cplx a4) {
    std::vector<cplx> a(8, 0.0);
    a[1] = a1;
    a[2] = a2;
    a[4] = a4;
    return PureState::make(3, std::move(a));
}

PureState bell_times_zero(double alpha, double beta) {
    std::vector<cplx> a(8, 0.0);
    a[0] = alpha;
    a[6] = beta;
    return PureState::make(3, std::move(a));
}

// Unit 3-vector from two uniforms, for random normalized family params.
void random_two_moduli(RngStream& rng, double& x, double& y) {
    const double t = rng.uniform01();
    x = std::sqrt(t);
    y = std::sqrt(1.0 - t);
}

}  // namespace

TEST_CASE("t_invariant") {
    CHECK(t_invariant(ghz3()) == doctest::Approx(1.0).epsilon(1e-12));
    std::vector<cplx> doubled(8, 0.0);
    doubled[0] = doubled[7] = 2.0 * kInvSqrt2;
    CHECK(t_invariant(PureState::unchecked(3, doubled)) ==
          doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("bloch vectors") {
    std::vector<cplx> z(8, 0.0);
    z[0] = 1.0;
    const BlochVector u = bloch_vector(PureState::make(3, z), 1);
    CHECK(u.components[0] == doctest::Approx(0.0));
    CHECK(u.components[1] == doctest::Approx(0.0));
    CHECK(u.components[2] == doctest::Approx(1.0));

    const BlochVector ug = bloch_vector(ghz3(), 1);
    CHECK(std::abs(ug.components[0]) < 1e-12);
    CHECK(std::abs(ug.components[1]) < 1e-12);
    CHECK(std::abs(ug.components[2]) < 1e-12);

    // generalized GHZ: u_z = |a0|^2 - |a7|^2
    const PureState g = ghz3(0.6, 0.8);
    CHECK(bloch_vector(g, 1).components[2] ==
          doctest::Approx(0.36 - 0.64).epsilon(1e-12));

    CHECK_THROWS_AS(bloch_vector(ghz3(), 4), qubit_out_of_range);
}

TEST_CASE("f_single closed forms") {
    RngStream rng(21);
    for (int t = 0; t < 20; ++t) {
        double m0, m7;
        random_two_moduli(rng, m0, m7);
        const cplx a0 = m0 * std::exp(cplx(0, rng.uniform01() * 6.28));
        const cplx a7 = m7 * std::exp(cplx(0, rng.uniform01() * 6.28));
        CHECK(std::abs(f_single(ghz3(a0, a7), 1) -
                       (1.0 - 4.0 * std::norm(a0) * std::norm(a7))) < 1e-10);
    }
    // W family
    const double d = 1.0 / std::sqrt(3.0);
    const PureState w = w3(d, d, d);
    CHECK(f_single(w, 1) ==
          doctest::Approx(1.0 - 4.0 * (2.0 / 3.0) * (1.0 / 3.0)).epsilon(1e-12));
    // product basis state
    std::vector<cplx> p(8, 0.0);
    p[5] = 1.0;
    for (int k = 1; k <= 3; ++k)
        CHECK(f_single(PureState::make(3, p), k) == doctest::Approx(1.0));
}

TEST_CASE("beta_matrix structure") {
    const BetaMatrix bg = beta_matrix(ghz3(), 1, 2);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            CHECK(bg.entries[a][b] ==
                  doctest::Approx(a == 2 && b == 2 ? 1.0 : 0.0).epsilon(1e-12));

    const double alpha = 0.6, beta = 0.8;
    const BetaMatrix bb = beta_matrix(bell_times_zero(alpha, beta), 1, 2);
    CHECK(bb.entries[0][0] == doctest::Approx(2 * alpha * beta).epsilon(1e-12));
    CHECK(bb.entries[1][1] == doctest::Approx(-2 * alpha * beta).epsilon(1e-12));
    CHECK(bb.entries[2][2] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(bb.entries[0][1]) < 1e-12);

    CHECK_THROWS_AS(beta_matrix(ghz3(), 2, 2), equal_indices);
}

TEST_CASE("f_pair values") {
    std::vector<cplx> bell = {kInvSqrt2, 0, 0, kInvSqrt2};
    CHECK(f_pair(PureState::make(2, bell), 1, 2) ==
          doctest::Approx(3.0).epsilon(1e-12));
    std::vector<cplx> z00 = {1, 0, 0, 0};
    CHECK(f_pair(PureState::make(2, z00), 1, 2) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(f_pair(ghz3(), 1, 2) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("f_triple values") {
    CHECK(f_triple(ghz3(), 1, 2, 3) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK_THROWS_AS(f_triple(ghz3(), 1, 1, 2), repeated_indices);

    // generalized GHZ4: every triple gives 1 - 4|a0|^2|a15|^2
    std::vector<cplx> g(16, 0.0);
    g[0] = 0.6;
    g[15] = 0.8;
    const PureState g4 = PureState::make(4, g);
    const double want = 1.0 - 4.0 * 0.36 * 0.64;
    CHECK(f_triple(g4, 1, 2, 3) == doctest::Approx(want).epsilon(1e-10));
    CHECK(f_triple(g4, 2, 3, 4) == doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("s_pair values") {
    // W family closed form: 4|a2|^2|a4|^2(|a1|^2-|a2|^2-|a4|^2)
    RngStream rng(31);
    for (int t = 0; t < 20; ++t) {
        cplx a1 = rng.complex_gaussian(), a2 = rng.complex_gaussian(),
             a4 = rng.complex_gaussian();
        const double n = std::sqrt(std::norm(a1) + std::norm(a2) + std::norm(a4));
        a1 /= n;
        a2 /= n;
        a4 /= n;
        const double m1 = std::norm(a1), m2 = std::norm(a2), m4 = std::norm(a4);
        CHECK(std::abs(s_pair(w3(a1, a2, a4), 1, 2) -
                       4 * m2 * m4 * (m1 - m2 - m4)) < 1e-10);
    }
    // factorized state
    std::vector<cplx> f(8, 0.0);
    f[4] = 0.6;
    f[7] = 0.8;
    CHECK(std::abs(s_pair(PureState::make(3, f), 1, 2)) < 1e-12);
    CHECK(s_pair(bell_times_zero(0.6, 0.8), 1, 2) ==
          doctest::Approx(-4 * 0.36 * 0.64).epsilon(1e-12));
}

TEST_CASE("e_pair values") {
    RngStream rng(41);
    for (int t = 0; t < 20; ++t) {
        cplx a1 = rng.complex_gaussian(), a2 = rng.complex_gaussian(),
             a4 = rng.complex_gaussian();
        const double n = std::sqrt(std::norm(a1) + std::norm(a2) + std::norm(a4));
        a1 /= n;
        a2 /= n;
        a4 /= n;
        const double m1 = std::norm(a1), m2 = std::norm(a2), m4 = std::norm(a4);
        const double want = 4 * m2 * m4 * (m1 + m2 - m4) * (m1 - m2 + m4);
        CHECK(std::abs(e_pair(w3(a1, a2, a4), 1, 2, EVariant::adjugate) - want) <
              1e-10);
    }
    CHECK(std::abs(e_pair(ghz3(0.6, 0.8), 1, 2, EVariant::adjugate)) < 1e-12);
    CHECK(std::abs(e_pair(ghz3(0.6, 0.8), 1, 2, EVariant::paper)) < 1e-12);

    // only the u_z u_z term is nonzero here, so both variants agree
    const double a = 0.6, b = 0.8;
    const double want = -4 * a * a * b * b * std::pow(a * a - b * b, 2);
    CHECK(e_pair(bell_times_zero(a, b), 1, 2, EVariant::paper) ==
          doctest::Approx(want).epsilon(1e-12));
    CHECK(e_pair(bell_times_zero(a, b), 1, 2, EVariant::adjugate) ==
          doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("invariant_set batch values") {
    const InvariantSet g = invariant_set(ghz3(), EVariant::adjugate);
    CHECK(g.T == doctest::Approx(1.0));
    for (int k = 1; k <= 3; ++k) CHECK(std::abs(g.F.at(k)) < 1e-12);
    CHECK(std::abs(g.S.at({1, 2})) < 1e-12);
    CHECK(std::abs(g.E.at({1, 2})) < 1e-12);
    CHECK(g.F3.empty());

    std::vector<cplx> z(16, 0.0);
    z[0] = 1.0;
    const InvariantSet p = invariant_set(PureState::make(4, z), EVariant::adjugate);
    for (const auto& [k, v] : p.F) CHECK(v == doctest::Approx(1.0));
    for (const auto& [k, v] : p.F3) CHECK(v == doctest::Approx(1.0));

    std::vector<cplx> gg(16, 0.0);
    gg[0] = gg[15] = kInvSqrt2;
    const InvariantSet g4 = invariant_set(PureState::make(4, gg), EVariant::adjugate);
    for (const auto& [k, v] : g4.F) CHECK(std::abs(v) < 1e-12);
    for (const auto& [k, v] : g4.F3) CHECK(std::abs(v) < 1e-12);
}

TEST_CASE("index symmetry") {
    RngStream rng(51);
    const PureState psi = random_state(4, rng);
    CHECK(f_pair(psi, 1, 3) == doctest::Approx(f_pair(psi, 3, 1)).epsilon(1e-12));
    CHECK(s_pair(psi, 2, 4) == doctest::Approx(s_pair(psi, 4, 2)).epsilon(1e-12));
    const double ref = f_triple(psi, 1, 2, 3);
    const int perms[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3},
                             {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
    for (const auto& p : perms)
        CHECK(f_triple(psi, p[0], p[1], p[2]) ==
              doctest::Approx(ref).epsilon(1e-12));
}

TEST_CASE("ranges on random states") {
    for (int t = 0; t < 30; ++t) {
        RngStream rng = RngStream::derive(61, t);
        const int n = 3 + static_cast<int>(t % 2);
        const PureState psi = random_state(n, rng);
        for (int k = 1; k <= n; ++k) {
            const double f = f_single(psi, k);
            CHECK(f >= -1e-12);
            CHECK(f <= 1.0 + 1e-12);
        }
        const double f12 = f_pair(psi, 1, 2);
        CHECK(f12 >= -1e-12);
        CHECK(f12 <= 3.0 + 1e-12);
        const BetaMatrix b = beta_matrix(psi, 1, 2);
        for (const auto& row : b.entries)
            for (double e : row) {
                CHECK(e >= -1.0 - 1e-12);
                CHECK(e <= 1.0 + 1e-12);
            }
    }
}

TEST_CASE("product states factorize beta into rank one") {
    RngStream rng(71);
    for (int t = 0; t < 10; ++t) {
        const PureState pair = random_state(2, rng);
        // (entangled pair on qubits 1,2) x (single qubit 3)
        std::vector<cplx> single(2);
        single[0] = rng.complex_gaussian();
        single[1] = rng.complex_gaussian();
        const double n =
            std::sqrt(std::norm(single[0]) + std::norm(single[1]));
        single[0] /= n;
        single[1] /= n;
        const PureState psi =
            tensor(pair, PureState::unchecked(1, std::move(single)));

        const BetaMatrix b12 = beta_matrix(psi, 1, 2);
        // qubits 1,2 entangled only with each other; qubit 3 factored:
        // beta_13 must be the outer product of the Bloch vectors
        const BetaMatrix b13 = beta_matrix(psi, 1, 3);
        const auto u1 = bloch_vector(psi, 1).components;
        const auto u3 = bloch_vector(psi, 3).components;
        for (int a = 0; a < 3; ++a)
            for (int c = 0; c < 3; ++c)
                CHECK(std::abs(b13.entries[a][c] - u1[a] * u3[c]) < 1e-10);
        CHECK(std::abs(s_pair(psi, 1, 3)) < 1e-10);
        (void)b12;
    }
}

TEST_CASE("degree homogeneity under amplitude scaling") {
    RngStream rng(81);
    const PureState psi = random_state(3, rng);
    const double lambda = 1.7;
    std::vector<cplx> scaled(psi.amplitudes());
    for (cplx& a : scaled) a *= lambda;
    const PureState chi = PureState::unchecked(3, std::move(scaled));

    const double l2 = lambda * lambda, l4 = l2 * l2, l6 = l4 * l2, l8 = l4 * l4;
    CHECK(t_invariant(chi) ==
          doctest::Approx(l2 * t_invariant(psi)).epsilon(1e-9));
    CHECK(f_single(chi, 1) ==
          doctest::Approx(l4 * f_single(psi, 1)).epsilon(1e-9));
    CHECK(f_pair(chi, 1, 2) ==
          doctest::Approx(l4 * f_pair(psi, 1, 2)).epsilon(1e-9));
    CHECK(s_pair(chi, 1, 2) ==
          doctest::Approx(l6 * s_pair(psi, 1, 2)).epsilon(1e-9));
    for (EVariant v : {EVariant::paper, EVariant::adjugate})
        CHECK(e_pair(chi, 1, 2, v) ==
              doctest::Approx(l8 * e_pair(psi, 1, 2, v)).epsilon(1e-9));
}

TEST_CASE("invariance under random local unitaries") {
    for (int t = 0; t < 5; ++t) {
        RngStream rng = RngStream::derive(91, t);
        const PureState psi = random_state(3, rng);
        const double f1 = f_single(psi, 1);
        const double f12 = f_pair(psi, 1, 2);
        const double s12 = s_pair(psi, 1, 2);
        const double ep = e_pair(psi, 1, 2, EVariant::paper);
        const double ea = e_pair(psi, 1, 2, EVariant::adjugate);
        double paper_dev = 0.0;
        for (int u = 0; u < 50; ++u) {
            const LocalUnitary lu = random_local_unitary(3, rng);
            const PureState chi = apply_local_unitary(psi, lu);
            CHECK(std::abs(f_single(chi, 1) - f1) < 1e-9);
            CHECK(std::abs(f_pair(chi, 1, 2) - f12) < 1e-9);
            CHECK(std::abs(s_pair(chi, 1, 2) - s12) < 1e-9);
            CHECK(std::abs(e_pair(chi, 1, 2, EVariant::adjugate) - ea) < 1e-9);
            paper_dev =
                std::max(paper_dev, std::abs(e_pair(chi, 1, 2, EVariant::paper) - ep));
        }
        // The verbatim printed sign pattern is NOT an LU invariant; this
        // is what the adjudication in the relations module detects.
        CHECK(paper_dev > 1e-3);
    }
}
