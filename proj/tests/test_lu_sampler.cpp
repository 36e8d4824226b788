#include <cmath>

#include "doctest.h"
#include "qtangle/lu_sampler.hpp"
#include "qtangle/tangles.hpp"

using namespace qtangle;

namespace {

// max-norm of U^dag U - I
double unitarity_defect(const Mat2& u) {
    const cplx g00 = std::conj(u[0]) * u[0] + std::conj(u[2]) * u[2];
    const cplx g01 = std::conj(u[0]) * u[1] + std::conj(u[2]) * u[3];
    const cplx g11 = std::conj(u[1]) * u[1] + std::conj(u[3]) * u[3];
    return std::max({std::abs(g00 - 1.0), std::abs(g01), std::abs(g11 - 1.0)});
}

}  // namespace

TEST_CASE("haar draws are unitary with unimodular determinant") {
    RngStream rng(9001);
    for (int t = 0; t < 10000; ++t) {
        const Mat2 u = haar_single_qubit(rng);
        CHECK(unitarity_defect(u) < 1e-12);
        CHECK(std::abs(std::abs(u[0] * u[3] - u[1] * u[2]) - 1.0) < 1e-12);
    }
}

TEST_CASE("haar measure: |U00|^2 is uniform on [0,1]") {
    RngStream rng(9002);
    double mean = 0.0;
    const int draws = 100000;
    for (int t = 0; t < draws; ++t)
        mean += std::norm(haar_single_qubit(rng)[0]);
    mean /= draws;
    CHECK(std::abs(mean - 0.5) < 0.01);
}

TEST_CASE("apply_local_unitary basics") {
    std::vector<cplx> z(8, 0.0);
    z[0] = 1.0;
    const PureState psi = PureState::make(3, z);

    const Mat2 id = {1, 0, 0, 1};
    const PureState same = apply_local_unitary(psi, LocalUnitary{{id, id, id}});
    for (std::size_t k = 0; k < psi.dim(); ++k) CHECK(same[k] == psi[k]);

    const Mat2 x = {0, 1, 1, 0};
    const PureState flipped = apply_local_unitary(psi, LocalUnitary{{x, id, id}});
    CHECK(std::abs(flipped[4] - cplx(1, 0)) < 1e-15);  // |100>

    CHECK_THROWS_AS(apply_local_unitary(psi, LocalUnitary{{id, id}}), size_mismatch);
}

TEST_CASE("random LU preserves norm and the tangle") {
    RngStream rng(9003);
    std::vector<cplx> g(8, 0.0);
    g[0] = g[7] = 1.0 / std::sqrt(2.0);
    const PureState ghz = PureState::make(3, g);
    for (int t = 0; t < 100; ++t) {
        const PureState chi = apply_local_unitary(ghz, random_local_unitary(3, rng));
        CHECK(std::abs(chi.norm_squared() - 1.0) < 1e-12);
        CHECK(std::abs(three_tangle(chi).tau - 1.0) < 1e-9);
    }
}

TEST_CASE("random_state statistics and determinism") {
    RngStream rng(9004);
    for (int t = 0; t < 100; ++t)
        CHECK(std::abs(random_state(3, rng).norm_squared() - 1.0) < 1e-12);

    double mean = 0.0;
    const int draws = 100000;
    for (int t = 0; t < draws; ++t) {
        RngStream r = RngStream::derive(9005, t);
        mean += std::norm(random_state(3, r)[0]);
    }
    mean /= draws;
    CHECK(std::abs(mean - 0.125) < 0.002);

    // identical (seed, index) -> identical states, bit for bit
    RngStream r1 = RngStream::derive(55, 7), r2 = RngStream::derive(55, 7);
    const PureState s1 = random_state(4, r1), s2 = random_state(4, r2);
    for (std::size_t k = 0; k < s1.dim(); ++k) CHECK(s1[k] == s2[k]);

    RngStream r3 = RngStream::derive(55, 8);
    const PureState s3 = random_state(4, r3);
    CHECK(s1[0] != s3[0]);
}
