#include "qtangle/relations.hpp"

#include <algorithm>
#include <cmath>

#include "qtangle/digest.hpp"
#include "qtangle/lu_sampler.hpp"
#include "qtangle/tangles.hpp"

namespace qtangle {

const char* to_string(Relation r) { return r == Relation::eq15 ? "eq15" : "eq18"; }

RelationReport eq15_residual(const PureState& state, int distinguished,
                             EVariant e_variant, TauSource tau_source) {
    if (state.n_qubits() != 3)
        throw wrong_qubit_count("three-qubit relation needs a 3-qubit state");
    if (distinguished < 1 || distinguished > 3)
        throw qubit_out_of_range("distinguished qubit must be 1, 2 or 3");
    int i = 0, j = 0;
    for (int q = 1; q <= 3; ++q)
        if (q != distinguished) (i == 0 ? i : j) = q;

    const double T = t_invariant(state);
    const double fk = f_single(state, distinguished);
    const double fi = f_single(state, i);
    const double fj = f_single(state, j);
    const double s = s_pair(state, i, j);
    const double e = e_pair(state, i, j, e_variant);
    const double tau2 = tau_source == TauSource::ckw_oracle
                            ? three_tangle_ckw_oracle(state).tau_squared
                            : three_tangle(state).tau_squared;
    const double first = T * T + fk - fi - fj;
    const double rhs = first * first + 4.0 * (s * T - e);

    RelationReport r;
    r.relation = Relation::eq15;
    r.residual = std::abs(tau2 - rhs);
    r.e_variant = e_variant;
    r.state_digest = state_digest(state);
    const std::string ij = std::to_string(i) + std::to_string(j);
    r.components = {{"T", T},
                    {"F" + std::to_string(distinguished), fk},
                    {"F" + std::to_string(i), fi},
                    {"F" + std::to_string(j), fj},
                    {"S" + ij, s},
                    {"E" + ij, e},
                    {"tau_squared", tau2},
                    {"rhs", rhs}};
    return r;
}

RelationReport eq18_residual(const PureState& state) {
    if (state.n_qubits() != 4)
        throw wrong_qubit_count("four-qubit relation needs a 4-qubit state");
    RelationReport r;
    r.relation = Relation::eq18;
    r.e_variant = kCanonicalEVariant;
    r.state_digest = state_digest(state);

    double sum_f = 0.0;
    for (int k = 1; k <= 4; ++k) {
        const double f = f_single(state, k);
        r.components["F" + std::to_string(k)] = f;
        sum_f += f;
    }
    double sum_f3 = 0.0;
    constexpr std::array<std::array<int, 3>, 4> triples = {
        {{1, 2, 3}, {1, 2, 4}, {2, 3, 4}, {1, 3, 4}}};
    for (const auto& t : triples) {
        const double f = f_triple(state, t[0], t[1], t[2]);
        r.components["F" + std::to_string(t[0]) + std::to_string(t[1]) +
                     std::to_string(t[2])] = f;
        sum_f3 += f;
    }
    const double tau2 = four_tangle(state, FourTangleMethod::antilinear).tau_squared;
    r.components["tau_squared"] = tau2;
    r.residual = std::abs(sum_f + sum_f3 + 8.0 * tau2 - 8.0);
    return r;
}

AdjudicationReport adjudicate_e_variant(int n_samples, std::uint64_t seed) {
    if (n_samples < 100)
        throw bad_parameters("adjudication needs at least 100 samples");
    AdjudicationReport rep;
    rep.n_samples = n_samples;
    rep.seed = seed;
    for (int s = 0; s < n_samples; ++s) {
        RngStream rng = RngStream::derive(seed, static_cast<std::uint64_t>(s));
        const PureState psi = random_state(3, rng);
        for (int k = 1; k <= 3; ++k) {
            rep.max_residual_paper = std::max(
                rep.max_residual_paper,
                eq15_residual(psi, k, EVariant::paper).residual);
            rep.max_residual_adjugate = std::max(
                rep.max_residual_adjugate,
                eq15_residual(psi, k, EVariant::adjugate).residual);
        }
    }
    const bool paper_ok = rep.max_residual_paper < rep.threshold;
    const bool adj_ok = rep.max_residual_adjugate < rep.threshold;
    if (paper_ok != adj_ok)
        rep.selected = paper_ok ? EVariant::paper : EVariant::adjugate;
    return rep;
}

double probe_eq15_homogeneity(int n_samples, std::uint64_t seed) {
    double worst = 0.0;
    for (int s = 0; s < n_samples; ++s) {
        RngStream rng = RngStream::derive(seed ^ 0x6a09e667f3bcc908ULL,
                                          static_cast<std::uint64_t>(s));
        const PureState psi = random_state(3, rng);
        const double lambda = 0.25 + 2.0 * rng.uniform01();
        std::vector<cplx> amps(psi.amplitudes());
        for (cplx& a : amps) a *= lambda;
        const PureState scaled = PureState::unchecked(3, std::move(amps));
        for (int k = 1; k <= 3; ++k)
            worst = std::max(
                worst, eq15_residual(scaled, k, kCanonicalEVariant).residual);
    }
    return worst;
}

}  // namespace qtangle
