#include "qtangle/catalog.hpp"

#include <cmath>

namespace qtangle {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

cplx param(const std::map<std::string, cplx>& given, const std::string& key,
           cplx fallback) {
    auto it = given.find(key);
    return it == given.end() ? fallback : it->second;
}

void check_normalized(double sum_sq) {
    if (std::abs(sum_sq - 1.0) > 1e-10)
        throw bad_parameters("family parameters violate the normalization constraint: "
                             "sum of squared moduli is " +
                             std::to_string(sum_sq));
}

}  // namespace

std::vector<std::string> catalog_names() {
    return {"factorized3", "ghz3",     "w3",
            "ghz4",        "cluster4", "product_n",
            "bell_pair_times_zero"};
}

CatalogResult catalog_build(const std::string& name,
                            const std::map<std::string, cplx>& p) {
    CatalogEntry e;
    e.name = name;

    if (name == "ghz3") {
        const cplx a0 = param(p, "a0", kInvSqrt2), a7 = param(p, "a7", kInvSqrt2);
        const double m0 = std::norm(a0), m7 = std::norm(a7);
        check_normalized(m0 + m7);
        e.n_qubits = 3;
        e.parameters = {{"a0", a0}, {"a7", a7}};
        const double f = 1.0 - 4.0 * m0 * m7;
        e.expected = {{"F1", f},         {"F2", f},
                      {"F3", f},         {"S12", 0.0},
                      {"E12", 0.0},      {"tau3_squared", 16.0 * m0 * m0 * m7 * m7}};
        std::vector<cplx> amps(8, 0.0);
        amps[0] = a0;
        amps[7] = a7;
        return {PureState::make(3, std::move(amps)), e};
    }

    if (name == "factorized3") {
        // qubit 1 factored off in |1>: a4|100> + a7|111>
        const cplx a4 = param(p, "a4", kInvSqrt2), a7 = param(p, "a7", kInvSqrt2);
        const double m4 = std::norm(a4), m7 = std::norm(a7);
        check_normalized(m4 + m7);
        e.n_qubits = 3;
        e.parameters = {{"a4", a4}, {"a7", a7}};
        const double f = 1.0 - 4.0 * m4 * m7;
        e.expected = {{"F1", 1.0},  {"F2", f},           {"F3", f},
                      {"S12", 0.0}, {"E12", 0.0},        {"tau3_squared", 0.0}};
        std::vector<cplx> amps(8, 0.0);
        amps[4] = a4;
        amps[7] = a7;
        return {PureState::make(3, std::move(amps)), e};
    }

    if (name == "w3") {
        const double d = 1.0 / std::sqrt(3.0);
        const cplx a1 = param(p, "a1", d), a2 = param(p, "a2", d),
                   a4 = param(p, "a4", d);
        const double m1 = std::norm(a1), m2 = std::norm(a2), m4 = std::norm(a4);
        check_normalized(m1 + m2 + m4);
        e.n_qubits = 3;
        e.parameters = {{"a1", a1}, {"a2", a2}, {"a4", a4}};
        e.expected = {
            {"F1", 1.0 - 4.0 * (m1 + m2) * m4},
            {"F2", 1.0 - 4.0 * (m1 + m4) * m2},
            {"F3", 1.0 - 4.0 * (m2 + m4) * m1},
            // det of the pair-(1,2) correlation matrix; the prefactor is
            // |a2|^2|a4|^2, fixed against the relation below and the
            // determinant route.
            {"S12", 4.0 * m2 * m4 * (m1 - m2 - m4)},
            {"E12", 4.0 * m2 * m4 * (m1 + m2 - m4) * (m1 - m2 + m4)},
            {"tau3_squared", 0.0}};
        std::vector<cplx> amps(8, 0.0);
        amps[1] = a1;
        amps[2] = a2;
        amps[4] = a4;
        return {PureState::make(3, std::move(amps)), e};
    }

    if (name == "ghz4") {
        const cplx a0 = param(p, "a0", kInvSqrt2), a15 = param(p, "a15", kInvSqrt2);
        const double m0 = std::norm(a0), m15 = std::norm(a15);
        check_normalized(m0 + m15);
        e.n_qubits = 4;
        e.parameters = {{"a0", a0}, {"a15", a15}};
        const double f = 1.0 - 4.0 * m0 * m15;
        e.expected = {{"F1", f},    {"F2", f},    {"F3", f},    {"F4", f},
                      {"F123", f},  {"F124", f},  {"F234", f},  {"F134", f},
                      {"tau4_squared", 4.0 * m0 * m15}};
        std::vector<cplx> amps(16, 0.0);
        amps[0] = a0;
        amps[15] = a15;
        return {PureState::make(4, std::move(amps)), e};
    }

    if (name == "cluster4") {
        if (!p.empty()) throw bad_parameters("cluster4 takes no parameters");
        e.n_qubits = 4;
        e.expected = {{"sum_F", 0.0}, {"sum_F3", 8.0}, {"tau4_squared", 0.0}};
        const double c = 1.0 / (2.0 * std::sqrt(2.0));
        std::vector<cplx> amps(16, 0.0);
        amps[0] = c;    // |0000>
        amps[3] = -c;   // |0011>
        amps[5] = -c;   // |0101>
        amps[6] = c;    // |0110>
        amps[9] = c;    // |1001>
        amps[10] = c;   // |1010>
        amps[12] = c;   // |1100>
        amps[15] = c;   // |1111>
        return {PureState::make(4, std::move(amps)), e};
    }

    if (name == "product_n") {
        const int n = static_cast<int>(param(p, "n", cplx(3, 0)).real());
        if (n < 2 || n > 4) throw bad_parameters("product_n needs n in {2,3,4}");
        e.n_qubits = n;
        e.parameters = {{"n", cplx(n, 0)}};
        for (int k = 1; k <= n; ++k) e.expected["F" + std::to_string(k)] = 1.0;
        if (n == 3) e.expected["tau3_squared"] = 0.0;
        if (n == 4) e.expected["tau4_squared"] = 0.0;
        std::vector<cplx> amps(std::size_t{1} << n, 0.0);
        amps[0] = 1.0;
        return {PureState::make(n, std::move(amps)), e};
    }

    if (name == "bell_pair_times_zero") {
        const cplx alpha = param(p, "alpha", kInvSqrt2),
                   beta = param(p, "beta", kInvSqrt2);
        const double ma = std::norm(alpha), mb = std::norm(beta);
        check_normalized(ma + mb);
        e.n_qubits = 3;
        e.parameters = {{"alpha", alpha}, {"beta", beta}};
        const double d = ma - mb;
        e.expected = {{"F3", 1.0},
                      {"S12", -4.0 * ma * mb},
                      {"E12", -4.0 * ma * mb * d * d},
                      {"tau3_squared", 0.0}};
        std::vector<cplx> amps(8, 0.0);
        amps[0] = alpha;  // |000>
        amps[6] = beta;   // |110>
        return {PureState::make(3, std::move(amps)), e};
    }

    throw unknown_name("no catalog family named '" + name + "'");
}

}  // namespace qtangle
