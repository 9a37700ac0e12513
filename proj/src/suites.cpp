#include "momentcert/suites.hpp"

#include <cmath>

#include "momentcert/certificates.hpp"
#include "momentcert/oracles.hpp"
#include "momentcert/poly_text.hpp"
#include "momentcert/rng.hpp"

namespace momentcert {

namespace {

constexpr double kSlack = 1e-9;

void record(SuiteResult& r, bool ok, double excess, const std::string& note) {
    ++r.cases;
    if (excess > r.worst_violation) r.worst_violation = excess;
    if (!ok) {
        ++r.failures;
        if (r.failure_notes.size() < 10) r.failure_notes.push_back(note);
    }
}

}  // namespace

SuiteResult density_identity_suite(std::uint64_t seed, int count) {
    SuiteResult r;
    r.name = "density-identity";
    Rng rng(seed);
    for (int c = 0; c < count; ++c) {
        const int n = rng.uniform_int(1, 3);
        const int deg = rng.uniform_int(0, 4);
        const CPoly q = rng.integer_poly(n, deg, -3, 3);
        for (int axis = 1; axis <= n; ++axis) {
            const DensityIdentity id = density_identity(axis, q);
            const bool ok = id.lhs == id.rhs;
            record(r, ok, ok ? 0.0 : 1.0,
                   "case " + std::to_string(c) + " axis " + std::to_string(axis) +
                       ": lhs != rhs for q = " + to_text(q));
        }
    }
    return r;
}

SuiteResult norm_bound_suite(std::uint64_t seed, int count) {
    SuiteResult r;
    r.name = "norm-bound";
    Rng rng(seed);
    for (int c = 0; c < count; ++c) {
        const int n = rng.uniform_int(1, 2);
        const int atoms = rng.uniform_int(1, 4);
        const MeasureOracle m = random_atomic_oracle(rng, n, atoms);
        const int deg = rng.uniform_int(0, 2);
        const CPoly q = rng.real_coeff_poly(n, deg, -1.0, 1.0);
        const int axis = rng.uniform_int(1, n);
        const MomentSequence L = m.moments(4 * (deg + 1));

        const double res = density_residual_eval(L, axis, q);
        const double bound = density_residual_bound(L, axis, q);
        const double excess1 = std::sqrt(res) - bound - kSlack;
        record(r, excess1 <= 0.0, excess1,
               "case " + std::to_string(c) + ": sqrt(residual) exceeds bound by " +
                   format_double(excess1));

        // ||Q||^2 <= ||Q conj(Q)|| ||1||
        CPoly xj_minus_i = CPoly::variable(n, axis);
        xj_minus_i.add_term(MultiIndex(n), Cx(0.0, -1.0));
        const CPoly Q = CPoly::constant(n, 1.0) - xj_minus_i * q;
        const double qn = L.norm(Q);
        const double qq_norm = std::sqrt(quartic_eval(L, axis, q));
        const double one_norm = L.norm(CPoly::constant(n, 1.0));
        const double excess2 = qn * qn - qq_norm * one_norm - kSlack;
        record(r, excess2 <= 0.0, excess2,
               "case " + std::to_string(c) + ": ||Q||^2 exceeds ||Q conj Q|| ||1|| by " +
                   format_double(excess2));
    }
    return r;
}

SuiteResult cauchy_schwarz_suite(std::uint64_t seed, int count) {
    SuiteResult r;
    r.name = "cauchy-schwarz";
    Rng rng(seed);
    for (int c = 0; c < count; ++c) {
        const int n = rng.uniform_int(1, 2);
        const int atoms = rng.uniform_int(1, 4);
        const MeasureOracle m = random_atomic_oracle(rng, n, atoms);
        const int deg_f = rng.uniform_int(0, 2);
        const int deg_g = rng.uniform_int(0, 2);
        const CPoly f = rng.real_coeff_poly(n, deg_f, -1.0, 1.0);
        const CPoly g = rng.real_coeff_poly(n, deg_g, -1.0, 1.0);
        const MomentSequence L = m.moments(2 * std::max(deg_f, deg_g) + 2);

        const double lhs = std::norm(L.inner(f, g));
        const double rhs = L.inner(f, f).real() * L.inner(g, g).real();
        const double excess = lhs - rhs - kSlack;
        record(r, excess <= 0.0, excess,
               "case " + std::to_string(c) + ": |<f,g>|^2 exceeds <f,f><g,g> by " +
                   format_double(excess));
    }
    return r;
}

SuiteResult holder_suite(std::uint64_t seed, int count) {
    SuiteResult r;
    r.name = "holder";
    Rng rng(seed);
    for (int c = 0; c < count; ++c) {
        const int atoms = rng.uniform_int(1, 4);
        const MeasureOracle m = random_atomic_oracle(rng, 1, atoms);
        const int deg = rng.uniform_int(0, 2);
        const CPoly q = rng.real_coeff_poly(1, deg, -1.0, 1.0);
        const HolderCheck h = holder_check(m, q, 6.0);
        const double excess = h.lhs - h.rhs - kSlack;
        record(r, excess <= 0.0, excess,
               "case " + std::to_string(c) + ": lhs exceeds rhs by " + format_double(excess));
    }
    return r;
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed) {
    return {
        density_identity_suite(seed, 100),
        norm_bound_suite(seed, 200),
        cauchy_schwarz_suite(seed, 200),
        holder_suite(seed, 100),
    };
}

}  // namespace momentcert
