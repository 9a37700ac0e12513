#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace momentcert {

inline constexpr std::uint64_t kDefaultSeed = 12345;

struct SuiteResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    double worst_violation = 0.0;   // most positive excess over the allowed slack
    std::vector<std::string> failure_notes;

    bool pass() const { return failures == 0; }
};

// Exact coefficient identity 1 - (1+x_j^2) q conj(q) == Q + conj(Q) - Q conj(Q)
// for random integer-coefficient q (n <= 3, deg <= 4), every axis.
SuiteResult density_identity_suite(std::uint64_t seed, int count);

// sqrt(density residual) <= norm bound + 1e-9 and
// ||Q||^2 <= ||Q conj(Q)|| ||1|| + 1e-9 over random (atomic oracle, q) pairs.
SuiteResult norm_bound_suite(std::uint64_t seed, int count);

// |<f,g>|^2 <= <f,f><g,g> + 1e-9 over random atomic oracles and f, g.
SuiteResult cauchy_schwarz_suite(std::uint64_t seed, int count);

// Hoelder comparison lhs <= rhs + 1e-9 over random 1-D atomic oracles and q,
// with s = 6.
SuiteResult holder_suite(std::uint64_t seed, int count);

std::vector<SuiteResult> run_all_suites(std::uint64_t seed);

}  // namespace momentcert
