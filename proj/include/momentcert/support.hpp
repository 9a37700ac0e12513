#pragma once

#include <optional>
#include <string>
#include <vector>

#include "momentcert/localized.hpp"
#include "momentcert/moment_sequence.hpp"
#include "momentcert/oracles.hpp"

namespace momentcert {

inline constexpr double kTolGeo = 1e-9;  // pointwise membership tolerance

enum class GenMode { Inequality, Equality };

struct Generator {
    CPoly poly;   // real
    GenMode mode = GenMode::Inequality;
};

// Finitely many generators of a quadratic module; equality mode models an
// ideal contribution (g and -g both enforced).
struct GeneratorSet {
    explicit GeneratorSet(int n) : dim(n) {}
    GeneratorSet(int n, std::vector<Generator> gs);

    int dim;
    std::vector<Generator> gens;
};

// Nonnegativity of L on the truncated module: min eigenvalue of the
// localizing matrix for the constant 1 and every inequality generator,
// kernel test for every equality generator.
struct ModuleEntry {
    std::string generator;  // poly text, "1" for the unit entry
    GenMode mode = GenMode::Inequality;
    bool is_unit = false;
    double min_eig = 0.0;
    double tol = 0.0;
    std::optional<KernelCheck> kernel;
    bool pass = false;
    std::vector<double> eigvec;  // eigenvector at min_eig (inequality entries)
};
struct ModuleCheckResult {
    int d = 0;
    std::vector<ModuleEntry> entries;
    bool verdict = false;  // nonnegative-on-truncation
};
ModuleCheckResult module_check(const MomentSequence& L, const GeneratorSet& gens, int d);

// Point membership in X_M = {a : g(a) >= 0 for inequalities, g(a) = 0 for
// equalities}; boundary points count as members.
bool membership(const GeneratorSet& gens, std::span<const double> point,
                double tol_geo = kTolGeo);

// Runs both sides of the support theorem on an explicitly atomic oracle:
// localizing-matrix checks for d = 0..d_max against exact atom membership.
// If the module checks all pass, every atom must be a member (a violation
// here falsifies the implementation, not the data). A non-member atom should
// surface as a negative eigenvalue at some degree; the degree and an
// eigenvector witness h with L(g h^2) < 0 are recorded, or the outcome is
// flagged undetected (no effective degree bound exists).
struct SupportExperiment {
    int d_max = 0;
    std::vector<ModuleCheckResult> per_degree;
    std::vector<bool> atom_member;
    bool all_atoms_member = false;
    bool module_all_pass = false;
    bool contract_violated = false;
    std::optional<int> detecting_degree;
    bool undetected_at_dmax = false;
    std::optional<CPoly> witness;
    double witness_value = 0.0;
    std::string witness_generator;
};
SupportExperiment support_inclusion_experiment(const MeasureOracle& m, const GeneratorSet& gens,
                                               int d_max);

// integral of g h conj(h) dmu for localized h; nonnegative whenever the
// support of mu lies in {g >= 0}.
double localized_nonneg_check(const MeasureOracle& m, const CPoly& g, const LocalizedElement& h);

}  // namespace momentcert
