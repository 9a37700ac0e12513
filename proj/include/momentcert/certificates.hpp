#pragma once

#include <optional>
#include <string>
#include <vector>

#include "momentcert/moment_sequence.hpp"
#include "momentcert/oracles.hpp"

namespace momentcert {

inline constexpr double kSpectralCutoff = 1e-12;  // relative pseudo-inverse cutoff
inline constexpr double kIrlsRelTol = 1e-10;
inline constexpr int kIrlsMaxIter = 50;
inline constexpr double kDefaultTolCert = 1e-6;

enum class SearchSpace { AxisOnly, Full };

// min over deg(p) <= d of L(|1 - (x_axis - i) p|^2), solved by spectral
// pseudo-inverse of the (1 + x_axis^2)-weighted Gram in the monomial basis.
// The minimum reported is L(1) - Re(b^* G^+ b), clamped at 0.
struct LinearResidual {
    double value = 0.0;
    CPoly minimizer;
};
LinearResidual linear_residual(const MomentSequence& L, int axis, int d,
                               SearchSpace space = SearchSpace::Full);

// L(|1 - (x_axis - i) q|^4) by exact expansion, clamped at 0.
double quartic_eval(const MomentSequence& L, int axis, const CPoly& q);

// L(|1 - (1 + x_axis^2) q conj(q)|^2), the density-condition residual.
double density_residual_eval(const MomentSequence& L, int axis, const CPoly& q);

// Norm bound forcing the density residual from the quartic one: with
// Q = 1 - (x_axis - i) q,
//   sqrt(density_residual_eval) <= 2 sqrt(||Q conj(Q)|| ||1||) + ||Q conj(Q)||
// where ||Q conj(Q)||^2 = quartic_eval.
double density_residual_bound(const MomentSequence& L, int axis, const CPoly& q);

// Iterative reweighted least squares on the quartic objective, initialized
// at the linear_residual minimizer (or the supplied warm start, if better).
// Deterministic: at most kIrlsMaxIter sweeps, best iterate returned.
struct QuarticMin {
    double value = 0.0;
    CPoly minimizer;
    int iterations = 0;
    bool non_decreasing_flagged = false;  // first sweep failed to improve
};
QuarticMin quartic_minimize(const MomentSequence& L, int axis, int d,
                            SearchSpace space = SearchSpace::Full,
                            const CPoly* warm_start = nullptr);

// t_k = m_{2k}^{-1/(2k)} from log-scale even moments. Divergence of
// sum t_k is the classical Carleman criterion for the axis marginal.
std::vector<double> carleman_terms(const std::vector<double>& log_even_moments);

// Trend classification of the partial sums. Finitely many terms cannot
// decide divergence, so the label is explicitly a heuristic: a power-law fit
// log t_k ~ c - p log k over the tail classifies p <= 0.95 as divergent-trend
// and p >= 1.05 (or detected exponential decay) as convergent-trend.
struct CarlemanReport {
    std::vector<double> terms;
    std::vector<double> partial_sums;
    std::string classification;  // divergent-trend | convergent-trend | inconclusive
    double power_exponent = 0.0;
    double exp_slope = 0.0;
    bool exponential_decay = false;
};
CarlemanReport carleman_report(const std::vector<double>& terms);

// min over deg(q) <= d of || q - 1/(x - i) ||_{L^4(mu)} for a 1-D oracle;
// exact sums on atomic oracles, quadrature otherwise. Reports the achieved
// norm (not its 4th power).
struct L4Residual {
    double value = 0.0;
    CPoly minimizer;
};
L4Residual l4_density_residual(const MeasureOracle& m1d, int d);

// Both sides of the Hoelder step bounding the quartic residual:
//   lhs = int |1 - (x - i) q|^4 dmu
//   rhs = [ ||q - 1/(x - i)||_s * ||x - i||_{4s/(s-4)} ]^4,  s > 4
struct HolderCheck {
    double lhs = 0.0;
    double rhs = 0.0;
};
HolderCheck holder_check(const MeasureOracle& m1d, const CPoly& q, double s);

// Degree-sweep certificate per requested axis. Columns at degree d:
// the linear residual, the quartic minimum, and the density residual plus
// its norm bound at the quartic minimizer. An axis is certified when
// min(density_residual, bound^2) reaches tol_cert at some degree.
struct AxisRow {
    int d = 0;
    double linear_residual = 0.0;
    double quartic_value = 0.0;
    double density_residual = 0.0;
    double density_bound = 0.0;
};
struct AxisCertificate {
    int axis = 0;
    std::vector<AxisRow> rows;
    std::optional<CarlemanReport> carleman;
    std::string carleman_note;
    bool certified = false;
    double best_evidence = 0.0;
    int best_degree = 0;
};
struct CertificateReport {
    int n = 0;
    int max_degree = 0;
    int d_max = 0;
    double tol_cert = kDefaultTolCert;
    SearchSpace space = SearchSpace::Full;
    std::vector<int> axes;
    std::vector<AxisCertificate> per_axis;
    bool existence_evidence = false;    // axes 1..n-1 certified
    bool determinacy_evidence = false;  // axes 1..n certified
    std::vector<std::string> notes;
};
CertificateReport certify(const MomentSequence& L, std::vector<int> axes, int d_max,
                          double tol_cert = kDefaultTolCert,
                          SearchSpace space = SearchSpace::Full);

}  // namespace momentcert
