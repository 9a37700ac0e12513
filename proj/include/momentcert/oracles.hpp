#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "momentcert/localized.hpp"
#include "momentcert/moment_sequence.hpp"
#include "momentcert/rng.hpp"

namespace momentcert {

// 1-D measure families with closed-form moments.
struct Gaussian1D {
    double sigma = 1.0;  // centered N(0, sigma^2)
};
struct LogNormal1D {
    double sigma = 1.0;  // exp(N(0, sigma^2)); all moments finite, indeterminate
};
struct Uniform1D {
    double a = -1.0, b = 1.0;  // normalized to mass 1
};
struct Atomic1D {
    std::vector<double> points;
    std::vector<double> weights;
};
using Oracle1D = std::variant<Gaussian1D, LogNormal1D, Uniform1D, Atomic1D>;

// m_k; +inf once the value leaves double range (log form stays available)
double moment1d(const Oracle1D& o, int k);
// log m_{2k}, computed in log scale throughout; -inf when m_{2k} = 0
double log_even_moment1d(const Oracle1D& o, int k);
bool is_heavy_tailed(const Oracle1D& o);

// A measure with exactly known moments: either a finite atomic measure on
// R^n or a product of independent 1-D factors. Serves as ground truth for
// the certificate and support checks.
class MeasureOracle {
public:
    static MeasureOracle atomic(std::vector<std::vector<double>> points,
                                std::vector<double> weights);
    static MeasureOracle product(std::vector<Oracle1D> factors);
    static MeasureOracle from_1d(Oracle1D factor);

    int dim() const { return n_; }
    bool is_atomic() const { return atomic_.has_value(); }
    // true also for products whose factors are all atomic
    bool has_continuous_part() const;
    bool heavy_tailed() const;

    const std::vector<std::vector<double>>& atoms() const;
    const std::vector<double>& weights() const;
    const std::vector<Oracle1D>& factors() const;

    // exact closed-form moment; +inf on overflow
    double moment(const MultiIndex& alpha) const;
    // complete truncated functional; throws MomentOverflow if any requested
    // moment leaves double range
    MomentSequence moments(int max_degree) const;
    // log L(x_axis^{2k}) for k = 1..K, exact in log scale
    std::vector<double> log_even_moments(int axis, int K) const;

    Cx integrate_localized(const LocalizedElement& f) const;
    // (integral of |f|^s)^{1/s}, s >= 1
    double lp_norm(const LocalizedElement& f, double s) const;

    MeasureOracle marginal(int axis) const;

    // Adaptive pointwise integration against the measure: atomic parts are
    // exact sums, continuous factors use Gauss rules with node doubling until
    // successive estimates agree to kQuadRelTol. growth_degree bounds the
    // polynomial growth of fn (sizes the log-normal truncation window).
    Cx integrate(const std::function<Cx(std::span<const double>)>& fn,
                 int growth_degree) const;

private:
    MeasureOracle() = default;

    int n_ = 0;
    struct AtomicND {
        std::vector<std::vector<double>> points;
        std::vector<double> weights;
    };
    std::optional<AtomicND> atomic_;
    std::vector<Oracle1D> factors_;
};

// Seeded generator used by the property suites: r atoms in [-2, 2]^n with
// weights normalized to total mass 1.
MeasureOracle random_atomic_oracle(Rng& rng, int n, int r);
// Same but enforcing pairwise atom separation >= min_gap on every axis
// projection (keeps interpolation problems well-conditioned).
MeasureOracle random_atomic_oracle_separated(Rng& rng, int n, int r, double min_gap);

}  // namespace momentcert
