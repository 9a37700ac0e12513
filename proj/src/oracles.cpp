#include "momentcert/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "momentcert/quadrature.hpp"

namespace momentcert {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double powi(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

double gaussian_moment(double sigma, int k) {
    if (k % 2 == 1) return 0.0;
    // m_{2j} = (2j - 1) sigma^2 m_{2j-2}
    double m = 1.0;
    for (int j = 1; 2 * j <= k; ++j) {
        m *= (2.0 * j - 1.0) * sigma * sigma;
        if (!std::isfinite(m)) return kInf;
    }
    return m;
}

double uniform_moment(double a, double b, int k) {
    // int x^k dx / (b - a)
    double num = powi(b, k + 1) - powi(a, k + 1);
    if (!std::isfinite(num)) return kInf;
    return num / ((k + 1.0) * (b - a));
}

double atomic1d_moment(const Atomic1D& o, int k) {
    double m = 0.0;
    for (std::size_t i = 0; i < o.points.size(); ++i) m += o.weights[i] * powi(o.points[i], k);
    return m;
}

}  // namespace

double moment1d(const Oracle1D& o, int k) {
    if (k < 0) throw InvalidSpec("moment1d: negative degree");
    return std::visit(
        [k](const auto& f) -> double {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Gaussian1D>) {
                return gaussian_moment(f.sigma, k);
            } else if constexpr (std::is_same_v<T, LogNormal1D>) {
                return std::exp(0.5 * f.sigma * f.sigma * k * k);
            } else if constexpr (std::is_same_v<T, Uniform1D>) {
                return uniform_moment(f.a, f.b, k);
            } else {
                return atomic1d_moment(f, k);
            }
        },
        o);
}

double log_even_moment1d(const Oracle1D& o, int k) {
    if (k < 1) throw InvalidSpec("log_even_moment1d: k must be >= 1");
    return std::visit(
        [k](const auto& f) -> double {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Gaussian1D>) {
                // log(sigma^{2k} (2k-1)!!)
                double lg = 2.0 * k * std::log(f.sigma);
                for (int j = 1; j <= k; ++j) lg += std::log(2.0 * j - 1.0);
                return lg;
            } else if constexpr (std::is_same_v<T, LogNormal1D>) {
                return 2.0 * f.sigma * f.sigma * k * k;  // (2k)^2 sigma^2 / 2
            } else if constexpr (std::is_same_v<T, Uniform1D>) {
                const double M = std::max(std::abs(f.a), std::abs(f.b));
                if (M == 0.0) return -kInf;
                const double u = f.b / M, v = f.a / M;
                const double inner =
                    (powi(u, 2 * k + 1) - powi(v, 2 * k + 1)) / ((2.0 * k + 1.0) * (u - v));
                return 2.0 * k * std::log(M) + std::log(inner);
            } else {
                double M = 0.0;
                for (double p : f.points) M = std::max(M, std::abs(p));
                if (M == 0.0) return -kInf;
                double scaled = 0.0;
                for (std::size_t i = 0; i < f.points.size(); ++i)
                    scaled += f.weights[i] * powi(f.points[i] / M, 2 * k);
                if (scaled <= 0.0) return -kInf;
                return 2.0 * k * std::log(M) + std::log(scaled);
            }
        },
        o);
}

bool is_heavy_tailed(const Oracle1D& o) {
    return std::holds_alternative<Gaussian1D>(o) || std::holds_alternative<LogNormal1D>(o);
}

MeasureOracle MeasureOracle::atomic(std::vector<std::vector<double>> points,
                                    std::vector<double> weights) {
    if (points.empty()) throw InvalidSpec("atomic oracle: no atoms");
    if (points.size() != weights.size())
        throw InvalidSpec("atomic oracle: point/weight count mismatch");
    const std::size_t n = points[0].size();
    if (n == 0) throw InvalidSpec("atomic oracle: zero-dimensional atoms");
    for (const auto& p : points)
        if (p.size() != n) throw InvalidSpec("atomic oracle: ragged atom list");
    for (double w : weights)
        if (!(w > 0.0) || !std::isfinite(w)) throw InvalidSpec("atomic oracle: weights must be > 0");
    MeasureOracle m;
    m.n_ = static_cast<int>(n);
    m.atomic_ = AtomicND{std::move(points), std::move(weights)};
    return m;
}

MeasureOracle MeasureOracle::product(std::vector<Oracle1D> factors) {
    if (factors.empty()) throw InvalidSpec("product oracle: no factors");
    for (const auto& f : factors) {
        if (const auto* u = std::get_if<Uniform1D>(&f)) {
            if (!(u->a < u->b)) throw InvalidSpec("uniform factor: need a < b");
        } else if (const auto* g = std::get_if<Gaussian1D>(&f)) {
            if (!(g->sigma > 0.0)) throw InvalidSpec("gaussian factor: need sigma > 0");
        } else if (const auto* l = std::get_if<LogNormal1D>(&f)) {
            if (!(l->sigma > 0.0)) throw InvalidSpec("lognormal factor: need sigma > 0");
        } else if (const auto* a = std::get_if<Atomic1D>(&f)) {
            if (a->points.empty() || a->points.size() != a->weights.size())
                throw InvalidSpec("atomic1d factor: bad point/weight lists");
            for (double w : a->weights)
                if (!(w > 0.0)) throw InvalidSpec("atomic1d factor: weights must be > 0");
        }
    }
    MeasureOracle m;
    m.n_ = static_cast<int>(factors.size());
    m.factors_ = std::move(factors);
    return m;
}

MeasureOracle MeasureOracle::from_1d(Oracle1D factor) {
    return product({std::move(factor)});
}

bool MeasureOracle::has_continuous_part() const {
    if (atomic_) return false;
    for (const auto& f : factors_)
        if (!std::holds_alternative<Atomic1D>(f)) return true;
    return false;
}

bool MeasureOracle::heavy_tailed() const {
    if (atomic_) return false;
    for (const auto& f : factors_)
        if (is_heavy_tailed(f)) return true;
    return false;
}

const std::vector<std::vector<double>>& MeasureOracle::atoms() const {
    if (!atomic_) throw NonAtomicOracle("oracle is not an explicit atomic measure");
    return atomic_->points;
}

const std::vector<double>& MeasureOracle::weights() const {
    if (!atomic_) throw NonAtomicOracle("oracle is not an explicit atomic measure");
    return atomic_->weights;
}

const std::vector<Oracle1D>& MeasureOracle::factors() const {
    if (atomic_) throw InvalidSpec("atomic oracle has no product factors");
    return factors_;
}

double MeasureOracle::moment(const MultiIndex& alpha) const {
    if (alpha.dim() != n_) throw DimensionMismatch("oracle moment: alpha length != n");
    if (atomic_) {
        double m = 0.0;
        for (std::size_t i = 0; i < atomic_->points.size(); ++i) {
            double mono = 1.0;
            for (int j = 0; j < n_; ++j)
                mono *= powi(atomic_->points[i][static_cast<std::size_t>(j)], alpha[j]);
            m += atomic_->weights[i] * mono;
        }
        return m;
    }
    double m = 1.0;
    for (int j = 0; j < n_; ++j) m *= moment1d(factors_[static_cast<std::size_t>(j)], alpha[j]);
    return m;
}

MomentSequence MeasureOracle::moments(int max_degree) const {
    if (max_degree < 0) throw InvalidSpec("oracle moments: negative degree");
    MomentSequence::MomentMap map;
    for (const auto& a : monomial_basis(n_, max_degree)) {
        const double v = moment(a);
        if (!std::isfinite(v))
            throw MomentOverflow(
                "moment of degree " + std::to_string(a.degree()) +
                " overflows double range; use log_even_moments for this oracle");
        map.emplace(a, v);
    }
    return MomentSequence(n_, max_degree, std::move(map));
}

std::vector<double> MeasureOracle::log_even_moments(int axis, int K) const {
    if (axis < 1 || axis > n_) throw DimensionMismatch("log_even_moments: axis out of range");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(K));
    if (atomic_) {
        // project to the axis and reuse the 1-D scaled computation
        Atomic1D proj;
        for (const auto& p : atomic_->points)
            proj.points.push_back(p[static_cast<std::size_t>(axis - 1)]);
        proj.weights = atomic_->weights;
        for (int k = 1; k <= K; ++k) out.push_back(log_even_moment1d(proj, k));
    } else {
        const auto& f = factors_[static_cast<std::size_t>(axis - 1)];
        for (int k = 1; k <= K; ++k) out.push_back(log_even_moment1d(f, k));
    }
    return out;
}

namespace {

// Node/weight list for one axis at a refinement level; atomic factors are
// exact and ignore the level.
void factor_rule(const Oracle1D& f, int nodes, int growth_degree,
                 std::vector<double>& xs, std::vector<double>& ws) {
    std::visit(
        [&](const auto& o) {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, Uniform1D>) {
                const auto& gl = gauss_legendre(nodes);
                const double mid = 0.5 * (o.a + o.b), half = 0.5 * (o.b - o.a);
                for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
                    xs.push_back(mid + half * gl.nodes[i]);
                    ws.push_back(0.5 * gl.weights[i]);  // probability normalization
                }
            } else if constexpr (std::is_same_v<T, Gaussian1D>) {
                const auto& gh = gauss_hermite(nodes);
                const double inv_sqrt_pi = 0.5641895835477563;
                for (std::size_t i = 0; i < gh.nodes.size(); ++i) {
                    xs.push_back(std::sqrt(2.0) * o.sigma * gh.nodes[i]);
                    ws.push_back(inv_sqrt_pi * gh.weights[i]);
                }
            } else if constexpr (std::is_same_v<T, LogNormal1D>) {
                // x = exp(sigma z), z ~ N(0,1), Gauss-Legendre on [-R, R];
                // R sized so the truncated tail of x^growth is below 1e-31
                // relative to the peak.
                const double sg = o.sigma * std::max(growth_degree, 0);
                const double R = std::max(12.0, sg + std::sqrt(sg * sg + 144.0));
                const auto& gl = gauss_legendre(nodes);
                const double inv_sqrt_2pi = 0.3989422804014327;
                for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
                    const double z = R * gl.nodes[i];
                    xs.push_back(std::exp(o.sigma * z));
                    ws.push_back(R * gl.weights[i] * inv_sqrt_2pi * std::exp(-0.5 * z * z));
                }
            } else {
                xs.insert(xs.end(), o.points.begin(), o.points.end());
                ws.insert(ws.end(), o.weights.begin(), o.weights.end());
            }
        },
        f);
}

}  // namespace

Cx MeasureOracle::integrate(const std::function<Cx(std::span<const double>)>& fn,
                            int growth_degree) const {
    if (atomic_) {
        Cx acc(0.0, 0.0);
        for (std::size_t i = 0; i < atomic_->points.size(); ++i)
            acc += atomic_->weights[i] * fn(atomic_->points[i]);
        return acc;
    }

    const int max_nodes = n_ == 1 ? kQuadMaxNodes1D : (n_ == 2 ? 1024 : 256);
    Cx prev(0.0, 0.0);
    bool have_prev = false;
    double achieved = kInf;
    for (int nodes = kQuadStartNodes; nodes <= max_nodes; nodes *= 2) {
        std::vector<std::vector<double>> xs(static_cast<std::size_t>(n_));
        std::vector<std::vector<double>> ws(static_cast<std::size_t>(n_));
        bool any_continuous = false;
        for (int j = 0; j < n_; ++j) {
            const std::size_t sj = static_cast<std::size_t>(j);
            factor_rule(factors_[sj], nodes, growth_degree, xs[sj], ws[sj]);
            if (!std::holds_alternative<Atomic1D>(factors_[sj])) any_continuous = true;
        }
        // tensor-product accumulation via odometer
        Cx acc(0.0, 0.0);
        std::vector<std::size_t> idx(static_cast<std::size_t>(n_), 0);
        std::vector<double> point(static_cast<std::size_t>(n_));
        while (true) {
            double w = 1.0;
            for (int j = 0; j < n_; ++j) {
                const std::size_t sj = static_cast<std::size_t>(j);
                point[sj] = xs[sj][idx[sj]];
                w *= ws[sj][idx[sj]];
            }
            acc += w * fn(point);
            int j = 0;
            for (; j < n_; ++j) {
                const std::size_t sj = static_cast<std::size_t>(j);
                if (++idx[sj] < xs[sj].size()) break;
                idx[sj] = 0;
            }
            if (j == n_) break;
        }
        if (!any_continuous) return acc;  // exact
        if (have_prev) {
            achieved = std::abs(acc - prev);
            if (achieved <= kQuadRelTol * std::max(1.0, std::abs(acc))) return acc;
        }
        prev = acc;
        have_prev = true;
    }
    throw QuadratureNotConverged("quadrature did not converge within the node budget",
                                 prev.real(), achieved);
}

Cx MeasureOracle::integrate_localized(const LocalizedElement& f) const {
    if (f.dim() != n_) throw DimensionMismatch("integrate_localized: dimension mismatch");
    return integrate([&f](std::span<const double> x) { return f.eval(x); },
                     f.numerator().degree());
}

double MeasureOracle::lp_norm(const LocalizedElement& f, double s) const {
    if (f.dim() != n_) throw DimensionMismatch("lp_norm: dimension mismatch");
    if (!(s >= 1.0)) throw InvalidSpec("lp_norm: s must be >= 1");
    const int growth = static_cast<int>(std::ceil(s)) * f.numerator().degree();
    const Cx integral = integrate(
        [&f, s](std::span<const double> x) {
            return Cx(std::pow(std::abs(f.eval(x)), s), 0.0);
        },
        growth);
    return std::pow(integral.real(), 1.0 / s);
}

MeasureOracle MeasureOracle::marginal(int axis) const {
    if (axis < 1 || axis > n_) throw DimensionMismatch("marginal: axis out of range");
    if (atomic_) {
        Atomic1D proj;
        for (const auto& p : atomic_->points)
            proj.points.push_back(p[static_cast<std::size_t>(axis - 1)]);
        proj.weights = atomic_->weights;
        return from_1d(std::move(proj));
    }
    return from_1d(factors_[static_cast<std::size_t>(axis - 1)]);
}

MeasureOracle random_atomic_oracle(Rng& rng, int n, int r) {
    std::vector<std::vector<double>> pts;
    std::vector<double> w;
    pts.reserve(static_cast<std::size_t>(r));
    double total = 0.0;
    for (int i = 0; i < r; ++i) {
        std::vector<double> p(static_cast<std::size_t>(n));
        for (auto& c : p) c = rng.uniform(-2.0, 2.0);
        pts.push_back(std::move(p));
        const double wi = rng.uniform(0.1, 1.0);
        w.push_back(wi);
        total += wi;
    }
    for (auto& wi : w) wi /= total;
    return MeasureOracle::atomic(std::move(pts), std::move(w));
}

MeasureOracle random_atomic_oracle_separated(Rng& rng, int n, int r, double min_gap) {
    std::vector<std::vector<double>> pts;
    while (static_cast<int>(pts.size()) < r) {
        std::vector<double> p(static_cast<std::size_t>(n));
        for (auto& c : p) c = rng.uniform(-2.0, 2.0);
        bool ok = true;
        for (const auto& q : pts) {
            bool near = true;
            for (std::size_t j = 0; j < p.size(); ++j)
                if (std::abs(p[j] - q[j]) >= min_gap) near = false;
            if (near) ok = false;
        }
        if (ok) pts.push_back(std::move(p));
    }
    std::vector<double> w;
    double total = 0.0;
    for (int i = 0; i < r; ++i) {
        const double wi = rng.uniform(0.1, 1.0);
        w.push_back(wi);
        total += wi;
    }
    for (auto& wi : w) wi /= total;
    return MeasureOracle::atomic(std::move(pts), std::move(w));
}

}  // namespace momentcert
