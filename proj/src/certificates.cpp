#include "momentcert/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace momentcert {

namespace {

std::vector<MultiIndex> solve_basis(int n, int axis, int d, SearchSpace space) {
    return space == SearchSpace::AxisOnly ? axis_basis(n, axis, d) : monomial_basis(n, d);
}

// L(P x^alpha) for real P, by moment lookup
double apply_shifted(const MomentSequence& L, const CPoly& P, const MultiIndex& alpha) {
    double v = 0.0;
    for (const auto& [gamma, c] : P.terms()) v += c.real() * L.moment(gamma + alpha);
    return v;
}

Eigen::VectorXcd pinv_solve(const Eigen::MatrixXd& G, const Eigen::VectorXcd& b) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
    const Eigen::VectorXd& ev = es.eigenvalues();
    const double lmax = ev.cwiseAbs().maxCoeff();
    const double cut = kSpectralCutoff * std::max(lmax, 1e-300);
    Eigen::VectorXcd y = es.eigenvectors().transpose().cast<Cx>() * b;
    for (Eigen::Index i = 0; i < y.size(); ++i)
        y(i) = std::abs(ev(i)) > cut ? y(i) / ev(i) : Cx(0.0, 0.0);
    return es.eigenvectors().cast<Cx>() * y;
}

// Minimize L(w |1 - (x_axis - i) p|^2) over the span of basis, w real and
// self-conjugate (w = 1 gives the plain linear residual). Returns the
// coefficient vector; the minimum itself is L(w) - Re(b^* c).
struct WeightedSolve {
    Eigen::VectorXcd coeffs;
    double value = 0.0;
};
WeightedSolve weighted_linear_solve(const MomentSequence& L, int axis,
                                    const std::vector<MultiIndex>& basis, const CPoly& w) {
    const int n = L.dim();
    const int B = static_cast<int>(basis.size());
    const CPoly W = w * one_plus_xj2(n, axis);
    const CPoly wx = w * CPoly::variable(n, axis);

    Eigen::MatrixXd G(B, B);
    for (int i = 0; i < B; ++i)
        for (int k = i; k < B; ++k) {
            const double v = apply_shifted(L, W, basis[static_cast<std::size_t>(i)] +
                                                     basis[static_cast<std::size_t>(k)]);
            G(i, k) = v;
            G(k, i) = v;
        }
    Eigen::VectorXcd b(B);
    for (int i = 0; i < B; ++i) {
        const double re = apply_shifted(L, wx, basis[static_cast<std::size_t>(i)]);
        const double im = apply_shifted(L, w, basis[static_cast<std::size_t>(i)]);
        b(i) = Cx(re, im);
    }
    WeightedSolve out;
    out.coeffs = pinv_solve(G, b);
    const double raw = L.apply_real(w) - (b.adjoint() * out.coeffs)(0).real();
    out.value = std::max(0.0, raw);
    return out;
}

CPoly coeffs_to_poly(int n, const std::vector<MultiIndex>& basis, const Eigen::VectorXcd& c) {
    CPoly p(n);
    for (std::size_t i = 0; i < basis.size(); ++i)
        p.add_term(basis[i], c(static_cast<Eigen::Index>(i)));
    return p;
}

// least-squares fit y ~ a + b t
std::pair<double, double> line_fit(const std::vector<double>& t, const std::vector<double>& y) {
    const double N = static_cast<double>(t.size());
    double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        st += t[i];
        sy += y[i];
        stt += t[i] * t[i];
        sty += t[i] * y[i];
    }
    const double denom = N * stt - st * st;
    const double b = denom != 0.0 ? (N * sty - st * sy) / denom : 0.0;
    const double a = (sy - b * st) / N;
    return {a, b};
}

double fit_sse(const std::vector<double>& t, const std::vector<double>& y, double a, double b) {
    double s = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double e = y[i] - (a + b * t[i]);
        s += e * e;
    }
    return s;
}

}  // namespace

LinearResidual linear_residual(const MomentSequence& L, int axis, int d, SearchSpace space) {
    if (axis < 1 || axis > L.dim()) throw DimensionMismatch("linear_residual: axis out of range");
    if (d < 0) throw InvalidSpec("linear_residual: negative degree");
    if (2 * d + 2 > L.max_degree())
        throw DegreeExceeded("linear_residual: needs moments to degree 2d+2");
    const auto basis = solve_basis(L.dim(), axis, d, space);
    const auto sol = weighted_linear_solve(L, axis, basis, CPoly::constant(L.dim(), 1.0));
    return {sol.value, coeffs_to_poly(L.dim(), basis, sol.coeffs)};
}

double quartic_eval(const MomentSequence& L, int axis, const CPoly& q) {
    if (axis < 1 || axis > L.dim()) throw DimensionMismatch("quartic_eval: axis out of range");
    if (4 * (q.degree() + 1) > L.max_degree())
        throw DegreeExceeded("quartic_eval: needs moments to degree 4(deg q + 1)");
    CPoly xj_minus_i = CPoly::variable(L.dim(), axis);
    xj_minus_i.add_term(MultiIndex(L.dim()), Cx(0.0, -1.0));
    const CPoly R = CPoly::constant(L.dim(), 1.0) - xj_minus_i * q;
    const CPoly RR = R * R.conj();
    return std::max(0.0, L.apply_real(RR * RR));
}

double density_residual_eval(const MomentSequence& L, int axis, const CPoly& q) {
    if (axis < 1 || axis > L.dim())
        throw DimensionMismatch("density_residual_eval: axis out of range");
    if (4 * q.degree() + 4 > L.max_degree())
        throw DegreeExceeded("density_residual_eval: needs moments to degree 4 deg q + 4");
    return std::max(0.0, L.apply_real(density_residual_poly(axis, q)));
}

double density_residual_bound(const MomentSequence& L, int axis, const CPoly& q) {
    const double qq_norm = std::sqrt(quartic_eval(L, axis, q));  // ||Q conj(Q)||
    const double one_norm = std::sqrt(std::max(0.0, L.moment(MultiIndex(L.dim()))));
    return 2.0 * std::sqrt(qq_norm * one_norm) + qq_norm;
}

QuarticMin quartic_minimize(const MomentSequence& L, int axis, int d, SearchSpace space,
                            const CPoly* warm_start) {
    if (axis < 1 || axis > L.dim()) throw DimensionMismatch("quartic_minimize: axis out of range");
    if (4 * (d + 1) > L.max_degree())
        throw DegreeExceeded("quartic_minimize: needs moments to degree 4(d+1)");
    const int n = L.dim();
    const auto basis = solve_basis(n, axis, d, space);

    CPoly q = linear_residual(L, axis, d, space).minimizer;
    double q_val = quartic_eval(L, axis, q);
    if (warm_start) {
        const double w_val = quartic_eval(L, axis, *warm_start);
        if (w_val < q_val) {
            q = *warm_start;
            q_val = w_val;
        }
    }

    QuarticMin best;
    best.value = q_val;
    best.minimizer = q;

    CPoly xj_minus_i = CPoly::variable(n, axis);
    xj_minus_i.add_term(MultiIndex(n), Cx(0.0, -1.0));

    double prev = q_val;
    for (int iter = 1; iter <= kIrlsMaxIter; ++iter) {
        const CPoly R = CPoly::constant(n, 1.0) - xj_minus_i * q;
        const CPoly w = R * R.conj();  // |1 - (x_axis - i) q|^2, real
        const auto sol = weighted_linear_solve(L, axis, basis, w);
        q = coeffs_to_poly(n, basis, sol.coeffs);
        const double val = quartic_eval(L, axis, q);
        best.iterations = iter;
        if (val < best.value) {
            best.value = val;
            best.minimizer = q;
        }
        if (iter == 1 && val >= prev) best.non_decreasing_flagged = true;
        const double rel_dec = (prev - val) / std::max(prev, 1e-300);
        if (rel_dec < kIrlsRelTol) break;
        prev = val;
    }
    return best;
}

std::vector<double> carleman_terms(const std::vector<double>& log_even_moments) {
    std::vector<double> t;
    t.reserve(log_even_moments.size());
    for (std::size_t i = 0; i < log_even_moments.size(); ++i) {
        const double lg = log_even_moments[i];
        if (std::isnan(lg)) throw MissingMoment("carleman_terms: missing log moment");
        if (lg == -std::numeric_limits<double>::infinity())
            throw NonPositiveEvenMoment("carleman_terms: even moment is zero (degenerate axis)");
        const double k = static_cast<double>(i + 1);
        t.push_back(std::exp(-lg / (2.0 * k)));
    }
    return t;
}

CarlemanReport carleman_report(const std::vector<double>& terms) {
    if (terms.size() < 10) throw TooFewTerms("carleman_report: need at least 10 terms");
    CarlemanReport r;
    r.terms = terms;
    r.partial_sums.reserve(terms.size());
    double s = 0.0;
    for (double t : terms) {
        s += t;
        r.partial_sums.push_back(s);
    }

    // fit the tail (last half) two ways: log t ~ c - p log k and log t ~ a + b k
    const std::size_t K = terms.size();
    std::vector<double> logk, kk, logt;
    for (std::size_t i = K / 2; i < K; ++i) {
        const double k = static_cast<double>(i + 1);
        logk.push_back(std::log(k));
        kk.push_back(k);
        logt.push_back(std::log(terms[i]));
    }
    const auto [c_pow, pow_slope] = line_fit(logk, logt);
    const auto [c_exp, exp_slope] = line_fit(kk, logt);
    r.power_exponent = -pow_slope;
    r.exp_slope = exp_slope;
    const double sse_pow = fit_sse(logk, logt, c_pow, pow_slope);
    const double sse_exp = fit_sse(kk, logt, c_exp, exp_slope);
    r.exponential_decay = exp_slope <= -1e-3 && sse_exp <= sse_pow;

    if (r.exponential_decay) {
        r.classification = "convergent-trend";
    } else if (r.power_exponent <= 0.95) {
        r.classification = "divergent-trend";
    } else if (r.power_exponent >= 1.05) {
        r.classification = "convergent-trend";
    } else {
        r.classification = "inconclusive";
    }
    return r;
}

namespace {

Cx resolvent(double x) { return 1.0 / Cx(x, -1.0); }

// adaptive 1-D integral helpers over a measure oracle
double integ_real(const MeasureOracle& m, const std::function<double(double)>& f, int growth) {
    return m
        .integrate([&f](std::span<const double> x) { return Cx(f(x[0]), 0.0); }, growth)
        .real();
}

Cx integ_cx(const MeasureOracle& m, const std::function<Cx(double)>& f, int growth) {
    return m.integrate([&f](std::span<const double> x) { return f(x[0]); }, growth);
}

}  // namespace

L4Residual l4_density_residual(const MeasureOracle& m1d, int d) {
    if (m1d.dim() != 1) throw DimensionMismatch("l4_density_residual: oracle must be 1-D");
    if (d < 0) throw InvalidSpec("l4_density_residual: negative degree");
    const int B = d + 1;

    auto eval_q = [](const Eigen::VectorXcd& c, double x) {
        Cx acc(0.0, 0.0);
        double mono = 1.0;
        for (Eigen::Index i = 0; i < c.size(); ++i) {
            acc += c(i) * mono;
            mono *= x;
        }
        return acc;
    };
    auto objective = [&](const Eigen::VectorXcd& c) {
        return integ_real(m1d,
                          [&](double x) {
                              const double a = std::abs(eval_q(c, x) - resolvent(x));
                              return a * a * a * a;
                          },
                          4 * B);
    };

    // plain L^2 fit of 1/(x - i) as the starting point; the Gram is the
    // exact Hankel of oracle moments
    Eigen::MatrixXd A(B, B);
    for (int i = 0; i < B; ++i)
        for (int k = 0; k < B; ++k) A(i, k) = m1d.moment(MultiIndex{i + k});
    Eigen::VectorXcd g(B);
    for (int i = 0; i < B; ++i)
        g(i) = integ_cx(m1d, [i](double x) {
            double mono = 1.0;
            for (int t = 0; t < i; ++t) mono *= x;
            return mono * resolvent(x);
        }, d);
    Eigen::VectorXcd c = pinv_solve(A, g);

    Eigen::VectorXcd best_c = c;
    double best = objective(c);
    double prev = best;
    for (int iter = 1; iter <= kIrlsMaxIter; ++iter) {
        // weighted normal equations with w = |q_prev - r|^2
        auto w_at = [&](double x) {
            const double a = std::abs(eval_q(c, x) - resolvent(x));
            return a * a;
        };
        Eigen::MatrixXd Aw(B, B);
        for (int i = 0; i < B; ++i)
            for (int k = i; k < B; ++k) {
                const double v = integ_real(m1d,
                                            [&](double x) {
                                                double mono = 1.0;
                                                for (int t = 0; t < i + k; ++t) mono *= x;
                                                return w_at(x) * mono;
                                            },
                                            4 * B);
                Aw(i, k) = v;
                Aw(k, i) = v;
            }
        Eigen::VectorXcd gw(B);
        for (int i = 0; i < B; ++i)
            gw(i) = integ_cx(m1d,
                             [&](double x) {
                                 double mono = 1.0;
                                 for (int t = 0; t < i; ++t) mono *= x;
                                 return w_at(x) * mono * resolvent(x);
                             },
                             4 * B);
        c = pinv_solve(Aw, gw);
        const double val = objective(c);
        if (val < best) {
            best = val;
            best_c = c;
        }
        const double rel_dec = (prev - val) / std::max(prev, 1e-300);
        if (rel_dec < kIrlsRelTol) break;
        prev = val;
    }

    L4Residual out;
    out.value = std::pow(std::max(0.0, best), 0.25);
    CPoly q(1);
    for (int i = 0; i < B; ++i) q.add_term(MultiIndex{i}, best_c(i));
    out.minimizer = q;
    return out;
}

HolderCheck holder_check(const MeasureOracle& m1d, const CPoly& q, double s) {
    if (m1d.dim() != 1) throw DimensionMismatch("holder_check: oracle must be 1-D");
    if (q.dim() != 1) throw DimensionMismatch("holder_check: q must be univariate");
    if (!(s > 4.0)) throw InvalidSpec("holder_check: requires s > 4");
    const int dq = q.degree();

    HolderCheck out;
    out.lhs = integ_real(m1d,
                         [&q](double x) {
                             const double xs[1] = {x};
                             const Cx R = 1.0 - Cx(x, -1.0) * q.eval(xs);
                             const double a = std::abs(R);
                             return a * a * a * a;
                         },
                         4 * (dq + 1));

    const double t = 4.0 * s / (s - 4.0);
    const double norm_q = std::pow(integ_real(m1d,
                                              [&q, s](double x) {
                                                  const double xs[1] = {x};
                                                  return std::pow(
                                                      std::abs(q.eval(xs) - resolvent(x)), s);
                                              },
                                              static_cast<int>(std::ceil(s)) * std::max(dq, 1)),
                                   1.0 / s);
    const double norm_x = std::pow(integ_real(m1d,
                                              [t](double x) {
                                                  return std::pow(1.0 + x * x, 0.5 * t);
                                              },
                                              static_cast<int>(std::ceil(t))),
                                   1.0 / t);
    const double prod = norm_q * norm_x;
    out.rhs = prod * prod * prod * prod;
    return out;
}

CertificateReport certify(const MomentSequence& L, std::vector<int> axes, int d_max,
                          double tol_cert, SearchSpace space) {
    if (d_max < 0) throw InvalidSpec("certify: negative d_max");
    if (!(tol_cert > 0.0)) throw InvalidSpec("certify: tolerance must be > 0");
    std::sort(axes.begin(), axes.end());
    axes.erase(std::unique(axes.begin(), axes.end()), axes.end());
    for (int a : axes)
        if (a < 1 || a > L.dim()) throw DimensionMismatch("certify: axis out of range");
    if (!axes.empty() && 4 * (d_max + 1) > L.max_degree())
        throw DegreeExceeded("certify: needs moments to degree 4(d_max+1)");

    CertificateReport rep;
    rep.n = L.dim();
    rep.max_degree = L.max_degree();
    rep.d_max = d_max;
    rep.tol_cert = tol_cert;
    rep.space = space;
    rep.axes = axes;

    // PSD gate on the full truncated moment matrix
    {
        const HermitianGram M = moment_matrix(L, L.max_degree() / 2);
        const double eig = min_eigenvalue(M);
        if (eig < -psd_tolerance(M))
            throw NotPSD("certify: moment matrix has eigenvalue " + std::to_string(eig), eig);
    }

    if (axes.empty()) {
        rep.notes.push_back("no axes requested; nothing to certify");
        return rep;
    }

    const int carleman_K = L.max_degree() / 2;

    for (int axis : axes) {
        AxisCertificate ac;
        ac.axis = axis;
        ac.best_evidence = std::numeric_limits<double>::infinity();

        double prev_lin = std::numeric_limits<double>::infinity();
        CPoly prev_lin_p;
        const CPoly* warm = nullptr;
        CPoly prev_q;
        for (int d = 0; d <= d_max; ++d) {
            AxisRow row;
            row.d = d;

            LinearResidual lin = linear_residual(L, axis, d, space);
            if (d > 0 && prev_lin < lin.value) {
                lin.value = prev_lin;  // warm-started fallback keeps the column monotone
                lin.minimizer = prev_lin_p;
            }
            prev_lin = lin.value;
            prev_lin_p = lin.minimizer;
            row.linear_residual = lin.value;

            const QuarticMin qm = quartic_minimize(L, axis, d, space, warm);
            prev_q = qm.minimizer;
            warm = &prev_q;
            row.quartic_value = qm.value;

            row.density_residual = density_residual_eval(L, axis, qm.minimizer);
            row.density_bound = density_residual_bound(L, axis, qm.minimizer);

            const double evidence =
                std::min(row.density_residual, row.density_bound * row.density_bound);
            if (evidence < ac.best_evidence) {
                ac.best_evidence = evidence;
                ac.best_degree = d;
            }
            ac.rows.push_back(row);
        }
        ac.certified = ac.best_evidence <= tol_cert;

        if (carleman_K >= 10) {
            std::vector<double> logs;
            bool degenerate = false;
            for (int k = 1; k <= carleman_K; ++k) {
                MultiIndex a(L.dim());
                a[axis - 1] = 2 * k;
                const double m = L.moment(a);
                if (!(m > 0.0)) {
                    degenerate = true;
                    ac.carleman_note =
                        "even moment is zero at order " + std::to_string(2 * k) +
                        "; Carleman terms undefined on this axis";
                    break;
                }
                logs.push_back(std::log(m));
            }
            if (!degenerate) ac.carleman = carleman_report(carleman_terms(logs));
        } else {
            ac.carleman_note = "truncation provides fewer than 10 even moments; Carleman "
                               "table omitted";
        }
        rep.per_axis.push_back(std::move(ac));
    }

    auto certified = [&rep](int axis) {
        for (const auto& ac : rep.per_axis)
            if (ac.axis == axis) return ac.certified;
        return false;
    };
    rep.existence_evidence = true;
    for (int j = 1; j <= rep.n - 1; ++j)
        if (!certified(j)) rep.existence_evidence = false;
    rep.determinacy_evidence = rep.existence_evidence && certified(rep.n);

    rep.notes.push_back(
        "verdicts assert evidence at the stated tolerance for the given truncation; the "
        "infinite-degree limits are not decidable from finitely many moments");
    rep.notes.push_back("Carleman classifications, when present, are heuristic trend labels");
    return rep;
}

}  // namespace momentcert
