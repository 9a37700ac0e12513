#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "momentcert/oracles.hpp"
#include "momentcert/quadrature.hpp"
#include "momentcert/rng.hpp"

using namespace momentcert;

TEST_CASE("Gauss-Legendre nodes integrate polynomials exactly") {
    // degree 2n-1 exactness; cross-check against simple closed forms
    const auto& r4 = gauss_legendre(4);
    double m0 = 0.0, m2 = 0.0, m6 = 0.0;
    for (std::size_t i = 0; i < r4.nodes.size(); ++i) {
        m0 += r4.weights[i];
        m2 += r4.weights[i] * std::pow(r4.nodes[i], 2);
        m6 += r4.weights[i] * std::pow(r4.nodes[i], 6);
    }
    CHECK(m0 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(m2 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(m6 == doctest::Approx(2.0 / 7.0).epsilon(1e-13));
}

TEST_CASE("Gauss-Hermite nodes match the weight exp(-x^2)") {
    const auto& r = gauss_hermite(2);
    // two-point rule: nodes +-1/sqrt(2), weights sqrt(pi)/2
    CHECK(std::abs(r.nodes[0]) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-13));
    CHECK(r.weights[0] == doctest::Approx(std::sqrt(M_PI) / 2.0).epsilon(1e-13));

    const auto& big = gauss_hermite(64);
    double total = 0.0, x2 = 0.0;
    for (std::size_t i = 0; i < big.nodes.size(); ++i) {
        total += big.weights[i];
        x2 += big.weights[i] * big.nodes[i] * big.nodes[i];
    }
    CHECK(total == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
    CHECK(x2 == doctest::Approx(std::sqrt(M_PI) / 2.0).epsilon(1e-12));
}

TEST_CASE("gaussian moments: double factorial ladder") {
    const MeasureOracle g = MeasureOracle::from_1d(Gaussian1D{1.0});
    const MomentSequence L = g.moments(8);
    CHECK(L.moment(MultiIndex{0}) == 1.0);
    CHECK(L.moment(MultiIndex{1}) == 0.0);
    CHECK(L.moment(MultiIndex{2}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(L.moment(MultiIndex{4}) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(L.moment(MultiIndex{6}) == doctest::Approx(15.0).epsilon(1e-15));

    // quadrature cross-check of m_6
    const Cx q = g.integrate(
        [](std::span<const double> x) { return Cx(std::pow(x[0], 6), 0.0); }, 6);
    CHECK(q.real() == doctest::Approx(15.0).epsilon(1e-11));
}

TEST_CASE("uniform moments") {
    const MeasureOracle u = MeasureOracle::from_1d(Uniform1D{-1.0, 1.0});
    const MomentSequence L = u.moments(7);
    CHECK(L.moment(MultiIndex{1}) == 0.0);
    CHECK(L.moment(MultiIndex{3}) == 0.0);
    CHECK(L.moment(MultiIndex{2}) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(L.moment(MultiIndex{6}) == doctest::Approx(1.0 / 7.0).epsilon(1e-15));
}

TEST_CASE("product moments factor across axes") {
    const MeasureOracle p =
        MeasureOracle::product({Gaussian1D{1.0}, Uniform1D{-1.0, 1.0}});
    const MomentSequence L = p.moments(6);
    CHECK(L.moment(MultiIndex{4, 2}) ==
          doctest::Approx(3.0 * (1.0 / 3.0)).epsilon(1e-15));
    CHECK(L.moment(MultiIndex{2, 4}) ==
          doctest::Approx(1.0 * (1.0 / 5.0)).epsilon(1e-15));

    Rng rng(43);
    const MeasureOracle a = random_atomic_oracle(rng, 2, 3);
    // marginal moments equal the restriction of joint moments
    for (int axis = 1; axis <= 2; ++axis) {
        const MeasureOracle marg = a.marginal(axis);
        for (int k = 0; k <= 4; ++k) {
            MultiIndex joint(2);
            joint[axis - 1] = k;
            CHECK(marg.moment(MultiIndex{k}) ==
                  doctest::Approx(a.moment(joint)).epsilon(1e-14));
        }
    }
}

TEST_CASE("marginal of a product returns the factor") {
    const MeasureOracle p =
        MeasureOracle::product({Gaussian1D{1.0}, Uniform1D{-1.0, 1.0}});
    const MeasureOracle m1 = p.marginal(1);
    CHECK(std::holds_alternative<Gaussian1D>(m1.factors()[0]));
    const MeasureOracle a = MeasureOracle::atomic({{1.0, 2.0}}, {1.0});
    const MeasureOracle m2 = a.marginal(2);
    CHECK(m2.moment(MultiIndex{1}) == 2.0);
}

TEST_CASE("lognormal moments live in log scale") {
    const Oracle1D ln = LogNormal1D{1.0};
    // log m_{2k} = 2 k^2 exactly
    for (int k = 1; k <= 100; ++k)
        CHECK(log_even_moment1d(ln, k) == doctest::Approx(2.0 * k * k).epsilon(1e-15));
    // linear values overflow for large degree and are guarded
    const MeasureOracle m = MeasureOracle::from_1d(ln);
    CHECK_THROWS_AS(m.moments(80), MomentOverflow);
    // small degrees agree with the closed form
    CHECK(m.moments(4).moment(MultiIndex{4}) ==
          doctest::Approx(std::exp(8.0)).epsilon(1e-14));
}

TEST_CASE("delta_0 has vanishing even moments: log form is -inf") {
    const MeasureOracle d = MeasureOracle::atomic({{0.0}}, {1.0});
    const auto logs = d.log_even_moments(1, 3);
    CHECK(logs[0] == -std::numeric_limits<double>::infinity());
}

TEST_CASE("integrate_localized examples") {
    // delta_0: 1/(1+x^2) evaluates at the atom
    const MeasureOracle d0 = MeasureOracle::atomic({{0.0}}, {1.0});
    const LocalizedElement f(CPoly::constant(1, 1.0), {1});
    CHECK(d0.integrate_localized(f).real() == doctest::Approx(1.0).epsilon(1e-15));

    // atoms +-1: x^2/(1+x^2) gives 1/2
    const MeasureOracle pm = MeasureOracle::atomic({{1.0}, {-1.0}}, {0.5, 0.5});
    const CPoly x = CPoly::variable(1, 1);
    const LocalizedElement g(x * x, {1});
    CHECK(pm.integrate_localized(g).real() == doctest::Approx(0.5).epsilon(1e-15));

    // uniform[-1,1]: integral of 1/(1+x^2) is pi/4
    const MeasureOracle u = MeasureOracle::from_1d(Uniform1D{-1.0, 1.0});
    CHECK(u.integrate_localized(f).real() == doctest::Approx(M_PI / 4.0).epsilon(1e-10));
}

TEST_CASE("lp norms") {
    const MeasureOracle pm = MeasureOracle::atomic({{1.0}, {-1.0}}, {0.5, 0.5});
    const CPoly x = CPoly::variable(1, 1);
    CHECK(pm.lp_norm(LocalizedElement::from_poly(x), 4.0) ==
          doctest::Approx(1.0).epsilon(1e-14));

    // 1/(x - i) = (x + i)/(1 + x^2) has modulus 1/sqrt(2) at both atoms
    CPoly xpi = x;
    xpi.add_term(MultiIndex{0}, Cx(0.0, 1.0));
    const LocalizedElement resolvent(xpi, {1});
    for (double s : {1.0, 2.0, 4.0, 7.5})
        CHECK(pm.lp_norm(resolvent, s) ==
              doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-13));

    // delta_0: |x - i| = 1 at the atom
    const MeasureOracle d0 = MeasureOracle::atomic({{0.0}}, {1.0});
    CPoly xmi = x;
    xmi.add_term(MultiIndex{0}, Cx(0.0, -1.0));
    CHECK(d0.lp_norm(LocalizedElement::from_poly(xmi), 3.0) ==
          doctest::Approx(1.0).epsilon(1e-14));

    // monotone in s for probability oracles
    Rng rng(51);
    for (int i = 0; i < 10; ++i) {
        const MeasureOracle m = random_atomic_oracle(rng, 1, 3);
        const LocalizedElement h(rng.integer_poly(1, 2, -2, 2), {1});
        const double n2 = m.lp_norm(h, 2.0);
        const double n4 = m.lp_norm(h, 4.0);
        CHECK(n2 <= n4 + 1e-9);
    }
}

TEST_CASE("apply(oracle moments) matches integrate_localized on polynomials") {
    Rng rng(61);
    std::vector<MeasureOracle> oracles;
    oracles.push_back(random_atomic_oracle(rng, 2, 3));
    oracles.push_back(MeasureOracle::from_1d(Uniform1D{-1.0, 1.0}));
    oracles.push_back(MeasureOracle::from_1d(Gaussian1D{0.8}));
    oracles.push_back(MeasureOracle::product({Uniform1D{0.0, 2.0}, Gaussian1D{1.0}}));
    for (const auto& m : oracles) {
        const MomentSequence L = m.moments(6);
        for (int i = 0; i < 5; ++i) {
            const CPoly f = rng.real_coeff_poly(m.dim(), 3, -1.0, 1.0);
            const Cx via_moments = L.apply(f);
            const Cx direct = m.integrate_localized(LocalizedElement::from_poly(f));
            CHECK(std::abs(via_moments - direct) <=
                  1e-9 * std::max(1.0, std::abs(via_moments)));
        }
    }
}

TEST_CASE("localizing matrices from oracle moments are PSD") {
    Rng rng(71);
    for (int i = 0; i < 10; ++i) {
        const MeasureOracle m = random_atomic_oracle(rng, 2, rng.uniform_int(1, 4));
        const HermitianGram G = moment_matrix(m.moments(6), 3);
        CHECK(min_eigenvalue(G) >= -psd_tolerance(G));
    }
    const MeasureOracle u = MeasureOracle::from_1d(Uniform1D{-1.0, 1.0});
    const HermitianGram G = moment_matrix(u.moments(12), 6);
    CHECK(min_eigenvalue(G) >= -psd_tolerance(G));
}

TEST_CASE("oracle spec validation") {
    CHECK_THROWS_AS(MeasureOracle::atomic({}, {}), InvalidSpec);
    CHECK_THROWS_AS(MeasureOracle::atomic({{1.0}}, {-1.0}), InvalidSpec);
    CHECK_THROWS_AS(MeasureOracle::product({Uniform1D{1.0, 1.0}}), InvalidSpec);
    const MeasureOracle a = MeasureOracle::atomic({{1.0}}, {1.0});
    CHECK_THROWS_AS(a.factors(), InvalidSpec);
    const MeasureOracle p = MeasureOracle::from_1d(Gaussian1D{1.0});
    CHECK_THROWS_AS(p.atoms(), NonAtomicOracle);
}

TEST_CASE("quadrature refuses honestly on kinked integrands") {
    // |x| with s = 1 has a kink at 0; Gauss-Legendre cannot reach the
    // 1e-10 contract within the node budget
    const MeasureOracle u = MeasureOracle::from_1d(Uniform1D{-1.0, 1.0});
    try {
        u.lp_norm(LocalizedElement::from_poly(CPoly::variable(1, 1)), 1.0);
        FAIL("expected QuadratureNotConverged");
    } catch (const QuadratureNotConverged& e) {
        CHECK(std::abs(e.estimate - 0.5) < 1e-6);  // the estimate is still reported
        CHECK(e.achieved_error > kQuadRelTol);
    }
}

TEST_CASE("lognormal quadrature against exact moments") {
    // moderate sigma keeps linear moments in range; quadrature must agree
    const MeasureOracle ln = MeasureOracle::from_1d(LogNormal1D{0.5});
    for (int k = 1; k <= 6; ++k) {
        const Cx q = ln.integrate(
            [k](std::span<const double> x) {
                double v = 1.0;
                for (int t = 0; t < k; ++t) v *= x[0];
                return Cx(v, 0.0);
            },
            k);
        CHECK(q.real() ==
              doctest::Approx(std::exp(0.125 * k * k)).epsilon(1e-9));
    }
}
