#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "momentcert/cpoly.hpp"
#include "momentcert/localized.hpp"
#include "momentcert/poly_text.hpp"
#include "momentcert/rng.hpp"
#include "momentcert/suites.hpp"

using namespace momentcert;

namespace {

CPoly x(int n, int axis) { return CPoly::variable(n, axis); }
CPoly c1(int n, Cx v) { return CPoly::constant(n, v); }

}  // namespace

TEST_CASE("graded lex order and basis enumeration") {
    GradedLexLess less;
    CHECK(less(MultiIndex{0, 0}, MultiIndex{1, 0}));
    CHECK(less(MultiIndex{0, 2}, MultiIndex{1, 1}));  // same degree, lex on exponents
    CHECK(less(MultiIndex{1, 1}, MultiIndex{2, 0}));
    CHECK_FALSE(less(MultiIndex{2, 0}, MultiIndex{2, 0}));

    const auto basis = monomial_basis(2, 2);
    REQUIRE(basis.size() == 6);
    CHECK(basis[0] == MultiIndex{0, 0});
    CHECK(basis[5] == MultiIndex{2, 0});
    for (std::size_t i = 1; i < basis.size(); ++i) CHECK(less(basis[i - 1], basis[i]));

    const auto ladder = axis_basis(3, 2, 2);
    REQUIRE(ladder.size() == 3);
    CHECK(ladder[2] == MultiIndex{0, 2, 0});
}

TEST_CASE("polynomial product: difference of squares") {
    const CPoly a = c1(1, 1.0) + x(1, 1);
    const CPoly b = c1(1, 1.0) - x(1, 1);
    const CPoly expect = c1(1, 1.0) - x(1, 1) * x(1, 1);
    CHECK(a * b == expect);
}

TEST_CASE("polynomial product: multiplicative identity") {
    Rng rng(7);
    const CPoly p = rng.integer_poly(2, 3, -3, 3);
    CHECK(p * c1(2, 1.0) == p);
}

TEST_CASE("polynomial product: (x - i)(x + i) = 1 + x^2") {
    CPoly xm = x(1, 1);
    xm.add_term(MultiIndex{0}, Cx(0.0, -1.0));
    CPoly xp = x(1, 1);
    xp.add_term(MultiIndex{0}, Cx(0.0, 1.0));
    CHECK(xm * xp == one_plus_xj2(1, 1));
}

TEST_CASE("product degree additivity and dimension mismatch") {
    Rng rng(11);
    const CPoly p = rng.integer_poly(2, 2, 1, 3);  // nonzero leading coefficients
    const CPoly q = rng.integer_poly(2, 3, 1, 3);
    CHECK((p * q).degree() == p.degree() + q.degree());
    CHECK_THROWS_AS(p * rng.integer_poly(3, 1, -1, 1), DimensionMismatch);
}

TEST_CASE("conjugation is an involutive ring map") {
    CHECK((Cx(0.0, 1.0) * x(1, 1)).conj() == Cx(0.0, -1.0) * x(1, 1));

    Rng rng(3);
    const CPoly real_p = rng.real_coeff_poly(2, 2, -1.0, 1.0).conj() +
                         rng.real_coeff_poly(2, 2, -1.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        const CPoly p = rng.integer_poly(2, 3, -3, 3);
        const CPoly q = rng.integer_poly(2, 3, -3, 3);
        CHECK(p.conj().conj() == p);
        CHECK((p * q).conj() == p.conj() * q.conj());
    }

    // real polynomial is fixed by conjugation
    const CPoly r = c1(1, 2.5) + 3.0 * x(1, 1);
    CHECK(r.conj() == r);
    CHECK(r.is_real());
    CHECK_FALSE((Cx(0.0, 1.0) * r).is_real());

    // conj((x - i) q) == (x + i) conj(q)
    CPoly xm = x(1, 1);
    xm.add_term(MultiIndex{0}, Cx(0.0, -1.0));
    CPoly xp = x(1, 1);
    xp.add_term(MultiIndex{0}, Cx(0.0, 1.0));
    Rng rng2(5);
    for (int i = 0; i < 10; ++i) {
        const CPoly q = rng2.integer_poly(1, 4, -3, 3);
        CHECK((xm * q).conj() == xp * q.conj());
    }
}

TEST_CASE("evaluation") {
    const CPoly disc = c1(2, 1.0) - x(2, 1) * x(2, 1) - x(2, 2) * x(2, 2);
    const double pt[] = {0.6, 0.6};
    CHECK(disc.eval(pt).real() == doctest::Approx(0.28).epsilon(1e-15));

    Rng rng(9);
    const CPoly p = rng.integer_poly(2, 3, -3, 3);
    const double origin[] = {0.0, 0.0};
    CHECK(p.eval(origin) == p.coeff(MultiIndex{0, 0}));

    CPoly xm = x(1, 1);
    xm.add_term(MultiIndex{0}, Cx(0.0, -1.0));
    const double one[] = {1.0};
    CHECK(xm.eval(one) == Cx(1.0, -1.0));

    CHECK_THROWS_AS(p.eval(std::span<const double>(one, 1)), DimensionMismatch);
}

TEST_CASE("density residual polynomial") {
    // q = 0: residual is the constant 1
    CHECK(density_residual_poly(1, CPoly(1)) == c1(1, 1.0));

    // q = i and q = 1 both give R = -x^2, so |R|^2 = x^4
    const CPoly x4 = CPoly::monomial(1, MultiIndex{4}, 1.0);
    CHECK(density_residual_poly(1, c1(1, Cx(0.0, 1.0))) == x4);
    CHECK(density_residual_poly(1, c1(1, 1.0)) == x4);

    // nonnegative at any real point (it is a squared modulus)
    Rng rng(13);
    for (int i = 0; i < 30; ++i) {
        const CPoly q = rng.integer_poly(2, 2, -3, 3);
        const CPoly res = density_residual_poly(rng.uniform_int(1, 2), q);
        const double pt[] = {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        CHECK(res.eval(pt).real() >= -1e-12);
        CHECK(res.conj() == res);
    }
}

TEST_CASE("density identity: hand-expanded cases") {
    // q = 1, axis 1: Q = 1 - x + i, both sides reduce to -x^2
    const DensityIdentity id = density_identity(1, c1(1, 1.0));
    CPoly expect_q = c1(1, Cx(1.0, 1.0)) - x(1, 1);
    CHECK(id.Q == expect_q);
    const CPoly minus_x2 = CPoly::monomial(1, MultiIndex{2}, -1.0);
    CHECK(id.lhs == minus_x2);
    CHECK(id.rhs == minus_x2);

    // q = 0: both sides are 1
    const DensityIdentity id0 = density_identity(1, CPoly(1));
    CHECK(id0.lhs == c1(1, 1.0));
    CHECK(id0.rhs == c1(1, 1.0));
}

TEST_CASE("density identity: exact equality on random integer q") {
    Rng rng(kDefaultSeed);
    for (int i = 0; i < 100; ++i) {
        const int n = rng.uniform_int(1, 3);
        const CPoly q = rng.integer_poly(n, rng.uniform_int(0, 4), -3, 3);
        for (int axis = 1; axis <= n; ++axis) {
            const DensityIdentity id = density_identity(axis, q);
            CHECK(id.lhs == id.rhs);
        }
    }
}

TEST_CASE("transfer to the linear residual form") {
    // q = 1 -> x + i
    CPoly xp = x(1, 1);
    xp.add_term(MultiIndex{0}, Cx(0.0, 1.0));
    CHECK(transfer_to_linear(1, c1(1, 1.0)) == xp);
    CHECK(transfer_to_linear(1, CPoly(1)).is_zero());

    // 1 - (x_j - i) p == 1 - (1 + x_j^2) q conj(q)  exactly
    Rng rng(21);
    for (int i = 0; i < 25; ++i) {
        const int n = rng.uniform_int(1, 2);
        const int axis = rng.uniform_int(1, n);
        const CPoly q = rng.integer_poly(n, 2, -3, 3);
        const CPoly p = transfer_to_linear(axis, q);
        CPoly xm = x(n, axis);
        xm.add_term(MultiIndex(n), Cx(0.0, -1.0));
        const CPoly lhs = c1(n, 1.0) - xm * p;
        const CPoly rhs = c1(n, 1.0) - one_plus_xj2(n, axis) * (q * q.conj());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("localized elements: cancellation and arithmetic") {
    // 1/(1+x^2) + x^2/(1+x^2) == 1 with the denominator cleared
    const LocalizedElement a(c1(1, 1.0), {1});
    const LocalizedElement b(x(1, 1) * x(1, 1), {1});
    const LocalizedElement sum = a + b;
    CHECK(sum.numerator() == c1(1, 1.0));
    CHECK(sum.den_exponents() == std::vector<int>{0});

    // denominator-free product stays denominator-free
    const LocalizedElement f = LocalizedElement::from_poly(x(2, 1));
    const LocalizedElement g = LocalizedElement::from_poly(x(2, 2));
    const LocalizedElement fg = f * g;
    CHECK(fg.numerator() == x(2, 1) * x(2, 2));
    CHECK(fg.den_exponents() == std::vector<int>(2, 0));

    // (x/(1+x^2))^2 at x = 1 is 1/4
    const LocalizedElement h(x(1, 1), {1});
    const double one[] = {1.0};
    CHECK((h * h).eval(one).real() == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("localized evaluation commutes with arithmetic") {
    Rng rng(31);
    for (int i = 0; i < 30; ++i) {
        const int n = rng.uniform_int(1, 2);
        std::vector<int> da(n), db(n);
        for (int j = 0; j < n; ++j) {
            da[j] = rng.uniform_int(0, 2);
            db[j] = rng.uniform_int(0, 2);
        }
        const LocalizedElement a(rng.integer_poly(n, 3, -3, 3), da);
        const LocalizedElement b(rng.integer_poly(n, 3, -3, 3), db);
        std::vector<double> pt(n);
        for (auto& v : pt) v = rng.uniform(-2.0, 2.0);

        const Cx add = (a + b).eval(pt);
        const Cx mul = (a * b).eval(pt);
        const Cx add_ref = a.eval(pt) + b.eval(pt);
        const Cx mul_ref = a.eval(pt) * b.eval(pt);
        CHECK(std::abs(add - add_ref) <= 1e-12 * std::max(1.0, std::abs(add_ref)));
        CHECK(std::abs(mul - mul_ref) <= 1e-12 * std::max(1.0, std::abs(mul_ref)));
    }
}

TEST_CASE("exact division by 1 + x_j^2") {
    const CPoly f = one_plus_xj2(2, 1) * (x(2, 2) + c1(2, Cx(0.0, 2.0)));
    const auto q = divide_exact_one_plus_xj2(f, 1);
    REQUIRE(q.has_value());
    CHECK(*q == x(2, 2) + c1(2, Cx(0.0, 2.0)));
    CHECK_FALSE(divide_exact_one_plus_xj2(x(2, 1), 1).has_value());
    CHECK_FALSE(divide_exact_one_plus_xj2(one_plus_xj2(2, 1) + x(2, 2), 1).has_value());
}

TEST_CASE("polynomial text round trip") {
    Rng rng(41);
    for (int i = 0; i < 40; ++i) {
        const int n = rng.uniform_int(1, 3);
        CPoly p = rng.real_coeff_poly(n, rng.uniform_int(0, 3), -2.0, 2.0);
        if (i % 3 == 0) p = rng.integer_poly(n, rng.uniform_int(0, 3), -4, 4);
        const std::string text = to_text(p);
        CHECK(parse_poly(text, n) == p);
    }

    CHECK(parse_poly("0").is_zero());
    CHECK(parse_poly("1 - 1 * x1^2", 1) == c1(1, 1.0) - x(1, 1) * x(1, 1));
    CHECK(parse_poly("x1 x2", 2) == x(2, 1) * x(2, 2));
    CHECK(parse_poly("(0+1i)", 1) == c1(1, Cx(0.0, 1.0)));
    CHECK(parse_poly("2i * x1", 1) == Cx(0.0, 2.0) * x(1, 1));
    CHECK(parse_poly("1+2i * x1", 1) == Cx(1.0, 2.0) * x(1, 1));  // greedy complex coefficient
    CHECK_THROWS_AS(parse_poly("1 + * x1"), ParseError);
    CHECK_THROWS_AS(parse_poly("x0"), ParseError);
    CHECK_THROWS_AS(parse_poly("x3", 2), ParseError);
}
