#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "momentcert/errors.hpp"
#include "momentcert/multi_index.hpp"

namespace momentcert {

using Cx = std::complex<double>;

// Sparse multivariate polynomial with complex coefficients in canonical form:
// no zero coefficients are stored, terms ordered graded-lex. Pruning is by
// exact comparison with 0.0 so that identities on integer-coefficient inputs
// stay exact.
class CPoly {
public:
    using TermMap = std::map<MultiIndex, Cx, GradedLexLess>;

    CPoly() : n_(0) {}
    explicit CPoly(int n) : n_(n) {}

    static CPoly constant(int n, Cx c);
    static CPoly variable(int n, int axis);  // x_axis, axis is 1-based
    static CPoly monomial(int n, MultiIndex alpha, Cx c);

    int dim() const { return n_; }
    int degree() const;  // 0 for the zero polynomial
    bool is_zero() const { return terms_.empty(); }
    bool is_real() const;  // every coefficient has imaginary part exactly 0

    const TermMap& terms() const { return terms_; }
    Cx coeff(const MultiIndex& alpha) const;
    void add_term(const MultiIndex& alpha, Cx c);

    Cx eval(std::span<const double> point) const;
    CPoly conj() const;

    CPoly operator-() const;
    CPoly& operator+=(const CPoly& o);
    CPoly& operator-=(const CPoly& o);

    friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
    friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
    friend CPoly operator*(const CPoly& a, const CPoly& b);
    friend CPoly operator*(Cx s, const CPoly& p);
    bool operator==(const CPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

private:
    int n_;
    TermMap terms_;

    void check_same_dim(const CPoly& o) const;
};

// 1 + x_axis^2
CPoly one_plus_xj2(int n, int axis);

// |1 - (1 + x_axis^2) q conj(q)|^2, i.e. R conj(R) with
// R = 1 - (1 + x_axis^2) q conj(q). Self-conjugate by construction.
CPoly density_residual_poly(int axis, const CPoly& q);

// The expansion of the density residual through Q = 1 - (x_axis - i) q:
//   lhs = 1 - (1 + x_axis^2) q conj(q)
//   rhs = Q + conj(Q) - Q conj(Q)
// lhs and rhs are identical polynomials; both are returned so callers can
// assert exact coefficient equality.
struct DensityIdentity {
    CPoly Q;
    CPoly lhs;
    CPoly rhs;
};
DensityIdentity density_identity(int axis, const CPoly& q);

// (x_axis + i) q conj(q): turns a density-condition witness q into a
// resolvent-approximation witness p with
// 1 - (x_axis - i) p == 1 - (1 + x_axis^2) q conj(q).
CPoly transfer_to_linear(int axis, const CPoly& q);

}  // namespace momentcert
