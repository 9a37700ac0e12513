#include "momentcert/cpoly.hpp"

#include <algorithm>

namespace momentcert {

namespace {

double powi(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

bool exactly_zero(Cx c) { return c.real() == 0.0 && c.imag() == 0.0; }

}  // namespace

CPoly CPoly::constant(int n, Cx c) {
    CPoly p(n);
    p.add_term(MultiIndex(n), c);
    return p;
}

CPoly CPoly::variable(int n, int axis) {
    if (axis < 1 || axis > n) throw DimensionMismatch("variable: axis out of range");
    MultiIndex a(n);
    a[axis - 1] = 1;
    return monomial(n, a, Cx(1.0, 0.0));
}

CPoly CPoly::monomial(int n, MultiIndex alpha, Cx c) {
    if (alpha.dim() != n) throw DimensionMismatch("monomial: exponent length != n");
    CPoly p(n);
    p.add_term(alpha, c);
    return p;
}

int CPoly::degree() const {
    int d = 0;
    for (const auto& [a, c] : terms_) d = std::max(d, a.degree());
    return d;
}

bool CPoly::is_real() const {
    for (const auto& [a, c] : terms_)
        if (c.imag() != 0.0) return false;
    return true;
}

Cx CPoly::coeff(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Cx(0.0, 0.0) : it->second;
}

void CPoly::add_term(const MultiIndex& alpha, Cx c) {
    if (alpha.dim() != n_) throw DimensionMismatch("add_term: exponent length != n");
    auto it = terms_.find(alpha);
    if (it == terms_.end()) {
        if (!exactly_zero(c)) terms_.emplace(alpha, c);
        return;
    }
    it->second += c;
    if (exactly_zero(it->second)) terms_.erase(it);
}

Cx CPoly::eval(std::span<const double> point) const {
    if (static_cast<int>(point.size()) != n_)
        throw DimensionMismatch("eval: point dimension != n");
    Cx acc(0.0, 0.0);
    for (const auto& [a, c] : terms_) {
        double mono = 1.0;
        for (int j = 0; j < n_; ++j) mono *= powi(point[static_cast<std::size_t>(j)], a[j]);
        acc += c * mono;
    }
    return acc;
}

CPoly CPoly::conj() const {
    CPoly r(n_);
    for (const auto& [a, c] : terms_) r.terms_.emplace(a, std::conj(c));
    return r;
}

CPoly CPoly::operator-() const {
    CPoly r(n_);
    for (const auto& [a, c] : terms_) r.terms_.emplace(a, -c);
    return r;
}

void CPoly::check_same_dim(const CPoly& o) const {
    if (n_ != o.n_) throw DimensionMismatch("polynomial dimensions differ");
}

CPoly& CPoly::operator+=(const CPoly& o) {
    check_same_dim(o);
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
    check_same_dim(o);
    for (const auto& [a, c] : o.terms_) add_term(a, -c);
    return *this;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
    a.check_same_dim(b);
    CPoly r(a.n_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

CPoly operator*(Cx s, const CPoly& p) {
    CPoly r(p.dim());
    for (const auto& [a, c] : p.terms()) r.add_term(a, s * c);
    return r;
}

CPoly one_plus_xj2(int n, int axis) {
    if (axis < 1 || axis > n) throw DimensionMismatch("one_plus_xj2: axis out of range");
    MultiIndex sq(n);
    sq[axis - 1] = 2;
    CPoly p = CPoly::constant(n, 1.0);
    p.add_term(sq, Cx(1.0, 0.0));
    return p;
}

CPoly density_residual_poly(int axis, const CPoly& q) {
    const int n = q.dim();
    if (axis < 1 || axis > n) throw DimensionMismatch("density_residual_poly: axis out of range");
    CPoly R = CPoly::constant(n, 1.0) - one_plus_xj2(n, axis) * (q * q.conj());
    return R * R.conj();
}

DensityIdentity density_identity(int axis, const CPoly& q) {
    const int n = q.dim();
    if (axis < 1 || axis > n) throw DimensionMismatch("density_identity: axis out of range");
    CPoly xj_minus_i = CPoly::variable(n, axis);
    xj_minus_i.add_term(MultiIndex(n), Cx(0.0, -1.0));
    DensityIdentity id;
    id.Q = CPoly::constant(n, 1.0) - xj_minus_i * q;
    id.lhs = CPoly::constant(n, 1.0) - one_plus_xj2(n, axis) * (q * q.conj());
    id.rhs = id.Q + id.Q.conj() - id.Q * id.Q.conj();
    return id;
}

CPoly transfer_to_linear(int axis, const CPoly& q) {
    const int n = q.dim();
    if (axis < 1 || axis > n) throw DimensionMismatch("transfer_to_linear: axis out of range");
    CPoly xj_plus_i = CPoly::variable(n, axis);
    xj_plus_i.add_term(MultiIndex(n), Cx(0.0, 1.0));
    return xj_plus_i * (q * q.conj());
}

}  // namespace momentcert
