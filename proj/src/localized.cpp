#include "momentcert/localized.hpp"

#include <algorithm>
#include <cmath>

namespace momentcert {

std::optional<CPoly> divide_exact_one_plus_xj2(const CPoly& p, int axis) {
    const int n = p.dim();
    if (axis < 1 || axis > n) throw DimensionMismatch("divide: axis out of range");
    const int j = axis - 1;

    // Synthetic division by x_j^2 + 1, top down in the x_j exponent:
    // c*x_j^k  ->  quotient c*x_j^{k-2}, remainder update -c*x_j^{k-2}.
    CPoly rem = p;
    CPoly quot(n);
    while (true) {
        int k = -1;
        MultiIndex lead;
        Cx lead_c;
        for (const auto& [a, c] : rem.terms()) {
            if (a[j] >= 2 && a[j] > k) {
                k = a[j];
                lead = a;
                lead_c = c;
            }
        }
        if (k < 2) break;
        // All terms sharing the top x_j exponent, processed together.
        std::vector<std::pair<MultiIndex, Cx>> level;
        for (const auto& [a, c] : rem.terms())
            if (a[j] == k) level.emplace_back(a, c);
        for (const auto& [a, c] : level) {
            MultiIndex down = a;
            down[j] -= 2;
            quot.add_term(down, c);
            rem.add_term(a, -c);
            rem.add_term(down, -c);
        }
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

LocalizedElement::LocalizedElement(CPoly numerator, std::vector<int> den_exponents)
    : num_(std::move(numerator)), den_(std::move(den_exponents)) {
    if (static_cast<int>(den_.size()) != num_.dim())
        throw DimensionMismatch("LocalizedElement: denominator exponent length != n");
    for (int m : den_)
        if (m < 0) throw InvalidSpec("LocalizedElement: negative denominator exponent");
    canonicalize();
}

LocalizedElement LocalizedElement::from_poly(CPoly p) {
    std::vector<int> zero(static_cast<std::size_t>(p.dim()), 0);
    return LocalizedElement(std::move(p), std::move(zero));
}

void LocalizedElement::canonicalize() {
    const int n = num_.dim();
    for (int axis = 1; axis <= n; ++axis) {
        while (den_[static_cast<std::size_t>(axis - 1)] > 0) {
            auto q = divide_exact_one_plus_xj2(num_, axis);
            if (!q) break;
            num_ = std::move(*q);
            --den_[static_cast<std::size_t>(axis - 1)];
        }
    }
}

Cx LocalizedElement::eval(std::span<const double> point) const {
    Cx top = num_.eval(point);
    double bottom = 1.0;
    for (std::size_t j = 0; j < den_.size(); ++j) {
        const double f = 1.0 + point[j] * point[j];
        for (int k = 0; k < den_[j]; ++k) bottom *= f;
    }
    return top / bottom;
}

LocalizedElement LocalizedElement::conj() const {
    return LocalizedElement(num_.conj(), den_);
}

LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("localized add: dimensions differ");
    const int n = a.dim();
    std::vector<int> den(static_cast<std::size_t>(n));
    CPoly na = a.num_, nb = b.num_;
    for (int j = 0; j < n; ++j) {
        const std::size_t sj = static_cast<std::size_t>(j);
        den[sj] = std::max(a.den_[sj], b.den_[sj]);
        const CPoly f = one_plus_xj2(n, j + 1);
        for (int k = a.den_[sj]; k < den[sj]; ++k) na = na * f;
        for (int k = b.den_[sj]; k < den[sj]; ++k) nb = nb * f;
    }
    return LocalizedElement(na + nb, std::move(den));
}

LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("localized mul: dimensions differ");
    std::vector<int> den(a.den_.size());
    for (std::size_t j = 0; j < den.size(); ++j) den[j] = a.den_[j] + b.den_[j];
    return LocalizedElement(a.num_ * b.num_, std::move(den));
}

}  // namespace momentcert
