#pragma once

#include <optional>
#include <span>
#include <vector>

#include "momentcert/cpoly.hpp"

namespace momentcert {

// Exact division of p by (1 + x_axis^2); nullopt unless the remainder is
// exactly zero (coefficient-wise comparison with 0.0).
std::optional<CPoly> divide_exact_one_plus_xj2(const CPoly& p, int axis);

// An element numerator / prod_j (1 + x_j^2)^{m_j} of the localized ring (or
// its complexification). The denominator never vanishes on R^n, so evaluation
// is finite everywhere. Canonical form divides out (1 + x_j^2) factors as long
// as the numerator is exactly divisible.
class LocalizedElement {
public:
    LocalizedElement(CPoly numerator, std::vector<int> den_exponents);
    static LocalizedElement from_poly(CPoly p);

    int dim() const { return num_.dim(); }
    const CPoly& numerator() const { return num_; }
    const std::vector<int>& den_exponents() const { return den_; }

    Cx eval(std::span<const double> point) const;
    LocalizedElement conj() const;

    friend LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b);
    friend LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b);

private:
    CPoly num_;
    std::vector<int> den_;

    void canonicalize();
};

}  // namespace momentcert
