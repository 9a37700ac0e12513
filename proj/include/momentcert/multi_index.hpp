#pragma once

#include <compare>
#include <cstddef>
#include <numeric>
#include <vector>

namespace momentcert {

// Exponent vector of a monomial x1^e1 ... xn^en.
struct MultiIndex {
    std::vector<int> e;

    MultiIndex() = default;
    explicit MultiIndex(int n) : e(static_cast<std::size_t>(n), 0) {}
    MultiIndex(std::initializer_list<int> init) : e(init) {}

    int dim() const { return static_cast<int>(e.size()); }
    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }

    int operator[](int j) const { return e[static_cast<std::size_t>(j)]; }
    int& operator[](int j) { return e[static_cast<std::size_t>(j)]; }

    bool operator==(const MultiIndex& o) const { return e == o.e; }
};

inline MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r = a;
    for (std::size_t j = 0; j < r.e.size(); ++j) r.e[j] += b.e[j];
    return r;
}

// Graded lexicographic order: total degree first, then lexicographic on the
// exponent vector. Fixed globally so basis enumeration is deterministic.
struct GradedLexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.e < b.e;
    }
};

// All multi-indices with |alpha| <= max_degree, ascending graded-lex.
std::vector<MultiIndex> monomial_basis(int n, int max_degree);

// The univariate ladder {k * e_axis : k = 0..max_degree}; axis is 1-based.
std::vector<MultiIndex> axis_basis(int n, int axis, int max_degree);

}  // namespace momentcert
