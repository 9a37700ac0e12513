#pragma once

#include <vector>

namespace momentcert {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Nodes/weights on [-1, 1] for weight 1. Exact for polynomials of degree
// 2n - 1. Cached per n; thread-safe.
const QuadratureRule& gauss_legendre(int n);

// Physicists' convention, weight exp(-x^2) on R; sum of weights is sqrt(pi).
// Uses the orthonormal recurrence so large n stays in range. Cached.
const QuadratureRule& gauss_hermite(int n);

inline constexpr double kQuadRelTol = 1e-10;
inline constexpr int kQuadStartNodes = 16;
inline constexpr int kQuadMaxNodes1D = 4096;

}  // namespace momentcert
