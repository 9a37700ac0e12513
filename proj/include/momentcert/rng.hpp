#pragma once

#include <cstdint>
#include <random>

#include "momentcert/cpoly.hpp"

namespace momentcert {

// Seeded generator with explicit value mappings. std::distributions are
// implementation-defined, so draws go through fixed arithmetic to keep
// reports bit-identical for a given seed on one platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform in [0, 1)
    double unit() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * unit(); }

    // inclusive bounds
    int uniform_int(int a, int b) {
        const std::uint64_t span = static_cast<std::uint64_t>(b - a) + 1;
        return a + static_cast<int>(eng_() % span);
    }

    Cx complex_int(int lo, int hi) {
        const double re = uniform_int(lo, hi);
        const double im = uniform_int(lo, hi);
        return Cx(re, im);
    }

    // random polynomial with integer real/imag coefficient parts
    CPoly integer_poly(int n, int max_degree, int coeff_lo, int coeff_hi) {
        CPoly p(n);
        for (const auto& a : monomial_basis(n, max_degree)) p.add_term(a, complex_int(coeff_lo, coeff_hi));
        return p;
    }

    // random polynomial with real/imag parts uniform in [lo, hi]
    CPoly real_coeff_poly(int n, int max_degree, double lo, double hi) {
        CPoly p(n);
        for (const auto& a : monomial_basis(n, max_degree))
            p.add_term(a, Cx(uniform(lo, hi), uniform(lo, hi)));
        return p;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace momentcert
