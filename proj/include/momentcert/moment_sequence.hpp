#pragma once

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "momentcert/cpoly.hpp"
#include "momentcert/multi_index.hpp"

namespace momentcert {

// Truncated linear functional L on R[x1..xn]: the moments L(x^alpha) for all
// |alpha| <= max_degree. Complete by construction; operations that would need
// moments beyond the truncation refuse with DegreeExceeded.
class MomentSequence {
public:
    using MomentMap = std::map<MultiIndex, double, GradedLexLess>;

    MomentSequence(int n, int max_degree, MomentMap moments);

    int dim() const { return n_; }
    int max_degree() const { return max_degree_; }
    const MomentMap& moments() const { return m_; }

    double moment(const MultiIndex& alpha) const;

    // L extended to complex polynomials by L(f1 + i f2) = L(f1) + i L(f2).
    Cx apply(const CPoly& f) const;
    // Re(apply(f)); the imaginary part of L(f) for self-conjugate f is 0.
    double apply_real(const CPoly& f) const { return apply(f).real(); }

    // <f, g> = L(f conj(g)) (sesquilinear)
    Cx inner(const CPoly& f, const CPoly& g) const;
    // ||f|| = sqrt(<f, f>), clamped at 0 against roundoff
    double norm(const CPoly& f) const;

private:
    int n_;
    int max_degree_;
    MomentMap m_;
};

// Matrix realization of a weighted pairing over an ordered monomial basis.
// Hermitian by construction; real symmetric whenever the weight is real.
struct HermitianGram {
    std::vector<MultiIndex> basis;
    Eigen::MatrixXcd entries;

    int size() const { return static_cast<int>(basis.size()); }
};

// Entry (alpha, beta) = L(g x^{alpha+beta}) over {x^alpha : |alpha| <= d}.
// g = 1 gives the moment matrix M_d(L). Requires 2d + deg g <= max_degree
// and real g.
HermitianGram localizing_matrix(const MomentSequence& L, const CPoly& g, int d);
HermitianGram moment_matrix(const MomentSequence& L, int d);

double min_eigenvalue(const HermitianGram& G);

// Relative PSD floor: moment matrices are ill-conditioned and mass scales
// vary, so the tolerance tracks trace/dim.
double psd_tolerance(const HermitianGram& G);
inline constexpr double kPsdTolScale = 1e-8;

// Two-sided kernel test for a real polynomial g:
//   (a) L(g^2) <= tol
//   (b) max over monomials h, deg h <= d, of |L(g h)| <= tol
// The two are equivalent for functionals with a representing measure
// (Cauchy-Schwarz); both values are reported and disagreement is flagged.
struct KernelCheck {
    bool contained = false;
    double square_value = 0.0;
    bool square_ok = false;
    double max_cross = 0.0;
    MultiIndex worst_monomial;
    bool cross_ok = false;
    bool subconditions_agree = false;
    double tol = 0.0;
};
inline constexpr double kKernelTol = 1e-10;
KernelCheck kernel_contains(const MomentSequence& L, const CPoly& g, int d,
                            double tol = kKernelTol);

}  // namespace momentcert
