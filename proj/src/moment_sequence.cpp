#include "momentcert/moment_sequence.hpp"

#include <cmath>

namespace momentcert {

MomentSequence::MomentSequence(int n, int max_degree, MomentMap moments)
    : n_(n), max_degree_(max_degree), m_(std::move(moments)) {
    if (n < 1) throw InvalidSpec("MomentSequence: dimension must be >= 1");
    if (max_degree < 0) throw InvalidSpec("MomentSequence: max_degree must be >= 0");
    for (const auto& [a, v] : m_) {
        if (a.dim() != n) throw DimensionMismatch("MomentSequence: alpha length != n");
        if (a.degree() > max_degree)
            throw InvalidSpec("MomentSequence: moment above max_degree");
        if (!std::isfinite(v)) throw InvalidSpec("MomentSequence: non-finite moment value");
    }
    // completeness up to max_degree
    for (const auto& a : monomial_basis(n, max_degree))
        if (!m_.count(a))
            throw MissingMoment("MomentSequence: missing moment at degree " +
                                std::to_string(a.degree()));
}

double MomentSequence::moment(const MultiIndex& alpha) const {
    if (alpha.dim() != n_) throw DimensionMismatch("moment: alpha length != n");
    auto it = m_.find(alpha);
    if (it == m_.end())
        throw DegreeExceeded("moment of degree " + std::to_string(alpha.degree()) +
                             " exceeds truncation " + std::to_string(max_degree_));
    return it->second;
}

Cx MomentSequence::apply(const CPoly& f) const {
    if (f.dim() != n_) throw DimensionMismatch("apply: polynomial dimension != n");
    Cx acc(0.0, 0.0);
    for (const auto& [a, c] : f.terms()) acc += c * moment(a);
    return acc;
}

Cx MomentSequence::inner(const CPoly& f, const CPoly& g) const {
    return apply(f * g.conj());
}

double MomentSequence::norm(const CPoly& f) const {
    const double v = inner(f, f).real();
    return v > 0.0 ? std::sqrt(v) : 0.0;
}

HermitianGram localizing_matrix(const MomentSequence& L, const CPoly& g, int d) {
    if (g.dim() != L.dim()) throw DimensionMismatch("localizing_matrix: dimension mismatch");
    if (!g.is_real()) throw NonRealWeight("localizing_matrix: weight must be real");
    if (2 * d + g.degree() > L.max_degree())
        throw DegreeExceeded("localizing_matrix: 2d + deg g exceeds truncation");

    HermitianGram G;
    G.basis = monomial_basis(L.dim(), d);
    const int B = G.size();
    G.entries.resize(B, B);
    for (int i = 0; i < B; ++i) {
        for (int k = i; k < B; ++k) {
            double v = 0.0;
            const MultiIndex ab = G.basis[static_cast<std::size_t>(i)] +
                                  G.basis[static_cast<std::size_t>(k)];
            for (const auto& [gamma, c] : g.terms()) v += c.real() * L.moment(gamma + ab);
            G.entries(i, k) = v;
            G.entries(k, i) = v;
        }
    }
    return G;
}

HermitianGram moment_matrix(const MomentSequence& L, int d) {
    return localizing_matrix(L, CPoly::constant(L.dim(), 1.0), d);
}

double min_eigenvalue(const HermitianGram& G) {
    if (G.size() == 0) throw InvalidSpec("min_eigenvalue: empty matrix");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G.entries, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double psd_tolerance(const HermitianGram& G) {
    const double tr = G.entries.real().trace();
    return kPsdTolScale * (1.0 + std::abs(tr) / static_cast<double>(G.size()));
}

KernelCheck kernel_contains(const MomentSequence& L, const CPoly& g, int d, double tol) {
    if (g.dim() != L.dim()) throw DimensionMismatch("kernel_contains: dimension mismatch");
    if (!g.is_real()) throw NonRealWeight("kernel_contains: g must be real");
    if (2 * g.degree() > L.max_degree() || g.degree() + d > L.max_degree())
        throw DegreeExceeded("kernel_contains: degree budget exceeded");

    KernelCheck r;
    r.tol = tol;
    r.square_value = L.apply_real(g * g);
    r.square_ok = r.square_value <= tol;
    r.worst_monomial = MultiIndex(L.dim());
    r.max_cross = 0.0;
    for (const auto& h : monomial_basis(L.dim(), d)) {
        const double v = std::abs(L.apply_real(g * CPoly::monomial(L.dim(), h, 1.0)));
        if (v > r.max_cross) {
            r.max_cross = v;
            r.worst_monomial = h;
        }
    }
    r.cross_ok = r.max_cross <= tol;
    r.subconditions_agree = (r.square_ok == r.cross_ok);
    r.contained = r.square_ok && r.cross_ok;
    return r;
}

}  // namespace momentcert
