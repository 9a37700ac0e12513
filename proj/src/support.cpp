#include "momentcert/support.hpp"

#include <algorithm>
#include <cmath>

#include "momentcert/poly_text.hpp"

namespace momentcert {

GeneratorSet::GeneratorSet(int n, std::vector<Generator> gs) : dim(n), gens(std::move(gs)) {
    for (const auto& g : gens) {
        if (g.poly.dim() != n) throw DimensionMismatch("GeneratorSet: generator dimension != n");
        if (!g.poly.is_real()) throw NonRealWeight("GeneratorSet: generators must be real");
    }
}

namespace {

ModuleEntry eigen_entry(const MomentSequence& L, const CPoly& g, int d, bool is_unit,
                        const std::string& label) {
    ModuleEntry e;
    e.generator = label;
    e.is_unit = is_unit;
    e.mode = GenMode::Inequality;
    const HermitianGram G = localizing_matrix(L, g, d);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G.entries);
    const Eigen::Index argmin = 0;  // eigenvalues ascending
    e.min_eig = es.eigenvalues()(argmin);
    e.tol = psd_tolerance(G);
    e.pass = e.min_eig >= -e.tol;
    e.eigvec.reserve(static_cast<std::size_t>(G.size()));
    for (int i = 0; i < G.size(); ++i) e.eigvec.push_back(es.eigenvectors()(i, argmin).real());
    return e;
}

}  // namespace

ModuleCheckResult module_check(const MomentSequence& L, const GeneratorSet& gens, int d) {
    if (gens.dim != L.dim()) throw DimensionMismatch("module_check: dimension mismatch");
    ModuleCheckResult r;
    r.d = d;
    r.entries.push_back(eigen_entry(L, CPoly::constant(L.dim(), 1.0), d, true, "1"));
    for (const auto& g : gens.gens) {
        if (g.mode == GenMode::Inequality) {
            r.entries.push_back(eigen_entry(L, g.poly, d, false, to_text(g.poly)));
        } else {
            ModuleEntry e;
            e.generator = to_text(g.poly);
            e.mode = GenMode::Equality;
            e.kernel = kernel_contains(L, g.poly, d);
            e.pass = e.kernel->contained;
            r.entries.push_back(std::move(e));
        }
    }
    r.verdict = std::all_of(r.entries.begin(), r.entries.end(),
                            [](const ModuleEntry& e) { return e.pass; });
    return r;
}

bool membership(const GeneratorSet& gens, std::span<const double> point, double tol_geo) {
    if (static_cast<int>(point.size()) != gens.dim)
        throw DimensionMismatch("membership: point dimension mismatch");
    for (const auto& g : gens.gens) {
        const double v = g.poly.eval(point).real();
        if (g.mode == GenMode::Inequality) {
            if (v < -tol_geo) return false;
        } else {
            if (std::abs(v) > tol_geo) return false;
        }
    }
    return true;
}

SupportExperiment support_inclusion_experiment(const MeasureOracle& m, const GeneratorSet& gens,
                                               int d_max) {
    if (!m.is_atomic())
        throw NonAtomicOracle("support_inclusion_experiment: oracle must be atomic");
    if (gens.dim != m.dim()) throw DimensionMismatch("support experiment: dimension mismatch");
    if (d_max < 0) throw InvalidSpec("support experiment: negative d_max");

    int max_gen_deg = 0;
    for (const auto& g : gens.gens) max_gen_deg = std::max(max_gen_deg, g.poly.degree());
    const int D = std::max(2 * d_max + max_gen_deg, std::max(2 * max_gen_deg, max_gen_deg + d_max));
    const MomentSequence L = m.moments(D);

    SupportExperiment ex;
    ex.d_max = d_max;
    for (int d = 0; d <= d_max; ++d) ex.per_degree.push_back(module_check(L, gens, d));
    ex.module_all_pass = std::all_of(ex.per_degree.begin(), ex.per_degree.end(),
                                     [](const ModuleCheckResult& r) { return r.verdict; });

    ex.all_atoms_member = true;
    for (const auto& a : m.atoms()) {
        const bool member = membership(gens, a);
        ex.atom_member.push_back(member);
        if (!member) ex.all_atoms_member = false;
    }

    ex.contract_violated = ex.module_all_pass && !ex.all_atoms_member;

    if (!ex.all_atoms_member) {
        // locate the first degree certifying the violation and derive a witness
        for (const auto& per_d : ex.per_degree) {
            const ModuleEntry* worst = nullptr;
            for (const auto& e : per_d.entries)
                if (!e.pass && (!worst || (e.mode == GenMode::Inequality &&
                                           (worst->mode != GenMode::Inequality ||
                                            e.min_eig < worst->min_eig))))
                    worst = &e;
            if (!worst) continue;
            ex.detecting_degree = per_d.d;
            ex.witness_generator = worst->generator;
            if (worst->mode == GenMode::Inequality && !worst->eigvec.empty()) {
                const auto basis = monomial_basis(m.dim(), per_d.d);
                CPoly h(m.dim());
                for (std::size_t i = 0; i < basis.size(); ++i)
                    h.add_term(basis[i], Cx(worst->eigvec[i], 0.0));
                ex.witness = h;
                const CPoly g = worst->is_unit ? CPoly::constant(m.dim(), 1.0)
                                               : parse_poly(worst->generator, m.dim());
                ex.witness_value = L.apply_real(g * h * h);
            }
            break;
        }
        ex.undetected_at_dmax = !ex.detecting_degree.has_value();
    }
    return ex;
}

double localized_nonneg_check(const MeasureOracle& m, const CPoly& g,
                              const LocalizedElement& h) {
    if (g.dim() != m.dim() || h.dim() != m.dim())
        throw DimensionMismatch("localized_nonneg_check: dimension mismatch");
    if (!g.is_real()) throw NonRealWeight("localized_nonneg_check: g must be real");
    const LocalizedElement integrand = LocalizedElement::from_poly(g) * (h * h.conj());
    return m.integrate_localized(integrand).real();
}

}  // namespace momentcert
