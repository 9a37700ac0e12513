#include "momentcert/io.hpp"

#include <fstream>

#include "momentcert/poly_text.hpp"

namespace momentcert {

Json moments_to_json(const MomentSequence& L) {
    Json j;
    j["n"] = L.dim();
    j["max_degree"] = L.max_degree();
    Json arr = Json::array();
    for (const auto& [a, v] : L.moments()) {
        Json entry;
        entry["alpha"] = a.e;
        entry["value"] = v;
        arr.push_back(std::move(entry));
    }
    j["moments"] = std::move(arr);
    return j;
}

MomentSequence moments_from_json(const Json& j) {
    if (!j.contains("n") || !j.contains("max_degree") || !j.contains("moments"))
        throw InvalidSpec("moment file: need n, max_degree, moments");
    try {
        const int n = j.at("n").get<int>();
        const int D = j.at("max_degree").get<int>();
        MomentSequence::MomentMap map;
        for (const auto& entry : j.at("moments")) {
            MultiIndex a;
            a.e = entry.at("alpha").get<std::vector<int>>();
            const double v = entry.at("value").get<double>();
            if (!map.emplace(a, v).second) throw InvalidSpec("moment file: duplicate alpha");
        }
        return MomentSequence(n, D, std::move(map));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidSpec("moment file: " + std::string(e.what()));
    }
}

MomentSequence load_moments(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw InvalidSpec("cannot open moment file: " + file.string());
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidSpec("moment file is not valid JSON: " + std::string(e.what()));
    }
    return moments_from_json(j);
}

void save_moments(const MomentSequence& L, const std::filesystem::path& file) {
    write_text_atomic(file, moments_to_json(L).dump(2) + "\n");
}

namespace {

Oracle1D oracle1d_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "gaussian") return Gaussian1D{j.at("sigma").get<double>()};
    if (kind == "lognormal") return LogNormal1D{j.at("sigma").get<double>()};
    if (kind == "uniform") return Uniform1D{j.at("a").get<double>(), j.at("b").get<double>()};
    if (kind == "atomic1d")
        return Atomic1D{j.at("points").get<std::vector<double>>(),
                        j.at("weights").get<std::vector<double>>()};
    throw InvalidSpec("oracle spec: unknown 1-D kind '" + kind + "'");
}

Json oracle1d_to_json(const Oracle1D& o) {
    Json j;
    std::visit(
        [&j](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Gaussian1D>) {
                j["kind"] = "gaussian";
                j["sigma"] = f.sigma;
            } else if constexpr (std::is_same_v<T, LogNormal1D>) {
                j["kind"] = "lognormal";
                j["sigma"] = f.sigma;
            } else if constexpr (std::is_same_v<T, Uniform1D>) {
                j["kind"] = "uniform";
                j["a"] = f.a;
                j["b"] = f.b;
            } else {
                j["kind"] = "atomic1d";
                j["points"] = f.points;
                j["weights"] = f.weights;
            }
        },
        o);
    return j;
}

}  // namespace

MeasureOracle oracle_from_json(const Json& j) {
    if (!j.contains("kind")) throw InvalidSpec("oracle spec: missing kind");
    try {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "atomic") {
            return MeasureOracle::atomic(j.at("points").get<std::vector<std::vector<double>>>(),
                                         j.at("weights").get<std::vector<double>>());
        }
        if (kind == "product") {
            std::vector<Oracle1D> factors;
            for (const auto& f : j.at("factors")) factors.push_back(oracle1d_from_json(f));
            return MeasureOracle::product(std::move(factors));
        }
        // bare 1-D spec
        return MeasureOracle::from_1d(oracle1d_from_json(j));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidSpec("oracle spec: " + std::string(e.what()));
    }
}

Json oracle_to_json(const MeasureOracle& m) {
    Json j;
    if (m.is_atomic()) {
        j["kind"] = "atomic";
        j["points"] = m.atoms();
        j["weights"] = m.weights();
        return j;
    }
    j["kind"] = "product";
    Json arr = Json::array();
    for (const auto& f : m.factors()) arr.push_back(oracle1d_to_json(f));
    j["factors"] = std::move(arr);
    return j;
}

MeasureOracle load_oracle(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw InvalidSpec("cannot open oracle spec: " + file.string());
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidSpec("oracle spec is not valid JSON: " + std::string(e.what()));
    }
    return oracle_from_json(j);
}

GeneratorSet generators_from_json(const Json& j, int n) {
    if (!j.is_array()) throw InvalidSpec("generator file: expected a JSON array");
    std::vector<Generator> gens;
    try {
        for (const auto& entry : j) {
            Generator g;
            g.poly = parse_poly(entry.at("poly").get<std::string>(), n);
            const std::string mode = entry.at("mode").get<std::string>();
            if (mode == "ineq") g.mode = GenMode::Inequality;
            else if (mode == "eq") g.mode = GenMode::Equality;
            else throw InvalidSpec("generator file: mode must be 'ineq' or 'eq'");
            gens.push_back(std::move(g));
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidSpec("generator file: " + std::string(e.what()));
    }
    return GeneratorSet(n, std::move(gens));
}

GeneratorSet load_generators(const std::filesystem::path& file, int n) {
    std::ifstream in(file);
    if (!in) throw InvalidSpec("cannot open generator file: " + file.string());
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidSpec("generator file is not valid JSON: " + std::string(e.what()));
    }
    return generators_from_json(j, n);
}

Json to_json(const CarlemanReport& rep) {
    Json j;
    j["terms"] = rep.terms;
    j["partial_sums"] = rep.partial_sums;
    j["classification"] = rep.classification;
    j["heuristic"] = true;
    j["power_exponent"] = rep.power_exponent;
    j["exp_slope"] = rep.exp_slope;
    j["exponential_decay"] = rep.exponential_decay;
    return j;
}

Json to_json(const KernelCheck& k) {
    Json j;
    j["contained"] = k.contained;
    j["square_value"] = k.square_value;
    j["square_ok"] = k.square_ok;
    j["max_cross"] = k.max_cross;
    j["worst_monomial"] = k.worst_monomial.e;
    j["cross_ok"] = k.cross_ok;
    j["subconditions_agree"] = k.subconditions_agree;
    j["tol"] = k.tol;
    return j;
}

Json to_json(const CertificateReport& rep) {
    Json j;
    j["n"] = rep.n;
    j["max_degree"] = rep.max_degree;
    j["d_max"] = rep.d_max;
    j["tol_cert"] = rep.tol_cert;
    j["space"] = rep.space == SearchSpace::Full ? "full" : "axis-only";
    j["axes"] = rep.axes;
    Json per_axis = Json::array();
    for (const auto& ac : rep.per_axis) {
        Json a;
        a["axis"] = ac.axis;
        Json rows = Json::array();
        for (const auto& r : ac.rows) {
            Json row;
            row["d"] = r.d;
            row["linear_residual"] = r.linear_residual;
            row["quartic_value"] = r.quartic_value;
            row["density_residual"] = r.density_residual;
            row["density_bound"] = r.density_bound;
            rows.push_back(std::move(row));
        }
        a["table"] = std::move(rows);
        a["verdict"] = ac.certified ? "certified-to-tolerance" : "inconclusive";
        a["tolerance"] = rep.tol_cert;
        a["best_evidence"] = ac.best_evidence;
        a["best_degree"] = ac.best_degree;
        if (ac.carleman) a["carleman"] = to_json(*ac.carleman);
        if (!ac.carleman_note.empty()) a["carleman_note"] = ac.carleman_note;
        per_axis.push_back(std::move(a));
    }
    j["per_axis"] = std::move(per_axis);
    j["existence_evidence"] = rep.existence_evidence;
    j["determinacy_evidence"] = rep.determinacy_evidence;
    j["notes"] = rep.notes;
    return j;
}

std::string to_csv(const CertificateReport& rep) {
    std::string out = "axis,d,linear_residual,quartic_value,density_residual,density_bound\n";
    for (const auto& ac : rep.per_axis) {
        for (const auto& r : ac.rows) {
            out += std::to_string(ac.axis);
            out += ',';
            out += std::to_string(r.d);
            out += ',';
            out += format_double(r.linear_residual);
            out += ',';
            out += format_double(r.quartic_value);
            out += ',';
            out += format_double(r.density_residual);
            out += ',';
            out += format_double(r.density_bound);
            out += '\n';
        }
    }
    return out;
}

Json to_json(const ModuleCheckResult& r) {
    Json j;
    j["d"] = r.d;
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json je;
        je["generator"] = e.generator;
        je["mode"] = e.mode == GenMode::Inequality ? "ineq" : "eq";
        if (e.mode == GenMode::Inequality) {
            je["min_eigenvalue"] = e.min_eig;
            je["tol_psd"] = e.tol;
        }
        if (e.kernel) je["kernel"] = to_json(*e.kernel);
        je["pass"] = e.pass;
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    j["verdict"] = r.verdict ? "nonnegative-on-truncation" : "violation";
    return j;
}

Json to_json(const SupportExperiment& ex) {
    Json j;
    j["d_max"] = ex.d_max;
    Json per_degree = Json::array();
    for (const auto& r : ex.per_degree) per_degree.push_back(to_json(r));
    j["per_degree"] = std::move(per_degree);
    j["atom_member"] = ex.atom_member;
    j["all_atoms_member"] = ex.all_atoms_member;
    j["module_all_pass"] = ex.module_all_pass;
    j["contract_violated"] = ex.contract_violated;
    if (ex.detecting_degree) j["detecting_degree"] = *ex.detecting_degree;
    j["undetected_at_dmax"] = ex.undetected_at_dmax;
    if (ex.witness) {
        j["witness"] = to_text(*ex.witness);
        j["witness_generator"] = ex.witness_generator;
        j["witness_value"] = ex.witness_value;
    }
    return j;
}

void write_text_atomic(const std::filesystem::path& file, const std::string& content) {
    const std::filesystem::path tmp = file.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InvalidSpec("cannot write to " + tmp.string());
        out << content;
        if (!out) throw InvalidSpec("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, file);
}

}  // namespace momentcert
