// Command-line front end: moment generation, determinacy/existence
// certificates, Carleman analysis, support localization, and the seeded
// identity suites.
//
// Exit codes: 0 success (certified / consistent), 2 inconclusive or
// violation detected, 1 error.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <string>

#include "momentcert/certificates.hpp"
#include "momentcert/io.hpp"
#include "momentcert/suites.hpp"

namespace fs = std::filesystem;
using namespace momentcert;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;

struct Options {
    std::string oracle_file;
    std::string moments_file;
    std::string generators_file;
    std::string axes = "";
    int d_max = 2;
    double tol = kDefaultTolCert;
    std::uint64_t seed = kDefaultSeed;
    std::string out;
    std::string format = "json";
    std::string space = "full";
};

std::vector<int> parse_axes(const std::string& s, int n) {
    std::vector<int> axes;
    if (s.empty()) {
        for (int j = 1; j <= n; ++j) axes.push_back(j);
        return axes;
    }
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        axes.push_back(std::stoi(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return axes;
}

Json config_json(const Options& opt, const std::string& command) {
    Json c;
    c["command"] = command;
    if (!opt.oracle_file.empty()) c["oracle"] = opt.oracle_file;
    if (!opt.moments_file.empty()) c["moments"] = opt.moments_file;
    if (!opt.generators_file.empty()) c["generators"] = opt.generators_file;
    if (!opt.axes.empty()) c["axes"] = opt.axes;
    c["dmax"] = opt.d_max;
    c["tol"] = opt.tol;
    c["seed"] = opt.seed;
    c["space"] = opt.space;
    return c;
}

fs::path sibling_with_suffix(const fs::path& p, const std::string& suffix) {
    fs::path q = p;
    q.replace_extension();
    return fs::path(q.string() + suffix);
}

// --oracle takes a spec file or the spec itself, inline
MeasureOracle oracle_from_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') {
        try {
            return oracle_from_json(Json::parse(arg));
        } catch (const nlohmann::json::exception& e) {
            throw InvalidSpec("inline oracle spec is not valid JSON: " + std::string(e.what()));
        }
    }
    return load_oracle(arg);
}

void emit_report(const Options& opt, const Json& body, const CertificateReport* csv_source) {
    const bool want_json = opt.format == "json" || opt.format == "both";
    const bool want_csv = opt.format == "csv" || opt.format == "both";
    if (opt.out.empty()) {
        if (want_json) std::cout << body.dump(2) << "\n";
        if (want_csv && csv_source) std::cout << to_csv(*csv_source);
        return;
    }
    const fs::path out(opt.out);
    if (opt.format == "json") {
        write_text_atomic(out, body.dump(2) + "\n");
    } else if (opt.format == "csv") {
        if (!csv_source) throw InvalidSpec("csv format is only available for certify");
        write_text_atomic(out, to_csv(*csv_source));
    } else {
        write_text_atomic(sibling_with_suffix(out, ".json"), body.dump(2) + "\n");
        if (csv_source) write_text_atomic(sibling_with_suffix(out, ".csv"), to_csv(*csv_source));
    }
}

int cmd_moments(const Options& opt) {
    if (opt.oracle_file.empty()) throw InvalidSpec("moments: --oracle is required");
    if (opt.out.empty()) throw InvalidSpec("moments: --out is required");
    if (opt.d_max < 0) throw InvalidSpec("moments: degree must be >= 0");
    const MeasureOracle m = oracle_from_arg(opt.oracle_file);
    save_moments(m.moments(opt.d_max), opt.out);
    if (m.heavy_tailed()) {
        // log-domain sidecar: heavy-tailed factors outlive the linear range
        Json side;
        side["kind"] = "log-even-moments";
        side["n"] = m.dim();
        const int K = std::max(opt.d_max / 2, 100);
        side["K"] = K;
        Json axes = Json::array();
        for (int j = 1; j <= m.dim(); ++j) {
            Json a;
            a["axis"] = j;
            a["log_even_moments"] = m.log_even_moments(j, K);
            axes.push_back(std::move(a));
        }
        side["axes"] = std::move(axes);
        write_text_atomic(sibling_with_suffix(opt.out, ".log.json"), side.dump(2) + "\n");
    }
    return kExitOk;
}

int cmd_certify(const Options& opt) {
    if (opt.moments_file.empty()) throw InvalidSpec("certify: --moments is required");
    const MomentSequence L = load_moments(opt.moments_file);
    const auto axes = parse_axes(opt.axes, L.dim());
    const SearchSpace space =
        opt.space == "axis" ? SearchSpace::AxisOnly : SearchSpace::Full;
    const CertificateReport rep = certify(L, axes, opt.d_max, opt.tol, space);

    Json body;
    body["config"] = config_json(opt, "certify");
    body["report"] = to_json(rep);
    emit_report(opt, body, &rep);

    bool all_requested_certified = !rep.per_axis.empty();
    for (const auto& ac : rep.per_axis)
        if (!ac.certified) all_requested_certified = false;
    return all_requested_certified ? kExitOk : kExitInconclusive;
}

int cmd_carleman(const Options& opt) {
    const int K = std::max(opt.d_max, 10);
    Json axes_json = Json::array();
    if (!opt.oracle_file.empty()) {
        const MeasureOracle m = oracle_from_arg(opt.oracle_file);
        for (int j : parse_axes(opt.axes, m.dim())) {
            const CarlemanReport rep = carleman_report(carleman_terms(m.log_even_moments(j, K)));
            Json a;
            a["axis"] = j;
            a["report"] = to_json(rep);
            axes_json.push_back(std::move(a));
        }
    } else if (!opt.moments_file.empty()) {
        const MomentSequence L = load_moments(opt.moments_file);
        const int Kfile = L.max_degree() / 2;
        if (Kfile < 10)
            throw TooFewTerms("carleman: moment file provides fewer than 10 even moments");
        for (int j : parse_axes(opt.axes, L.dim())) {
            std::vector<double> logs;
            for (int k = 1; k <= Kfile; ++k) {
                MultiIndex a(L.dim());
                a[j - 1] = 2 * k;
                const double m = L.moment(a);
                if (!(m > 0.0))
                    throw NonPositiveEvenMoment("carleman: nonpositive even moment on axis " +
                                                std::to_string(j));
                logs.push_back(std::log(m));
            }
            const CarlemanReport rep = carleman_report(carleman_terms(logs));
            Json a;
            a["axis"] = j;
            a["report"] = to_json(rep);
            axes_json.push_back(std::move(a));
        }
    } else {
        throw InvalidSpec("carleman: need --oracle or --moments");
    }
    Json body;
    body["config"] = config_json(opt, "carleman");
    body["axes"] = std::move(axes_json);
    emit_report(opt, body, nullptr);
    return kExitOk;
}

int cmd_support(const Options& opt) {
    if (opt.generators_file.empty()) throw InvalidSpec("support: --generators is required");
    Json body;
    body["config"] = config_json(opt, "support");
    int exit_code = kExitOk;
    if (!opt.oracle_file.empty()) {
        const MeasureOracle m = oracle_from_arg(opt.oracle_file);
        const GeneratorSet gens = load_generators(opt.generators_file, m.dim());
        const SupportExperiment ex = support_inclusion_experiment(m, gens, opt.d_max);
        body["experiment"] = to_json(ex);
        exit_code = ex.detecting_degree.has_value() ? kExitInconclusive : kExitOk;
    } else if (!opt.moments_file.empty()) {
        const MomentSequence L = load_moments(opt.moments_file);
        const GeneratorSet gens = load_generators(opt.generators_file, L.dim());
        Json per_degree = Json::array();
        bool any_violation = false;
        for (int d = 0; d <= opt.d_max; ++d) {
            const ModuleCheckResult r = module_check(L, gens, d);
            if (!r.verdict) any_violation = true;
            per_degree.push_back(to_json(r));
        }
        body["per_degree"] = std::move(per_degree);
        exit_code = any_violation ? kExitInconclusive : kExitOk;
    } else {
        throw InvalidSpec("support: need --oracle or --moments");
    }
    emit_report(opt, body, nullptr);
    return exit_code;
}

int cmd_identity_suite(const Options& opt) {
    const auto results = run_all_suites(opt.seed);
    Json body;
    body["config"] = config_json(opt, "identity-suite");
    Json suites = Json::array();
    bool all_pass = true;
    for (const auto& r : results) {
        Json s;
        s["name"] = r.name;
        s["cases"] = r.cases;
        s["failures"] = r.failures;
        s["worst_violation"] = r.worst_violation;
        if (!r.failure_notes.empty()) s["failure_notes"] = r.failure_notes;
        suites.push_back(std::move(s));
        if (!r.pass()) all_pass = false;
    }
    body["suites"] = std::move(suites);
    body["pass"] = all_pass;
    emit_report(opt, body, nullptr);
    return all_pass ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical certificates for multivariate moment functionals"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&opt](CLI::App* cmd) {
        cmd->add_option("--oracle", opt.oracle_file, "oracle spec JSON file");
        cmd->add_option("--moments", opt.moments_file, "moment JSON file");
        cmd->add_option("--generators", opt.generators_file, "generator set JSON file");
        cmd->add_option("--axes", opt.axes, "comma-separated 1-based axes (default: all)");
        cmd->add_option("--dmax", opt.d_max, "degree sweep bound / moment degree / term count");
        cmd->add_option("--tol", opt.tol, "certificate tolerance")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", opt.seed, "seed for randomized suites");
        cmd->add_option("--out", opt.out, "output path (stdout if omitted)");
        cmd->add_option("--format", opt.format, "json|csv|both")
            ->check(CLI::IsMember({"json", "csv", "both"}));
        cmd->add_option("--space", opt.space, "search space: full|axis")
            ->check(CLI::IsMember({"full", "axis"}));
    };

    CLI::App* moments = app.add_subcommand("moments", "generate a moment file from an oracle");
    CLI::App* certify_cmd = app.add_subcommand("certify", "run the degree-sweep certificate");
    CLI::App* carleman_cmd = app.add_subcommand("carleman", "Carleman term and trend analysis");
    CLI::App* support_cmd = app.add_subcommand("support", "support localization checks");
    CLI::App* suite_cmd = app.add_subcommand("identity-suite", "seeded identity/property suites");
    for (CLI::App* c : {moments, certify_cmd, carleman_cmd, support_cmd, suite_cmd})
        add_common(c);

    CLI11_PARSE(app, argc, argv);

    try {
        if (moments->parsed()) return cmd_moments(opt);
        if (certify_cmd->parsed()) return cmd_certify(opt);
        if (carleman_cmd->parsed()) return cmd_carleman(opt);
        if (support_cmd->parsed()) return cmd_support(opt);
        if (suite_cmd->parsed()) return cmd_identity_suite(opt);
    } catch (const NotPSD& e) {
        std::cerr << "error: functional is not PSD (min eigenvalue " << e.min_eig << ")\n";
        return kExitError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
