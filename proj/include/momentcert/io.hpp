#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "momentcert/certificates.hpp"
#include "momentcert/oracles.hpp"
#include "momentcert/support.hpp"

namespace momentcert {

using Json = nlohmann::ordered_json;

// moment file: {"n": int, "max_degree": int,
//               "moments": [{"alpha": [ints], "value": float}, ...]}
// Completeness is validated on load; save order is graded-lex so identical
// functionals serialize to identical bytes.
Json moments_to_json(const MomentSequence& L);
MomentSequence moments_from_json(const Json& j);
MomentSequence load_moments(const std::filesystem::path& file);
void save_moments(const MomentSequence& L, const std::filesystem::path& file);

// oracle spec: {"kind": "atomic", "points": [[..]], "weights": [..]}
//            | {"kind": "product", "factors": [<1-D spec>, ...]}
//            | a bare 1-D spec, treated as a single-factor product:
//              {"kind": "gaussian", "sigma": s} | {"kind": "lognormal", "sigma": s}
//            | {"kind": "uniform", "a": a, "b": b}
//            | {"kind": "atomic1d", "points": [..], "weights": [..]}
MeasureOracle oracle_from_json(const Json& j);
Json oracle_to_json(const MeasureOracle& m);
MeasureOracle load_oracle(const std::filesystem::path& file);

// generator set: [{"poly": "<poly text>", "mode": "ineq"|"eq"}, ...]
GeneratorSet generators_from_json(const Json& j, int n);
GeneratorSet load_generators(const std::filesystem::path& file, int n);

Json to_json(const CertificateReport& rep);
std::string to_csv(const CertificateReport& rep);
Json to_json(const CarlemanReport& rep);
Json to_json(const ModuleCheckResult& r);
Json to_json(const SupportExperiment& ex);
Json to_json(const KernelCheck& k);

// write via temp file + rename so readers never observe partial output
void write_text_atomic(const std::filesystem::path& file, const std::string& content);

}  // namespace momentcert
