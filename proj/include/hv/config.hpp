#pragma once

#include <json.hpp>

#include "hv/automorphisms.hpp"
#include "hv/parse.hpp"

namespace hv {

using Json = nlohmann::ordered_json;

// Run configuration for the verification suites and the CLI. All suites are
// deterministic given (config, seed).
struct RunConfig {
    GroupInstance group;
    uint64_t seed = 42;
    int samples = 1000;
    int probe_radius = 4;
    int power_cap = kDefaultPowerCap;
    std::optional<std::vector<std::string>> suites;  // absent = all suites
    std::string output_path;
    std::vector<std::string> corrupt;  // test fixtures, e.g. "psi2"

    static RunConfig defaults();
    static RunConfig from_json(const Json& j);
    // path > HV_CONFIG env > built-in defaults
    static RunConfig load(const std::string& path);

    Json group_json() const;
};

Scalar scalar_from_json(const Json& j);
GroupInstance group_from_json(const Json& j);

ThetaAut theta_from_json(const GroupInstance& g, const Json& j);
InnerAut inner_from_json(const GroupInstance& g, const Json& j);
Derivation derivation_from_json(const GroupInstance& g, const Json& j);
Cocycle cocycle_from_json(const GroupInstance& g, const Json& j);

Json element_to_json(const AlgebraElement& u);
Json theta_to_json(const ThetaAut& t);

}  // namespace hv
