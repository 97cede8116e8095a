// hv: exact-arithmetic calculator and verification driver for the generalized
// Witt / differential-operator / Heisenberg-Virasoro algebras.
//
// Exit codes: 0 success, 1 suite or check failure, 2 usage/parse errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "hv/sampling.hpp"
#include "hv/suites.hpp"

using namespace hv;

namespace {

struct Common {
    std::string config_path;
    RunConfig cfg = RunConfig::defaults();
    void load() { cfg = RunConfig::load(config_path); }
};

Json parse_json_arg(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw error("bad " + what + " JSON: " + e.what());
    }
}

void print_element(const AlgebraElement& u) {
    std::cout << u.to_text() << "\n" << element_to_json(u).dump() << "\n";
}

void print_scalar(const Scalar& s) {
    Json j;
    j["scalar"] = s.to_string();
    std::cout << s.to_string() << "\n" << j.dump() << "\n";
}

int emit_report(const Report& report, const std::string& json_path) {
    for (const SuiteResult& s : report.suites) {
        std::cerr << (s.pass ? "pass  " : "FAIL  ") << s.name << "  (" << s.samples
                  << " samples, " << s.millis << " ms)\n";
    }
    Json j = report.to_json();
    if (json_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(json_path);
        if (!out) throw error("cannot write report to '" + json_path + "'");
        out << j.dump(2) << "\n";
        std::cout << (report.all_pass() ? "pass" : "fail") << "\n";
    }
    return report.all_pass() ? 0 : 1;
}

// Builds the optional eta o theta word from --inner/--theta flags.
LinearMap morphism_from_flags(const GroupInstance& g, const std::string& theta_json,
                              const std::string& inner_json, const std::string& der_json) {
    int given = (!theta_json.empty()) + (!inner_json.empty()) + (!der_json.empty());
    if (given == 0) throw error("specify --theta, --inner or --der");
    if (!der_json.empty()) {
        if (given > 1) throw error("--der cannot combine with automorphism flags");
        Derivation d = derivation_from_json(g, parse_json_arg(der_json, "derivation"));
        return [d, g](const AlgebraElement& u) { return d.apply(g, u); };
    }
    ThetaAut theta = theta_json.empty()
                         ? ThetaAut::identity(g)
                         : theta_from_json(g, parse_json_arg(theta_json, "theta"));
    InnerAut inner = inner_json.empty()
                         ? InnerAut{}
                         : inner_from_json(g, parse_json_arg(inner_json, "inner"));
    AutWord word{std::move(inner), std::move(theta)};
    return word.as_map(g);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Heisenberg-Virasoro algebra toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    app.add_option("--config", common.config_path, "config JSON path (or HV_CONFIG env)");

    // ---- bracket / product / apply ----------------------------------------
    std::string algebra_name = "hv";
    std::string lhs_text, rhs_text, elem_text;
    std::string theta_json, inner_json, der_json, cocycle_json, images_json;
    std::string lhs_json, rhs_json, apply_text, json_out, suites_csv;
    int window = 10, cap = kDefaultPowerCap;
    int samples = 1000;
    uint64_t seed_flag = 0;
    bool seed_given = false;

    CLI::App* bracket_cmd = app.add_subcommand("bracket", "Lie bracket of two elements");
    bracket_cmd->add_option("lhs", lhs_text)->required();
    bracket_cmd->add_option("rhs", rhs_text)->required();
    bracket_cmd->add_option("--algebra", algebra_name, "w | d | d1 | hv (default hv)");

    CLI::App* product_cmd = app.add_subcommand("product", "associative operator product");
    product_cmd->add_option("lhs", lhs_text)->required();
    product_cmd->add_option("rhs", rhs_text)->required();
    product_cmd->add_option("--cap", cap, "operator power cap");

    CLI::App* apply_cmd = app.add_subcommand("apply", "apply a morphism to a D1 element");
    apply_cmd->add_option("element", elem_text)->required();
    apply_cmd->add_option("--theta", theta_json);
    apply_cmd->add_option("--inner", inner_json);
    apply_cmd->add_option("--der", der_json);

    // ---- cocycle ------------------------------------------------------------
    CLI::App* cocycle_cmd = app.add_subcommand("cocycle", "2-cocycle operations");
    cocycle_cmd->require_subcommand(1);
    CLI::App* co_eval = cocycle_cmd->add_subcommand("eval", "evaluate on a pair");
    co_eval->add_option("--cocycle", cocycle_json)->required();
    co_eval->add_option("u", lhs_text)->required();
    co_eval->add_option("v", rhs_text)->required();
    CLI::App* co_verify = cocycle_cmd->add_subcommand("verify", "antisymmetry + cocycle identity");
    co_verify->add_option("--cocycle", cocycle_json)->required();
    co_verify->add_option("--samples", samples);
    co_verify->add_option("--seed", seed_flag);
    CLI::App* co_extract = cocycle_cmd->add_subcommand("extract", "cohomology class (a, b, c)");
    co_extract->add_option("--cocycle", cocycle_json)->required();
    CLI::App* co_oracle = cocycle_cmd->add_subcommand("oracle", "functional-equation null space");
    std::string oracle_kind;
    co_oracle->add_option("kind", oracle_kind, "cubic | linear")->required();
    co_oracle->add_option("--window", window);

    // ---- der ---------------------------------------------------------------
    CLI::App* der_cmd = app.add_subcommand("der", "derivation operations");
    der_cmd->require_subcommand(1);
    CLI::App* der_apply = der_cmd->add_subcommand("apply", "apply to a D1 element");
    der_apply->add_option("--der", der_json)->required();
    der_apply->add_option("element", elem_text)->required();
    CLI::App* der_check = der_cmd->add_subcommand("check", "Leibniz property check");
    der_check->add_option("--der", der_json)->required();
    der_check->add_option("--samples", samples);
    der_check->add_option("--seed", seed_flag);
    CLI::App* der_decompose = der_cmd->add_subcommand("decompose", "degree-0 classification");
    der_decompose->add_option("--der", der_json)->required();
    CLI::App* der_lift = der_cmd->add_subcommand("lift", "lift to the central extension");
    der_lift->add_option("--der", der_json)->required();
    der_lift->add_option("--apply", apply_text, "HV element to apply the lift to");

    // ---- aut ---------------------------------------------------------------
    CLI::App* aut_cmd = app.add_subcommand("aut", "automorphism operations");
    aut_cmd->require_subcommand(1);
    CLI::App* aut_apply = aut_cmd->add_subcommand("apply", "apply eta o theta to a D1 element");
    aut_apply->add_option("--theta", theta_json);
    aut_apply->add_option("--inner", inner_json);
    aut_apply->add_option("element", elem_text)->required();
    CLI::App* aut_compose = aut_cmd->add_subcommand("compose", "compose two theta parameter sets");
    aut_compose->add_option("--lhs", lhs_json)->required();
    aut_compose->add_option("--rhs", rhs_json)->required();
    CLI::App* aut_invert = aut_cmd->add_subcommand("invert", "invert theta parameters");
    aut_invert->add_option("--theta", theta_json)->required();
    CLI::App* aut_factor = aut_cmd->add_subcommand("factor", "normal form eta o theta from images");
    aut_factor->add_option("--theta", theta_json);
    aut_factor->add_option("--inner", inner_json);
    aut_factor->add_option("--images", images_json, "probe images {\"d\":..., \"L(1)\":..., ...}");
    CLI::App* aut_lift = aut_cmd->add_subcommand("lift", "lift to the central extension");
    aut_lift->add_option("--theta", theta_json);
    aut_lift->add_option("--inner", inner_json);
    aut_lift->add_option("--apply", apply_text, "HV element to apply the lift to");
    CLI::App* aut_laws = aut_cmd->add_subcommand("laws", "subgroup and semidirect structure checks");
    aut_laws->add_option("--samples", samples);
    aut_laws->add_option("--seed", seed_flag);

    // ---- verify ------------------------------------------------------------
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification suites");
    verify_cmd->add_option("--seed", seed_flag);
    verify_cmd->add_option("--json", json_out, "write the report JSON here");
    verify_cmd->add_option("--suites", suites_csv, "comma-separated suite list");

    for (CLI::App* sub : {co_verify, der_check, aut_laws, verify_cmd})
        sub->callback([&seed_given, sub] { seed_given = sub->count("--seed") > 0; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        common.load();
        const GroupInstance& g = common.cfg.group;

        if (bracket_cmd->parsed()) {
            AlgebraTag tag = algebra_tag_from_name(algebra_name);
            AlgebraElement u = parse_element(lhs_text, g, tag);
            AlgebraElement v = parse_element(rhs_text, g, tag);
            print_element(bracket(g, u, v, common.cfg.power_cap));
            return 0;
        }
        if (product_cmd->parsed()) {
            AlgebraElement u = parse_element(lhs_text, g, AlgebraTag::D);
            AlgebraElement v = parse_element(rhs_text, g, AlgebraTag::D);
            print_element(diffop_product(g, u, v, cap));
            return 0;
        }
        if (apply_cmd->parsed()) {
            LinearMap pi = morphism_from_flags(g, theta_json, inner_json, der_json);
            print_element(pi(parse_element(elem_text, g, AlgebraTag::D1)));
            return 0;
        }

        if (co_eval->parsed()) {
            Cocycle alpha = cocycle_from_json(g, parse_json_arg(cocycle_json, "cocycle"));
            print_scalar(alpha.eval(parse_element(lhs_text, g, AlgebraTag::D1),
                                    parse_element(rhs_text, g, AlgebraTag::D1)));
            return 0;
        }
        if (co_verify->parsed()) {
            Cocycle alpha = cocycle_from_json(g, parse_json_arg(cocycle_json, "cocycle"));
            uint64_t seed = seed_given ? seed_flag : common.cfg.seed;
            CocycleCheckReport r = verify_cocycle(g, alpha.as_map(), samples, seed);
            Json j;
            j["status"] = r.pass() ? "pass" : "fail";
            j["samples"] = r.samples;
            j["antisymmetry"] = r.antisymmetry_ok;
            j["identity"] = r.identity_ok;
            if (r.witness)
                j["witness"] = Json::array({(*r.witness)[0], (*r.witness)[1], (*r.witness)[2]});
            std::cout << j.dump(2) << "\n";
            return r.pass() ? 0 : 1;
        }
        if (co_extract->parsed()) {
            Cocycle alpha = cocycle_from_json(g, parse_json_arg(cocycle_json, "cocycle"));
            CohomologyClass cls = extract_class(g, alpha.as_map());
            Json j;
            j["a"] = cls.a.to_string();
            j["b"] = cls.b.to_string();
            j["c"] = cls.c.to_string();
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (co_oracle->parsed()) {
            FeOracleResult res;
            if (oracle_kind == "cubic") {
                res = solve_cubic_fe(window);
            } else if (oracle_kind == "linear") {
                GroupInstance zline = g.kind() == GroupKind::Z
                                          ? g
                                          : GroupInstance(GroupKind::Z, {Scalar(1)}, 0);
                res = solve_linear_fe(window, zline);
            } else {
                throw error("oracle kind must be cubic or linear");
            }
            Json j;
            j["dimension"] = res.dimension;
            Json basis = Json::array();
            for (const auto& vec : res.basis) {
                Json row = Json::array();
                for (const Scalar& s : vec) row.push_back(s.to_string());
                basis.push_back(std::move(row));
            }
            j["basis"] = basis;
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (der_apply->parsed()) {
            Derivation d = derivation_from_json(g, parse_json_arg(der_json, "derivation"));
            print_element(d.apply(g, parse_element(elem_text, g, AlgebraTag::D1)));
            return 0;
        }
        if (der_check->parsed()) {
            Derivation d = derivation_from_json(g, parse_json_arg(der_json, "derivation"));
            uint64_t seed = seed_given ? seed_flag : common.cfg.seed;
            Rng rng(seed);
            Json j;
            j["status"] = "pass";
            for (int i = 0; i < samples; ++i) {
                AlgebraElement u = random_element(g, AlgebraTag::D1, rng);
                AlgebraElement v = random_element(g, AlgebraTag::D1, rng);
                AlgebraElement defect = leibniz_defect(g, d, u, v);
                if (!defect.is_zero()) {
                    j["status"] = "fail";
                    j["witness"] = Json::array({u.to_text(), v.to_text()});
                    j["defect"] = defect.to_text();
                    j["index"] = i;
                    break;
                }
            }
            j["samples"] = samples;
            j["seed"] = seed;
            std::cout << j.dump(2) << "\n";
            return j["status"] == "pass" ? 0 : 1;
        }
        if (der_decompose->parsed()) {
            Derivation d = derivation_from_json(g, parse_json_arg(der_json, "derivation"));
            Degree0Decomposition dec = decompose_degree0(g, d);
            Json j;
            Json mu = Json::array();
            for (const Scalar& s : dec.mu.generator_images()) mu.push_back(s.to_string());
            j["mu"] = mu;
            j["a"] = dec.a.to_string();
            j["b"] = dec.b.to_string();
            j["c0"] = dec.c0.to_string();
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (der_lift->parsed()) {
            Derivation d = derivation_from_json(g, parse_json_arg(der_json, "derivation"));
            HvDerivation lift = lift_derivation_to_hv(g, d);
            Json j;
            j["C_L"] = lift.central_image(BasisSymbol::Kind::CL).to_text();
            j["C_I"] = lift.central_image(BasisSymbol::Kind::CI).to_text();
            j["C_LI"] = lift.central_image(BasisSymbol::Kind::CLI).to_text();
            if (!apply_text.empty())
                j["applied"] = lift.apply(parse_element(apply_text, g, AlgebraTag::HV)).to_text();
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (aut_apply->parsed()) {
            LinearMap pi = morphism_from_flags(g, theta_json, inner_json, "");
            print_element(pi(parse_element(elem_text, g, AlgebraTag::D1)));
            return 0;
        }
        if (aut_compose->parsed()) {
            ThetaAut t1 = theta_from_json(g, parse_json_arg(lhs_json, "lhs"));
            ThetaAut t2 = theta_from_json(g, parse_json_arg(rhs_json, "rhs"));
            std::cout << theta_to_json(compose_theta(g, t1, t2)).dump(2) << "\n";
            return 0;
        }
        if (aut_invert->parsed()) {
            ThetaAut t = theta_from_json(g, parse_json_arg(theta_json, "theta"));
            std::cout << theta_to_json(invert_theta(g, t)).dump(2) << "\n";
            return 0;
        }
        if (aut_factor->parsed()) {
            AutProbeImages images;
            if (!images_json.empty()) {
                Json j = parse_json_arg(images_json, "images");
                for (const auto& [key, value] : j.items()) {
                    AlgebraElement img = parse_element(value.get<std::string>(), g, AlgebraTag::D1);
                    if (key == "d") {
                        images.partial = img;
                        continue;
                    }
                    AlgebraElement sym = parse_element(key, g, AlgebraTag::D1);
                    if (sym.support_size() != 1)
                        throw error("image keys are basis symbols, got '" + key + "'");
                    const BasisSymbol& s = sym.terms().begin()->first;
                    if (s.is_I() && s.x.is_zero()) images.i_zero = img;
                    else if (s.is_I()) images.I[s.x] = img;
                    else if (s.x.is_zero()) images.partial = img;
                    else images.L[s.x] = img;
                }
            } else {
                LinearMap pi = morphism_from_flags(g, theta_json, inner_json, "");
                images = make_probe_images(g, pi);
            }
            AutWord word = factor_automorphism(g, images);
            Json j;
            Json factors = Json::array();
            for (const auto& [k, z] : word.inner.factors)
                factors.push_back(Json::array({k.to_string(), z.to_string()}));
            j["inner"] = Json{{"factors", factors}};
            j["theta"] = theta_to_json(word.theta);
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (aut_lift->parsed()) {
            LinearMap pi = morphism_from_flags(g, theta_json, inner_json, "");
            HvAutomorphism lift = lift_automorphism_to_hv(g, pi);
            Json j;
            j["C_L"] = lift.central_image(BasisSymbol::Kind::CL).to_text();
            j["C_I"] = lift.central_image(BasisSymbol::Kind::CI).to_text();
            j["C_LI"] = lift.central_image(BasisSymbol::Kind::CLI).to_text();
            if (!apply_text.empty())
                j["applied"] = lift.apply(parse_element(apply_text, g, AlgebraTag::HV)).to_text();
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (aut_laws->parsed()) {
            uint64_t seed = seed_given ? seed_flag : common.cfg.seed;
            GroupLawsReport r = verify_group_laws(g, samples, seed);
            Json j;
            j["status"] = r.pass() ? "pass" : "fail";
            j["samples"] = r.samples;
            if (!r.pass()) j["failure"] = r.failure;
            std::cout << j.dump(2) << "\n";
            return r.pass() ? 0 : 1;
        }

        if (verify_cmd->parsed()) {
            RunConfig cfg = common.cfg;
            if (seed_given) cfg.seed = seed_flag;
            if (!suites_csv.empty()) {
                std::vector<std::string> names;
                size_t start = 0;
                while (start <= suites_csv.size()) {
                    size_t comma = suites_csv.find(',', start);
                    if (comma == std::string::npos) comma = suites_csv.size();
                    if (comma > start) names.push_back(suites_csv.substr(start, comma - start));
                    start = comma + 1;
                }
                cfg.suites = names;
            }
            std::string out_path = json_out.empty() ? cfg.output_path : json_out;
            return emit_report(run_suites(cfg), out_path);
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
