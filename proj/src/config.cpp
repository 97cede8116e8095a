#include "hv/config.hpp"

#include <cstdlib>
#include <fstream>

namespace hv {

Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) return parse_scalar_text(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long long>());
    if (j.is_array() && j.size() == 2) {
        // [rational, sqrt coefficient]; d comes from the field block and is
        // attached by group_from_json when nonzero
        throw error("two-part scalars need a field context; use \"p/q+r/s*sqrt(d)\"");
    }
    throw error("bad scalar value: " + j.dump());
}

namespace {

Scalar pairing_entry(const Json& j, long long d) {
    if (j.is_array()) {
        if (j.size() != 2) throw error("pairing entries are \"p/q\" or [rational, sqrt part]");
        Rational rat = Rational::from_string(j[0].get<std::string>());
        Rational irr = Rational::from_string(j[1].get<std::string>());
        if (!irr.is_zero() && d == 0)
            throw error("pairing entry uses sqrt(d) but the field is rational");
        return irr.is_zero() ? Scalar(rat) : Scalar(rat, irr, d);
    }
    return scalar_from_json(j);
}

}  // namespace

GroupInstance group_from_json(const Json& j) {
    GroupKind kind = group_kind_from_name(j.value("group", "Z"));
    long long d = 0;
    if (j.contains("field")) {
        const Json& f = j.at("field");
        std::string mode = f.value("mode", "rational");
        if (mode == "quadratic") {
            d = f.at("d").get<long long>();
        } else if (mode != "rational") {
            throw error("field mode must be rational or quadratic");
        }
    }
    std::vector<Scalar> pairing;
    if (j.contains("pairing")) {
        const Json& p = j.at("pairing");
        if (p.is_array()) {
            for (const Json& e : p) pairing.push_back(pairing_entry(e, d));
        } else {
            pairing.push_back(pairing_entry(p, d));
        }
    } else {
        pairing.assign(group_rank(kind), Scalar(1));
    }
    return GroupInstance(kind, std::move(pairing), d);
}

RunConfig RunConfig::defaults() {
    return RunConfig{GroupInstance(GroupKind::Z, {Scalar(1)}, 0), 42, 1000, 4,
                     kDefaultPowerCap, std::nullopt, "", {}};
}

RunConfig RunConfig::from_json(const Json& j) {
    RunConfig cfg = defaults();
    if (j.contains("group") || j.contains("pairing") || j.contains("field"))
        cfg.group = group_from_json(j);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.samples = j.value("samples", cfg.samples);
    if (cfg.samples < 1) throw error("samples must be positive");
    cfg.probe_radius = j.value("probe_radius", cfg.probe_radius);
    cfg.power_cap = j.value("power_cap", cfg.power_cap);
    if (j.contains("suites")) cfg.suites = j.at("suites").get<std::vector<std::string>>();
    cfg.output_path = j.value("output", cfg.output_path);
    if (j.contains("corrupt")) cfg.corrupt = j.at("corrupt").get<std::vector<std::string>>();
    return cfg;
}

RunConfig RunConfig::load(const std::string& path) {
    std::string source = path;
    if (source.empty()) {
        const char* env = std::getenv("HV_CONFIG");
        if (env != nullptr) source = env;
    }
    if (source.empty()) return defaults();
    std::ifstream in(source);
    if (!in) throw error("cannot open config file '" + source + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw error("config parse failure in '" + source + "': " + e.what());
    }
    return from_json(j);
}

Json RunConfig::group_json() const {
    Json out;
    out["group"] = group_kind_name(group.kind());
    Json pairing = Json::array();
    for (const Scalar& v : group.pairing()) pairing.push_back(v.to_string());
    out["pairing"] = pairing;
    if (group.quadratic_mode()) {
        out["field"] = Json{{"mode", "quadratic"}, {"d", group.sqrt_d()}};
    } else {
        out["field"] = Json{{"mode", "rational"}};
    }
    return out;
}

ThetaAut theta_from_json(const GroupInstance& g, const Json& j) {
    Character chi = Character::trivial(g);
    if (j.contains("chi")) {
        std::vector<Scalar> images;
        for (const Json& e : j.at("chi")) images.push_back(scalar_from_json(e));
        chi = Character(g, std::move(images));
    }
    Scalar eps = j.contains("eps") ? scalar_from_json(j.at("eps")) : Scalar(1);
    Scalar a = j.contains("a") ? scalar_from_json(j.at("a")) : Scalar(0);
    Scalar b = j.contains("b") ? scalar_from_json(j.at("b")) : Scalar(0);
    Scalar c = j.contains("c") ? scalar_from_json(j.at("c")) : Scalar(1);
    return ThetaAut(g, std::move(chi), std::move(eps), std::move(a), std::move(b), std::move(c));
}

Json theta_to_json(const ThetaAut& t) {
    Json out;
    Json chi = Json::array();
    for (const Scalar& v : t.chi().generator_images()) chi.push_back(v.to_string());
    out["chi"] = chi;
    out["eps"] = t.eps().to_string();
    out["a"] = t.a().to_string();
    out["b"] = t.b().to_string();
    out["c"] = t.c().to_string();
    return out;
}

InnerAut inner_from_json(const GroupInstance& g, const Json& j) {
    std::vector<std::pair<Scalar, GroupElement>> factors;
    for (const Json& f : j.at("factors")) {
        if (!f.is_array() || f.size() != 2) throw error("inner factors are [k, z] pairs");
        Scalar k = scalar_from_json(f[0]);
        GroupElement z = f[1].is_string() ? parse_coords(f[1].get<std::string>(), g)
                                          : [&] {
                                                std::vector<Rational> coords;
                                                for (const Json& c : f[1])
                                                    coords.push_back(
                                                        Rational::from_string(c.get<std::string>()));
                                                return g.element(std::move(coords));
                                            }();
        factors.emplace_back(std::move(k), std::move(z));
    }
    return InnerAut(g, std::move(factors));
}

Derivation derivation_from_json(const GroupInstance& g, const Json& j) {
    if (j.is_array()) {
        Derivation sum;
        for (const Json& part : j) sum = sum + derivation_from_json(g, part);
        return sum;
    }
    Scalar scale = j.contains("scale") ? scalar_from_json(j.at("scale")) : Scalar(1);
    Derivation d;
    if (j.contains("sigma")) {
        d = Derivation::sigma(j.at("sigma").get<int>());
    } else if (j.contains("xi")) {
        std::vector<Scalar> images;
        for (const Json& e : j.at("xi").at("mu")) images.push_back(scalar_from_json(e));
        d = Derivation::xi(AdditiveMap(g, std::move(images)));
    } else if (j.contains("ad")) {
        d = Derivation::inner(parse_element(j.at("ad").get<std::string>(), g, AlgebraTag::D1));
    } else {
        throw error("derivation config needs sigma, xi or ad");
    }
    return scale * d;
}

Cocycle cocycle_from_json(const GroupInstance& g, const Json& j) {
    Scalar a = j.contains("a") ? scalar_from_json(j.at("a")) : Scalar(0);
    Scalar b = j.contains("b") ? scalar_from_json(j.at("b")) : Scalar(0);
    Scalar c = j.contains("c") ? scalar_from_json(j.at("c")) : Scalar(0);
    Scalar cprime = j.contains("cprime") ? scalar_from_json(j.at("cprime")) : Scalar(0);
    LinearFunctional boundary;
    if (j.contains("boundary")) {
        for (const auto& [key, value] : j.at("boundary").items()) {
            AlgebraElement sym = parse_element(key, g, AlgebraTag::D1);
            if (sym.support_size() != 1 || !sym.terms().begin()->second.is_one())
                throw error("boundary keys must be single basis symbols, got '" + key + "'");
            boundary.set(sym.terms().begin()->first, scalar_from_json(value));
        }
    }
    return Cocycle(g, std::move(a), std::move(b), std::move(c), std::move(cprime),
                   std::move(boundary));
}

Json element_to_json(const AlgebraElement& u) {
    Json out;
    out["algebra"] = algebra_tag_name(u.tag());
    out["text"] = u.to_text();
    Json terms = Json::array();
    for (const auto& [sym, coeff] : u.terms())
        terms.push_back(Json::array({sym.to_string(u.tag()), coeff.to_string()}));
    out["terms"] = terms;
    return out;
}

}  // namespace hv
