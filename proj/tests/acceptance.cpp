// Acceptance suite: runs every contract criterion at its stated sample count
// and tolerance (exact equality throughout) and prints one pass/fail line per
// criterion. Exit status 0 only when all criteria hold.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <vector>

#include "hv/sampling.hpp"
#include "hv/suites.hpp"

using namespace hv;

namespace {

using Clock = std::chrono::steady_clock;

GroupInstance z_group() { return GroupInstance(GroupKind::Z, {Scalar(1)}, 0); }
GroupInstance z2_sqrt2() { return GroupInstance(GroupKind::Z2, {Scalar(1), Scalar::sqrt_of(2)}, 2); }

struct Criterion {
    int number;
    std::string label;
    bool (*run)(std::string& detail);
};

LinearFunctional random_functional(const GroupInstance& g, Rng& rng) {
    LinearFunctional f;
    int support = static_cast<int>(rng.below(4)) + 1;
    for (int i = 0; i < support; ++i)
        f.set(random_symbol(g, AlgebraTag::D1, rng, 3), random_coefficient(rng));
    return f;
}

AdditiveMap random_additive(const GroupInstance& g, Rng& rng) {
    std::vector<Scalar> images;
    for (int i = 0; i < g.rank(); ++i) images.push_back(random_coefficient(rng));
    return AdditiveMap(g, std::move(images));
}

// 1. hv Jacobi: 1000 triples on Z, 500 on Z2 over Q(sqrt 2), exact, < 10 s.
bool criterion1(std::string& detail) {
    auto start = Clock::now();
    struct Case {
        GroupInstance g;
        int triples;
    };
    std::vector<Case> cases = {{z_group(), 1000}, {z2_sqrt2(), 500}};
    Rng rng(1001);
    for (auto& [g, triples] : cases) {
        for (int i = 0; i < triples; ++i) {
            AlgebraElement u = random_element(g, AlgebraTag::HV, rng);
            AlgebraElement v = random_element(g, AlgebraTag::HV, rng);
            AlgebraElement w = random_element(g, AlgebraTag::HV, rng);
            if (!jacobi_defect(g, u, v, w).is_zero()) {
                detail = "nonzero Jacobi defect at triple " + std::to_string(i);
                return false;
            }
        }
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs >= 10.0) {
        detail = "took " + std::to_string(secs) + " s (budget 10 s)";
        return false;
    }
    return true;
}

// 2. Witt/commutator embedding on 500 pairs; projection homomorphism on 1000.
bool criterion2(std::string& detail) {
    GroupInstance g = z2_sqrt2();
    Rng rng(1002);
    for (int i = 0; i < 500; ++i) {
        AlgebraElement u = random_element(g, AlgebraTag::W, rng);
        AlgebraElement v = random_element(g, AlgebraTag::W, rng);
        if (!(embed_in_d(witt_bracket(g, u, v)) == commutator(g, embed_in_d(u), embed_in_d(v)))) {
            detail = "embedding mismatch at pair " + std::to_string(i);
            return false;
        }
    }
    for (int i = 0; i < 1000; ++i) {
        AlgebraElement u = random_element(g, AlgebraTag::HV, rng);
        AlgebraElement v = random_element(g, AlgebraTag::HV, rng);
        if (!(project_to_d1(hv_bracket(g, u, v)) ==
              commutator(g, project_to_d1(u), project_to_d1(v)))) {
            detail = "projection defect at pair " + std::to_string(i);
            return false;
        }
    }
    return true;
}

// 3. psi, psi1, psi2, psi3 verified on 1000 triples; psi3' = coboundary.
bool criterion3(std::string& detail) {
    GroupInstance g = z_group();
    struct Named {
        const char* name;
        BilinearMap map;
    };
    std::vector<Named> maps = {{"psi", witt_cubic_cocycle(g)},
                               {"psi1", Cocycle::psi1(g).as_map()},
                               {"psi2", Cocycle::psi2(g).as_map()},
                               {"psi3", Cocycle::psi3(g).as_map()}};
    for (size_t m = 0; m < maps.size(); ++m) {
        CocycleCheckReport r = verify_cocycle(g, maps[m].map, 1000, 1003 + m);
        if (!r.pass()) {
            detail = std::string(maps[m].name) + " failed verification";
            return false;
        }
    }
    LinearFunctional g0;
    g0.set(BasisSymbol::I(g.zero()), Scalar(-1));
    Cocycle cb = coboundary(g, g0);
    Cocycle p3 = Cocycle::psi3prime(g);
    Rng rng(1033);
    for (int i = 0; i < 1000; ++i) {
        AlgebraElement u = random_element(g, AlgebraTag::D1, rng);
        AlgebraElement v = random_element(g, AlgebraTag::D1, rng);
        if (!(cb.eval(u, v) == p3.eval(u, v))) {
            detail = "psi3' != coboundary at pair " + std::to_string(i);
            return false;
        }
    }
    return true;
}

// 4. extract_class round-trips 100 classes; 100 coboundaries extract to zero.
bool criterion4(std::string& detail) {
    GroupInstance g = z_group();
    Rng rng(1004);
    for (int i = 0; i < 100; ++i) {
        Scalar a = random_coefficient(rng), b = random_coefficient(rng), c = random_coefficient(rng);
        Cocycle alpha(g, a, b, c, random_coefficient(rng), random_functional(g, rng));
        CohomologyClass cls = extract_class(g, alpha.as_map());
        if (!(cls.a == a && cls.b == b && cls.c == c)) {
            detail = "round-trip failed at trial " + std::to_string(i);
            return false;
        }
        CohomologyClass zero = extract_class(g, coboundary(g, random_functional(g, rng)).as_map());
        if (!(zero.a.is_zero() && zero.b.is_zero() && zero.c.is_zero())) {
            detail = "coboundary extracted nonzero at trial " + std::to_string(i);
            return false;
        }
    }
    return true;
}

// 5. Functional-equation oracles at window 10, dimension exactly 2, < 1 s each.
bool criterion5(std::string& detail) {
    auto start = Clock::now();
    FeOracleResult cubic = solve_cubic_fe(10);
    double cubic_secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::vector<Scalar> lin, quad;
    for (long long k = -10; k <= 10; ++k) {
        lin.push_back(Scalar(k));
        quad.push_back(Scalar(k * k));
    }
    if (cubic.dimension != 2 || !in_span(cubic.basis, lin) || !in_span(cubic.basis, quad)) {
        detail = "cubic oracle dimension " + std::to_string(cubic.dimension);
        return false;
    }
    GroupInstance g = z_group();
    start = Clock::now();
    FeOracleResult linear = solve_linear_fe(10, g);
    double linear_secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::vector<Scalar> pairing, ones;
    for (long long k = -10; k <= 10; ++k) {
        pairing.push_back(g.pairing_eval(g.element({Rational(k)})));
        ones.push_back(Scalar(1));
    }
    if (linear.dimension != 2 || !in_span(linear.basis, pairing) || !in_span(linear.basis, ones)) {
        detail = "linear oracle dimension " + std::to_string(linear.dimension);
        return false;
    }
    if (cubic_secs >= 1.0 || linear_secs >= 1.0) {
        detail = "oracle exceeded 1 s budget";
        return false;
    }
    return true;
}

// 6. Leibniz for sigma1..3 and xi on 1000 pairs each; 100 decompose round-trips.
bool criterion6(std::string& detail) {
    GroupInstance g = z2_sqrt2();
    Rng rng(1006);
    std::vector<std::pair<std::string, Derivation>> families = {
        {"sigma1", Derivation::sigma(1)},
        {"sigma2", Derivation::sigma(2)},
        {"sigma3", Derivation::sigma(3)},
        {"xi", Derivation::xi(random_additive(g, rng))}};
    for (const auto& [name, d] : families) {
        for (int i = 0; i < 1000; ++i) {
            AlgebraElement u = random_element(g, AlgebraTag::D1, rng);
            AlgebraElement v = random_element(g, AlgebraTag::D1, rng);
            if (!leibniz_defect(g, d, u, v).is_zero()) {
                detail = "Leibniz defect for " + name + " at pair " + std::to_string(i);
                return false;
            }
        }
    }
    // ad(d) decomposes with mu = pairing
    GroupInstance z = z_group();
    Degree0Decomposition add = decompose_degree0(
        z, Derivation::inner(AlgebraElement::single(AlgebraTag::D1, BasisSymbol::L(z.zero()))));
    if (!(add.mu == AdditiveMap::pairing_multiple(z, Scalar(1)) && add.a.is_zero() &&
          add.b.is_zero() && add.c0.is_zero())) {
        detail = "ad(d) did not decompose to mu = pairing";
        return false;
    }
    for (int i = 0; i < 100; ++i) {
        AdditiveMap mu = random_additive(g, rng);
        Scalar a = random_coefficient(rng), b = random_coefficient(rng), c0 = random_coefficient(rng);
        Degree0Decomposition dec = decompose_degree0(g, reconstruct_degree0(g, {mu, a, b, c0}));
        if (!(dec.mu == mu && dec.a == a && dec.b == b && dec.c0 == c0)) {
            detail = "decompose round-trip failed at trial " + std::to_string(i);
            return false;
        }
    }
    return true;
}

// 7. Automorphism suite: composition, inverse, factorization, defects, ad^2.
bool criterion7(std::string& detail) {
    GroupInstance g = z_group();
    Rng rng(1007);
    for (int i = 0; i < 200; ++i) {
        ThetaAut t1 = random_theta(g, rng), t2 = random_theta(g, rng);
        ThetaAut both = compose_theta(g, t1, t2);
        for (int k = 0; k < 50; ++k) {
            AlgebraElement u = random_element(g, AlgebraTag::D1, rng);
            if (!(both.apply(g, u) == t1.apply(g, t2.apply(g, u)))) {
                detail = "composition mismatch at pair " + std::to_string(i);
                return false;
            }
        }
    }
    for (int i = 0; i < 100; ++i) {
        ThetaAut t = random_theta(g, rng);
        ThetaAut inv = invert_theta(g, t);
        AlgebraElement u = random_element(g, AlgebraTag::D1, rng);
        if (!compose_theta(g, t, inv).is_identity_params(g) || !(inv.apply(g, t.apply(g, u)) == u)) {
            detail = "inverse law failed at trial " + std::to_string(i);
            return false;
        }
    }
    for (int i = 0; i < 100; ++i) {
        AutWord word{random_inner(g, rng), random_theta(g, rng)};
        AutWord got = factor_automorphism(g, make_probe_images(g, word.as_map(g)));
        bool ok = got.theta == word.theta;
        for (int k = 0; ok && k < 10; ++k) {
            AlgebraElement u = random_element(g, AlgebraTag::D1, rng);
            ok = got.apply(g, u) == word.apply(g, u);
        }
        if (!ok) {
            detail = "factorization round-trip failed at trial " + std::to_string(i);
            return false;
        }
    }
    for (int i = 0; i < 1000; ++i) {
        LinearMap pi = (i % 2) ? random_theta(g, rng).as_map(g)
                               : LinearMap([inner = random_inner(g, rng), g](const AlgebraElement& u) {
                                     return inner.apply(g, u);
                                 });
        AlgebraElement u = random_element(g, AlgebraTag::D1, rng);
        AlgebraElement v = random_element(g, AlgebraTag::D1, rng);
        if (!homomorphism_defect(g, pi, u, v).is_zero()) {
            detail = "homomorphism defect at pair " + std::to_string(i);
            return false;
        }
    }
    for (const BasisSymbol& probe : default_probe_symbols(g)) {
        AlgebraElement tz =
            AlgebraElement::single(AlgebraTag::D1, BasisSymbol::I(g.probe_base()));
        AlgebraElement u = AlgebraElement::single(AlgebraTag::D1, probe);
        if (!commutator(g, tz, commutator(g, tz, u)).is_zero()) {
            detail = "ad(t^z)^2 nonzero at probe " + probe.to_string(AlgebraTag::D1);
            return false;
        }
    }
    return true;
}

// 8. Lifts: 500 pairs each with central probes; composition compatibility.
bool criterion8(std::string& detail) {
    GroupInstance g = z_group();
    Rng rng(1008);
    std::vector<AlgebraElement> central = {
        AlgebraElement::single(AlgebraTag::HV, BasisSymbol::C_L()),
        AlgebraElement::single(AlgebraTag::HV, BasisSymbol::C_I()),
        AlgebraElement::single(AlgebraTag::HV, BasisSymbol::C_LI())};

    std::vector<Derivation> ds = {Derivation::sigma(1), Derivation::sigma(2), Derivation::sigma(3),
                                  Derivation::xi(random_additive(g, rng)),
                                  Derivation::inner(random_element(g, AlgebraTag::D1, rng, 3, 3))};
    int per = 500 / static_cast<int>(ds.size());
    for (const Derivation& d : ds) {
        HvDerivation lift = lift_derivation_to_hv(g, d);
        for (int i = 0; i < per; ++i) {
            AlgebraElement u = random_element(g, AlgebraTag::HV, rng);
            AlgebraElement v = (i % 4 == 0) ? central[rng.below(3)]
                                            : random_element(g, AlgebraTag::HV, rng);
            AlgebraElement defect = lift.apply(hv_bracket(g, u, v)) -
                                    hv_bracket(g, lift.apply(u), v) -
                                    hv_bracket(g, u, lift.apply(v));
            if (!defect.is_zero()) {
                detail = "derivation lift Leibniz defect at pair " + std::to_string(i);
                return false;
            }
        }
    }
    for (int rep = 0; rep < 5; ++rep) {
        AutWord word{random_inner(g, rng), random_theta(g, rng)};
        HvAutomorphism lift = lift_automorphism_to_hv(g, word);
        for (int i = 0; i < 100; ++i) {
            AlgebraElement u = random_element(g, AlgebraTag::HV, rng);
            AlgebraElement v = (i % 4 == 0) ? central[rng.below(3)]
                                            : random_element(g, AlgebraTag::HV, rng);
            if (!(lift.apply(hv_bracket(g, u, v)) ==
                  hv_bracket(g, lift.apply(u), lift.apply(v)))) {
                detail = "automorphism lift defect at pair " + std::to_string(i);
                return false;
            }
        }
    }
    for (int i = 0; i < 10; ++i) {
        ThetaAut t1 = random_theta(g, rng), t2 = random_theta(g, rng);
        HvAutomorphism both = lift_automorphism_to_hv(g, compose_theta(g, t1, t2));
        HvAutomorphism l1 = lift_automorphism_to_hv(g, t1);
        HvAutomorphism l2 = lift_automorphism_to_hv(g, t2);
        std::vector<AlgebraElement> probes = central;
        for (int k = 0; k < 5; ++k) probes.push_back(random_element(g, AlgebraTag::HV, rng));
        for (const AlgebraElement& u : probes) {
            if (!(both.apply(u) == l1.apply(l2.apply(u)))) {
                detail = "lift of composition mismatch at trial " + std::to_string(i);
                return false;
            }
        }
    }
    return true;
}

// 9. All five group-law checks on 200 tuples per slice.
bool criterion9(std::string& detail) {
    GroupLawsReport r = verify_group_laws(z_group(), 200, 1009);
    if (!r.pass()) {
        detail = r.failure;
        return false;
    }
    return true;
}

// 10. Default `hv verify` exits 0 under 60 s; 1000 parse/print round-trips.
bool criterion10(std::string& detail) {
#ifdef HV_CLI_PATH
    std::string cli = HV_CLI_PATH;
#else
    std::string cli = "./hv";
#endif
    if (const char* env = std::getenv("HV_CLI")) cli = env;
    auto start = Clock::now();
    int status = std::system((cli + " verify > /dev/null 2>&1").c_str());
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    int exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    if (exit_code != 0) {
        detail = "hv verify exited " + std::to_string(exit_code);
        return false;
    }
    if (secs >= 60.0) {
        detail = "hv verify took " + std::to_string(secs) + " s (budget 60 s)";
        return false;
    }
    Rng rng(1010);
    GroupInstance z = z_group();
    GroupInstance z2 = z2_sqrt2();
    for (int i = 0; i < 1000; ++i) {
        const GroupInstance& g = (i % 2) ? z2 : z;
        AlgebraTag tag = (i % 3 == 0) ? AlgebraTag::D : (i % 3 == 1) ? AlgebraTag::D1 : AlgebraTag::HV;
        AlgebraElement e = random_element(g, tag, rng);
        if (!(parse_element(e.to_text(), g, tag) == e)) {
            detail = "round-trip failed for '" + e.to_text() + "'";
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "hv Jacobi identity, Z x1000 and Z2(sqrt2) x500, exact, <10s", criterion1},
        {2, "Witt/commutator embedding x500; quotient homomorphism x1000", criterion2},
        {3, "cocycle checks psi,psi1,psi2,psi3 x1000; psi3' = coboundary x1000", criterion3},
        {4, "class extraction round-trip x100; coboundaries vanish x100", criterion4},
        {5, "functional-equation oracles: dim 2, bases {k,k^2} and {d(x),1}, <1s", criterion5},
        {6, "Leibniz sigma1-3, xi x1000 each; degree-0 decomposition x100", criterion6},
        {7, "composition x200x50, inverse x100, factorization x100, defects x1000", criterion7},
        {8, "lifted derivations/automorphisms x500 each incl. central probes", criterion8},
        {9, "subgroup and semidirect-product laws x200 per slice", criterion9},
        {10, "CLI verify exits 0 in <60s; parse/print round-trip x1000", criterion10},
    };

    bool all_ok = true;
    for (const Criterion& c : criteria) {
        auto start = Clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        std::cout << "[" << (c.number < 10 ? " " : "") << c.number << "] "
                  << (ok ? "PASS" : "FAIL") << "  " << c.label;
        if (!ok && !detail.empty()) std::cout << "  -- " << detail;
        char buf[32];
        std::snprintf(buf, sizeof(buf), "  (%.2fs)", secs);
        std::cout << buf << "\n";
        all_ok = all_ok && ok;
    }
    std::cout << (all_ok ? "acceptance: PASS" : "acceptance: FAIL") << "\n";
    return all_ok ? 0 : 1;
}
