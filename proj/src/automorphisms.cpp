#include "hv/automorphisms.hpp"

#include "hv/sampling.hpp"

namespace hv {

ThetaAut::ThetaAut(const GroupInstance& g, Character chi, Scalar eps, Scalar a, Scalar b, Scalar c)
    : chi_(std::move(chi)), eps_(std::move(eps)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (!g.epsilon_in_E(eps_)) throw error("eps " + eps_.to_string() + " is not in E");
    if (c_.is_zero()) throw error("theta requires c != 0");
}

ThetaAut ThetaAut::identity(const GroupInstance& g) {
    return ThetaAut(g, Character::trivial(g), Scalar(1), Scalar(0), Scalar(0), Scalar(1));
}

bool ThetaAut::is_identity_params(const GroupInstance& g) const {
    return chi_ == Character::trivial(g) && eps_.is_one() && a_.is_zero() && b_.is_zero() && c_.is_one();
}

AlgebraElement ThetaAut::apply(const GroupInstance& g, const AlgebraElement& u) const {
    if (u.tag() != AlgebraTag::D1) throw error("theta acts on D1 elements");
    AlgebraElement out(AlgebraTag::D1);
    Scalar eps_inv = eps_.inverse();
    for (const auto& [sym, coeff] : u.terms()) {
        Scalar chix = chi_.eval(g, sym.x);
        GroupElement target = g.scale(eps_, sym.x);
        if (sym.is_L()) {
            out.add_term(BasisSymbol::L(target), coeff * eps_inv * chix);
            out.add_term(BasisSymbol::I(target), coeff * (b_ * g.pairing_eval(sym.x) + a_) * chix);
        } else {
            out.add_term(BasisSymbol::I(target), coeff * c_ * chix);
        }
    }
    return out;
}

LinearMap ThetaAut::as_map(const GroupInstance& g) const {
    return [theta = *this, g](const AlgebraElement& u) { return theta.apply(g, u); };
}

InnerAut::InnerAut(const GroupInstance& g, std::vector<std::pair<Scalar, GroupElement>> fs)
    : factors(std::move(fs)) {
    for (const auto& [k, z] : factors) {
        (void)k;
        g.check_member(z);
        if (z.is_zero()) throw error("inner factors exp(k ad t^z) require z != 0");
    }
}

AlgebraElement InnerAut::apply(const GroupInstance& g, const AlgebraElement& u) const {
    if (u.tag() != AlgebraTag::D1) throw error("inner automorphisms act on D1 elements");
    AlgebraElement cur = u;
    for (const auto& [k, z] : factors) {
        AlgebraElement next(AlgebraTag::D1);
        Scalar kdz = k * g.pairing_eval(z);
        for (const auto& [sym, coeff] : cur.terms()) {
            next.add_term(sym, coeff);
            if (sym.is_L()) next.add_term(BasisSymbol::I(sym.x + z), -(coeff * kdz));
        }
        cur = std::move(next);
    }
    return cur;
}

InnerAut InnerAut::inverse() const {
    InnerAut out;
    out.factors.reserve(factors.size());
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
        out.factors.emplace_back(-it->first, it->second);
    return out;
}

ThetaAut compose_theta(const GroupInstance& g, const ThetaAut& t1, const ThetaAut& t2) {
    Character chi = t1.chi().precompose_scale(g, t2.eps()).times(g, t2.chi());
    Scalar eps = t1.eps() * t2.eps();
    Scalar a = t2.eps().inverse() * t1.a() + t1.c() * t2.a();
    Scalar b = t1.b() + t1.c() * t2.b();
    Scalar c = t1.c() * t2.c();
    return ThetaAut(g, std::move(chi), std::move(eps), std::move(a), std::move(b), std::move(c));
}

ThetaAut invert_theta(const GroupInstance& g, const ThetaAut& t) {
    Scalar eps_inv = t.eps().inverse();
    Scalar c_inv = t.c().inverse();
    Character chi = t.chi().inverse(g).precompose_scale(g, eps_inv);
    return ThetaAut(g, std::move(chi), eps_inv, -(t.eps() * t.a() * c_inv), -(t.b() * c_inv), c_inv);
}

AlgebraElement homomorphism_defect(const GroupInstance& g, const LinearMap& pi,
                                   const AlgebraElement& u, const AlgebraElement& v) {
    return pi(bracket(g, u, v)) - bracket(g, pi(u), pi(v));
}

AutProbeImages make_probe_images(const GroupInstance& g, const LinearMap& pi) {
    AutProbeImages images;
    images.partial = pi(AlgebraElement::single(AlgebraTag::D1, BasisSymbol::L(g.zero())));
    images.i_zero = pi(AlgebraElement::single(AlgebraTag::D1, BasisSymbol::I(g.zero())));
    for (int i = 0; i < g.rank(); ++i) {
        for (long long k : {1, 2}) {
            GroupElement x = g.scale(k, g.generator(i));
            images.L[x] = pi(AlgebraElement::single(AlgebraTag::D1, BasisSymbol::L(x)));
            images.I[x] = pi(AlgebraElement::single(AlgebraTag::D1, BasisSymbol::I(x)));
        }
    }
    return images;
}

namespace {

// L- and I-coefficients of an element expected to live on {L(y), I(y)}.
struct LineRead {
    Scalar on_L, on_I;
};

LineRead read_line(const AlgebraElement& u, const GroupElement& y, const std::string& what) {
    LineRead read{Scalar(0), Scalar(0)};
    for (const auto& [sym, c] : u.terms()) {
        if (sym.x != y)
            throw error(what + " is supported off the expected degree: " + u.to_text());
        if (sym.is_L())
            read.on_L = c;
        else
            read.on_I = c;
    }
    return read;
}

}  // namespace

AutWord factor_automorphism(const GroupInstance& g, const AutProbeImages& images) {
    // pi(d) = lambda0 d + sum gamma_w t^w; a t^z d tail with z != 0 cannot occur.
    Scalar lambda0(0);
    Scalar gamma0(0);
    std::vector<std::pair<GroupElement, Scalar>> tail;  // w != 0 entries
    for (const auto& [sym, coeff] : images.partial.terms()) {
        if (sym.is_L()) {
            if (!sym.x.is_zero())
                throw error("pi(d) has a t^z d term at z = " + sym.x.to_string() +
                            ": not an automorphism image");
            lambda0 = coeff;
        } else if (sym.x.is_zero()) {
            gamma0 = coeff;
        } else {
            tail.emplace_back(sym.x, coeff);
        }
    }
    if (lambda0.is_zero()) throw error("pi(d) has no d component");
    Scalar eps = lambda0.inverse();
    if (!g.epsilon_in_E(eps)) throw error("eps " + eps.to_string() + " is not in E");

    // eta = prod_w exp(-(eps gamma_w / d(w)) ad t^w), so that eta^-1 pi = theta.
    InnerAut eta;
    for (const auto& [w, gamma_w] : tail) {
        eta.factors.emplace_back(-(eps * gamma_w / g.pairing_eval(w)), w);
    }
    InnerAut eta_inv = eta.inverse();
    Scalar a = gamma0;

    // c from pi(I(0)) = theta(I(0)) = c I(0)
    LineRead c_read = read_line(images.i_zero, g.zero(), "pi(I(0))");
    if (!c_read.on_L.is_zero() || c_read.on_I.is_zero())
        throw error("pi(I(0)) must be a nonzero multiple of I(0), got " + images.i_zero.to_text());
    Scalar c = c_read.on_I;

    // chi and tau at every probe from the L images pushed through eta^-1
    std::map<GroupElement, Scalar> chi_at, tau_at;
    for (const auto& [x, image] : images.L) {
        GroupElement target = g.scale(eps, x);
        LineRead r = read_line(eta_inv.apply(g, image), target, "eta^-1 pi(L(" + x.to_string() + "))");
        Scalar chix = eps * r.on_L;
        if (chix.is_zero()) throw error("chi vanishes at " + x.to_string());
        chi_at[x] = chix;
        tau_at[x] = r.on_I;
    }
    // cross-check chi against the I images: pi(I(x)) = c chi(x) I(eps x)
    for (const auto& [x, image] : images.I) {
        GroupElement target = g.scale(eps, x);
        LineRead r = read_line(image, target, "pi(I(" + x.to_string() + "))");
        if (!r.on_L.is_zero() || !(r.on_I == c * chi_at.at(x)))
            throw error("I images disagree with chi at " + x.to_string());
    }

    // multiplicativity chi(2e) = chi(e)^2, then the character from generators
    std::vector<Scalar> chi_images;
    for (int i = 0; i < g.rank(); ++i) {
        GroupElement e = g.generator(i);
        const Scalar& at_e = chi_at.at(e);
        if (!(chi_at.at(g.scale(2, e)) == at_e * at_e))
            throw error("chi is not multiplicative along generator " + std::to_string(i));
        chi_images.push_back(at_e);
    }
    Character chi = g.kind() == GroupKind::Q ? Character::trivial(g) : Character(g, chi_images);

    // b from tau(x0) = (b d(x0) + a) chi(x0)
    GroupElement x0 = g.probe_base();
    Scalar d0 = g.pairing_eval(x0);
    Scalar b = (tau_at.at(x0) / chi_at.at(x0) - a) / d0;

    ThetaAut theta(g, chi, eps, a, b, c);
    AutWord word{std::move(eta), std::move(theta)};

    // final validation: eta o theta reproduces every probe image exactly
    auto check = [&](const BasisSymbol& sym, const AlgebraElement& want) {
        AlgebraElement got = word.apply(g, AlgebraElement::single(AlgebraTag::D1, sym));
        if (!(got == want))
            throw error("factorization mismatch at " + sym.to_string(AlgebraTag::D1) + ": got " +
                        got.to_text() + ", image " + want.to_text());
    };
    check(BasisSymbol::L(g.zero()), images.partial);
    check(BasisSymbol::I(g.zero()), images.i_zero);
    for (const auto& [x, image] : images.L) check(BasisSymbol::L(x), image);
    for (const auto& [x, image] : images.I) check(BasisSymbol::I(x), image);
    return word;
}

HvAutomorphism::HvAutomorphism(GroupInstance g, LinearMap base,
                               std::array<AlgebraElement, 3> central_images,
                               std::array<BilinearMap, 3> phi_forms)
    : group_(std::move(g)), base_(std::move(base)), central_images_(std::move(central_images)),
      phi_forms_(std::move(phi_forms)) {}

const AlgebraElement& HvAutomorphism::central_image(BasisSymbol::Kind k) const {
    switch (k) {
        case BasisSymbol::Kind::CL: return central_images_[0];
        case BasisSymbol::Kind::CI: return central_images_[1];
        case BasisSymbol::Kind::CLI: return central_images_[2];
        default: throw error("not a central symbol");
    }
}

namespace {

BasisSymbol central_symbol(int which) {
    switch (which) {
        case 0: return BasisSymbol::C_L();
        case 1: return BasisSymbol::C_I();
        default: return BasisSymbol::C_LI();
    }
}

}  // namespace

Scalar HvAutomorphism::phi_value(int which, const BasisSymbol& sym) const {
    const BilinearMap& form = phi_forms_[which];
    const GroupInstance& g = group_;
    GroupElement x0 = g.probe_base();
    Scalar d0 = g.pairing_eval(x0);
    if (sym.is_I()) {
        AlgebraElement u = AlgebraElement::single(AlgebraTag::D1, BasisSymbol::L(sym.x - x0));
        AlgebraElement v = AlgebraElement::single(AlgebraTag::D1, BasisSymbol::I(x0));
        return form(u, v) / d0;
    }
    if (sym.x.is_zero()) {
        AlgebraElement u = AlgebraElement::single(AlgebraTag::D1, BasisSymbol::L(-x0));
        AlgebraElement v = AlgebraElement::single(AlgebraTag::D1, BasisSymbol::L(x0));
        return form(u, v) / (Scalar(2) * d0);
    }
    AlgebraElement u = AlgebraElement::single(AlgebraTag::D1, BasisSymbol::L(g.zero()));
    AlgebraElement v = AlgebraElement::single(AlgebraTag::D1, BasisSymbol::L(sym.x));
    return form(u, v) / g.pairing_eval(sym.x);
}

AlgebraElement HvAutomorphism::apply(const AlgebraElement& u) const {
    if (u.tag() != AlgebraTag::HV) throw error("lifted automorphisms act on HV elements");
    AlgebraElement out(AlgebraTag::HV);
    for (const auto& [sym, c] : u.terms()) {
        if (sym.is_central()) {
            out += c * central_image(sym.kind);
            continue;
        }
        out += c * base_(AlgebraElement::single(AlgebraTag::D1, sym)).retag(AlgebraTag::HV);
        for (int k = 0; k < 3; ++k) out.add_term(central_symbol(k), c * phi_value(k, sym));
    }
    return out;
}

HvAutomorphism lift_automorphism_to_hv(const GroupInstance& g, const LinearMap& pi,
                                       int verify_samples) {
    std::array<Cocycle, 3> omega = central_cocycles(g);

    std::array<BilinearMap, 3> pulled;
    for (int k = 0; k < 3; ++k) {
        Cocycle om = omega[k];
        pulled[k] = [om, pi](const AlgebraElement& u, const AlgebraElement& v) {
            return om.eval(pi(u), pi(v));
        };
    }
    if (verify_samples > 0) {
        for (int k = 0; k < 3; ++k) {
            CocycleCheckReport r = verify_cocycle(g, pulled[k], verify_samples, 0xA7E5ull + k);
            if (!r.pass())
                throw error("pulled-back cocycle fails verification: input is not an automorphism");
        }
    }

    std::array<CohomologyClass, 3> cls;
    for (int k = 0; k < 3; ++k) cls[k] = extract_class(g, pulled[k]);

    std::array<AlgebraElement, 3> central_images = {
        AlgebraElement(AlgebraTag::HV), AlgebraElement(AlgebraTag::HV), AlgebraElement(AlgebraTag::HV)};
    std::array<std::array<Scalar, 3>, 3> m;
    for (int target = 0; target < 3; ++target) {
        m[0][target] = Scalar(12) * cls[target].b;
        m[1][target] = cls[target].a;
        m[2][target] = cls[target].c;
    }
    for (int k = 0; k < 3; ++k)
        for (int target = 0; target < 3; ++target)
            central_images[k].add_term(central_symbol(target), m[k][target]);

    std::array<BilinearMap, 3> phi_forms;
    for (int target = 0; target < 3; ++target) {
        std::array<Scalar, 3> coeffs = {m[0][target], m[1][target], m[2][target]};
        BilinearMap pb = pulled[target];
        phi_forms[target] = [pb, coeffs, omega](const AlgebraElement& u, const AlgebraElement& v) {
            Scalar out = pb(u, v);
            for (int k = 0; k < 3; ++k) out -= coeffs[k] * omega[k].eval(u, v);
            return out;
        };
    }

    return HvAutomorphism(g, pi, std::move(central_images), std::move(phi_forms));
}

HvAutomorphism lift_automorphism_to_hv(const GroupInstance& g, const ThetaAut& theta,
                                       int verify_samples) {
    return lift_automorphism_to_hv(g, theta.as_map(g), verify_samples);
}

HvAutomorphism lift_automorphism_to_hv(const GroupInstance& g, const AutWord& word,
                                       int verify_samples) {
    return lift_automorphism_to_hv(g, word.as_map(g), verify_samples);
}

Character random_character(const GroupInstance& g, Rng& rng) {
    if (g.kind() == GroupKind::Q) return Character::trivial(g);
    std::vector<Scalar> images;
    for (int i = 0; i < g.rank(); ++i) images.push_back(random_coefficient(rng));
    return Character(g, std::move(images));
}

Scalar random_epsilon(const GroupInstance& g, Rng& rng) {
    if (g.kind() != GroupKind::Q) return rng.coin() ? Scalar(1) : Scalar(-1);
    Scalar num(rng.range(1, 5)), den(rng.range(1, 5));
    Scalar eps = num / den;
    return rng.coin() ? eps : -eps;
}

ThetaAut random_theta(const GroupInstance& g, Rng& rng) {
    Scalar c = random_coefficient(rng);
    return ThetaAut(g, random_character(g, rng), random_epsilon(g, rng), random_coefficient(rng),
                    random_coefficient(rng), c);
}

InnerAut random_inner(const GroupInstance& g, Rng& rng, int max_factors) {
    InnerAut out;
    int count = static_cast<int>(rng.below(static_cast<uint64_t>(max_factors))) + 1;
    for (int i = 0; i < count; ++i) {
        GroupElement z = random_group_element(g, rng, 3);
        if (z.is_zero()) z = g.probe_base();
        out.factors.emplace_back(random_coefficient(rng), z);
    }
    return out;
}

GroupLawsReport verify_group_laws(const GroupInstance& g, int samples, uint64_t seed) {
    GroupLawsReport report;
    report.samples = samples;
    Rng rng(seed);
    Character trivial = Character::trivial(g);
    auto fail = [&](bool& flag, const std::string& what) {
        flag = false;
        if (report.failure.empty()) report.failure = what;
    };

    for (int i = 0; i < samples && report.pass(); ++i) {
        // (i) the character slice is closed: theta(chi1,1,0,0,1) theta(chi2,1,0,0,1)
        {
            Character c1 = random_character(g, rng), c2 = random_character(g, rng);
            ThetaAut t1(g, c1, Scalar(1), Scalar(0), Scalar(0), Scalar(1));
            ThetaAut t2(g, c2, Scalar(1), Scalar(0), Scalar(0), Scalar(1));
            ThetaAut got = compose_theta(g, t1, t2);
            if (!(got.chi() == c1.times(g, c2) && got.eps().is_one() && got.a().is_zero() &&
                  got.b().is_zero() && got.c().is_one()))
                fail(report.chi_slice_ok, "character slice not closed at sample " + std::to_string(i));
        }
        // (ii) affine slice is an abelian subgroup isomorphic to F x F
        {
            Scalar a1 = random_coefficient(rng), b1 = random_coefficient(rng);
            Scalar a2 = random_coefficient(rng), b2 = random_coefficient(rng);
            ThetaAut t1(g, trivial, Scalar(1), a1, b1, Scalar(1));
            ThetaAut t2(g, trivial, Scalar(1), a2, b2, Scalar(1));
            ThetaAut got = compose_theta(g, t1, t2);
            ThetaAut swapped = compose_theta(g, t2, t1);
            if (!(got.a() == a1 + a2 && got.b() == b1 + b2 && got.c().is_one() && got.eps().is_one()))
                fail(report.affine_slice_ok, "affine slice does not add at sample " + std::to_string(i));
            if (!(got == swapped))
                fail(report.affine_slice_ok, "affine slice not abelian at sample " + std::to_string(i));
        }
        // (iii) scale slice multiplies
        {
            Scalar c1 = random_coefficient(rng), c2 = random_coefficient(rng);
            ThetaAut t1(g, trivial, Scalar(1), Scalar(0), Scalar(0), c1);
            ThetaAut t2(g, trivial, Scalar(1), Scalar(0), Scalar(0), c2);
            if (!(compose_theta(g, t1, t2).c() == c1 * c2))
                fail(report.scale_slice_ok, "scale slice not multiplicative at sample " + std::to_string(i));
        }
        // (iv) conjugating N a c by the eps-slice stays inside N a c
        {
            ThetaAut nac(g, random_character(g, rng), Scalar(1), random_coefficient(rng),
                         random_coefficient(rng), random_coefficient(rng));
            ThetaAut sigma(g, trivial, random_epsilon(g, rng), Scalar(0), Scalar(0), Scalar(1));
            ThetaAut conj = compose_theta(g, compose_theta(g, sigma, nac), invert_theta(g, sigma));
            if (!conj.eps().is_one())
                fail(report.conjugation_ok, "conjugation leaves N a c at sample " + std::to_string(i));
        }
        // (v) the projection theta -> eps is a homomorphism
        {
            ThetaAut t1 = random_theta(g, rng), t2 = random_theta(g, rng);
            if (!(compose_theta(g, t1, t2).eps() == t1.eps() * t2.eps()))
                fail(report.eps_projection_ok, "eps projection not multiplicative at sample " + std::to_string(i));
        }
    }
    return report;
}

}  // namespace hv
