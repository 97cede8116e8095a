#include "hv/derivations.hpp"

namespace hv {

Derivation Derivation::inner(AlgebraElement w) {
    if (w.tag() != AlgebraTag::D1) throw error("inner derivations take a D1 element");
    Derivation d;
    d.parts_.emplace_back(Scalar(1), Inner{std::move(w)});
    return d;
}

Derivation Derivation::sigma(int index) {
    if (index < 1 || index > 3) throw error("sigma index must be 1, 2 or 3");
    Derivation d;
    d.parts_.emplace_back(Scalar(1), Sigma{index});
    return d;
}

Derivation Derivation::xi(AdditiveMap mu) {
    Derivation d;
    d.parts_.emplace_back(Scalar(1), Xi{std::move(mu)});
    return d;
}

Derivation Derivation::generic0(Generic0 coeffs) {
    Derivation d;
    d.parts_.emplace_back(Scalar(1), std::move(coeffs));
    return d;
}

Derivation& Derivation::add_scaled(Scalar coeff, Atom atom) {
    if (!coeff.is_zero()) parts_.emplace_back(std::move(coeff), std::move(atom));
    return *this;
}

Derivation operator+(const Derivation& a, const Derivation& b) {
    Derivation out = a;
    for (const auto& p : b.parts_) out.parts_.push_back(p);
    return out;
}

Derivation operator*(const Scalar& s, const Derivation& d) {
    Derivation out;
    if (s.is_zero()) return out;
    for (const auto& [c, atom] : d.parts_) out.parts_.emplace_back(s * c, atom);
    return out;
}

AlgebraElement Derivation::apply_symbol(const GroupInstance& g, const BasisSymbol& sym) const {
    AlgebraElement::check_admissible(AlgebraTag::D1, sym);
    AlgebraElement out(AlgebraTag::D1);
    AlgebraElement unit = AlgebraElement::single(AlgebraTag::D1, sym);
    for (const auto& [coeff, atom] : parts_) {
        if (std::holds_alternative<Inner>(atom)) {
            out += coeff * commutator(g, std::get<Inner>(atom).w, unit);
        } else if (std::holds_alternative<Sigma>(atom)) {
            int index = std::get<Sigma>(atom).index;
            if (sym.is_L()) {
                if (index == 1)
                    out.add_term(BasisSymbol::I(sym.x), coeff * g.pairing_eval(sym.x));
                else if (index == 2)
                    out.add_term(BasisSymbol::I(sym.x), coeff);
            } else if (index == 3) {
                out.add_term(sym, coeff);
            }
        } else if (std::holds_alternative<Xi>(atom)) {
            out.add_term(sym, coeff * std::get<Xi>(atom).mu.eval(g, sym.x));
        } else {
            const Generic0& c = std::get<Generic0>(atom);
            if (sym.is_I()) {
                out.add_term(sym, coeff * c.beta(sym.x));
            } else {
                out.add_term(sym, coeff * c.gamma(sym.x));
                out.add_term(BasisSymbol::I(sym.x), coeff * c.lambda(sym.x));
            }
        }
    }
    return out;
}

AlgebraElement Derivation::apply(const GroupInstance& g, const AlgebraElement& u) const {
    if (u.tag() != AlgebraTag::D1) throw error("derivations act on D1 elements");
    AlgebraElement out(AlgebraTag::D1);
    for (const auto& [sym, c] : u.terms()) out += c * apply_symbol(g, sym);
    return out;
}

GeneratorAction Derivation::action(const GroupInstance& g) const {
    return [d = *this, g](const BasisSymbol& sym) { return d.apply_symbol(g, sym); };
}

AlgebraElement leibniz_defect(const GroupInstance& g, const Derivation& D, const AlgebraElement& u,
                              const AlgebraElement& v) {
    AlgebraElement lhs = D.apply(g, commutator(g, u, v));
    AlgebraElement rhs = commutator(g, D.apply(g, u), v) + commutator(g, u, D.apply(g, v));
    return lhs - rhs;
}

std::vector<BasisSymbol> default_probe_symbols(const GroupInstance& g) {
    std::vector<GroupElement> points;
    points.push_back(g.zero());
    for (int i = 0; i < g.rank(); ++i) {
        for (long long k : {1, -1, 2, -2}) points.push_back(g.scale(k, g.generator(i)));
        for (int j = i + 1; j < g.rank(); ++j) points.push_back(g.generator(i) + g.generator(j));
    }
    std::vector<BasisSymbol> probes;
    probes.reserve(points.size() * 2);
    for (const auto& p : points) {
        probes.push_back(BasisSymbol::L(p));
        probes.push_back(BasisSymbol::I(p));
    }
    return probes;
}

std::map<GroupElement, std::map<BasisSymbol, AlgebraElement>> degree_components(
    const GroupInstance& g, const GeneratorAction& D, const std::vector<BasisSymbol>& probes) {
    std::map<GroupElement, std::map<BasisSymbol, AlgebraElement>> out;
    for (const BasisSymbol& sym : probes) {
        AlgebraElement image = D(sym);
        for (const auto& [degree, part] : grade_components(g, image)) {
            GroupElement shift = degree - sym.x;
            auto [it, inserted] = out[shift].emplace(sym, part);
            if (!inserted) it->second += part;
        }
    }
    return out;
}

namespace {

// Coefficients of D(sym) when it has the degree-0 shape gamma L(x) + lambda I(x)
// (resp. beta I(x)); anything else is a witness that D is not degree-0.
struct ProbeRead {
    Scalar on_L, on_I;
};

ProbeRead read_probe(const GeneratorAction& D, const GroupElement& x, bool from_L) {
    BasisSymbol sym = from_L ? BasisSymbol::L(x) : BasisSymbol::I(x);
    AlgebraElement image = D(sym);
    ProbeRead read{Scalar(0), Scalar(0)};
    for (const auto& [s, c] : image.terms()) {
        if (s.x != x || s.is_central())
            throw error("probe " + sym.to_string(AlgebraTag::D1) +
                        " leaves degree 0: image " + image.to_text());
        if (s.is_L())
            read.on_L = c;
        else
            read.on_I = c;
    }
    if (!from_L && !read.on_L.is_zero())
        throw error("probe " + sym.to_string(AlgebraTag::D1) + " maps I(x) onto L(x): image " +
                    image.to_text());
    return read;
}

}  // namespace

Degree0Decomposition decompose_degree0(const GroupInstance& g, const GeneratorAction& D) {
    // c0 = beta_0: the I(0) coefficient of D(I(0))
    Scalar c0 = read_probe(D, g.zero(), false).on_I;

    // mu from the gamma coefficients at the generators
    std::vector<Scalar> images;
    images.reserve(g.rank());
    for (int i = 0; i < g.rank(); ++i)
        images.push_back(read_probe(D, g.generator(i), true).on_L);
    AdditiveMap mu(g, std::move(images));

    // lambda_x = a d(x) + b read at x0 and 2 x0
    GroupElement x0 = g.probe_base();
    Scalar d0 = g.pairing_eval(x0);
    Scalar lambda1 = read_probe(D, x0, true).on_I;
    Scalar lambda2 = read_probe(D, g.scale(2, x0), true).on_I;
    Scalar a = (lambda2 - lambda1) / d0;
    Scalar b = Scalar(2) * lambda1 - lambda2;

    Degree0Decomposition result{std::move(mu), std::move(a), std::move(b), std::move(c0)};

    // every probe must match the reconstruction exactly; this enforces the
    // additivity of gamma and the affine shape of lambda
    for (const BasisSymbol& sym : default_probe_symbols(g)) {
        AlgebraElement got = D(sym);
        AlgebraElement want(AlgebraTag::D1);
        Scalar mu_x = result.mu.eval(g, sym.x);
        if (sym.is_L()) {
            want.add_term(sym, mu_x);
            want.add_term(BasisSymbol::I(sym.x), result.a * g.pairing_eval(sym.x) + result.b);
        } else {
            want.add_term(sym, mu_x + result.c0);
        }
        if (!(got == want))
            throw error("probes are inconsistent with a degree-0 derivation at " +
                        sym.to_string(AlgebraTag::D1) + ": got " + got.to_text() + ", expected " +
                        want.to_text());
    }
    return result;
}

Degree0Decomposition decompose_degree0(const GroupInstance& g, const Derivation& D) {
    return decompose_degree0(g, D.action(g));
}

Derivation reconstruct_degree0(const GroupInstance& g, const Degree0Decomposition& d) {
    (void)g;
    Derivation out = Derivation::xi(d.mu);
    out.add_scaled(d.a, Derivation::Sigma{1});
    out.add_scaled(d.b, Derivation::Sigma{2});
    out.add_scaled(d.c0, Derivation::Sigma{3});
    return out;
}

std::array<Cocycle, 3> central_cocycles(const GroupInstance& g) {
    Scalar twelfth = Scalar(Rational(BigInt(1), BigInt(12)));
    return {Cocycle(g, Scalar(0), twelfth, Scalar(0), Scalar(0)),   // C_L direction
            Cocycle(g, Scalar(1), Scalar(0), Scalar(0), Scalar(0)),  // C_I direction
            Cocycle(g, Scalar(0), Scalar(0), Scalar(1), Scalar(-1))};  // C_LI direction
}

namespace {

constexpr std::array<BasisSymbol::Kind, 3> kCentralKinds = {
    BasisSymbol::Kind::CL, BasisSymbol::Kind::CI, BasisSymbol::Kind::CLI};

BasisSymbol central_symbol(int which) {
    switch (kCentralKinds[which]) {
        case BasisSymbol::Kind::CL: return BasisSymbol::C_L();
        case BasisSymbol::Kind::CI: return BasisSymbol::C_I();
        default: return BasisSymbol::C_LI();
    }
}

}  // namespace

HvDerivation::HvDerivation(GroupInstance g, Derivation base,
                           std::array<AlgebraElement, 3> central_images,
                           std::array<BilinearMap, 3> phi_forms)
    : group_(std::move(g)), base_(std::move(base)), central_images_(std::move(central_images)),
      phi_forms_(std::move(phi_forms)) {}

const AlgebraElement& HvDerivation::central_image(BasisSymbol::Kind k) const {
    switch (k) {
        case BasisSymbol::Kind::CL: return central_images_[0];
        case BasisSymbol::Kind::CI: return central_images_[1];
        case BasisSymbol::Kind::CLI: return central_images_[2];
        default: throw error("not a central symbol");
    }
}

// phi(sym) from single-term bracket representations: [L(z-x0), I(x0)] =
// d(x0) I(z), [L(0), L(z)] = d(z) L(z), [L(-x0), L(x0)] = 2 d(x0) L(0).
Scalar HvDerivation::phi_value(int which, const BasisSymbol& sym) const {
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

AlgebraElement HvDerivation::apply(const AlgebraElement& u) const {
    if (u.tag() != AlgebraTag::HV) throw error("lifted derivations act on HV elements");
    AlgebraElement out(AlgebraTag::HV);
    for (const auto& [sym, c] : u.terms()) {
        if (sym.is_central()) {
            out += c * central_image(sym.kind);
            continue;
        }
        out += c * base_.apply_symbol(group_, sym).retag(AlgebraTag::HV);
        for (int k = 0; k < 3; ++k) out.add_term(central_symbol(k), c * phi_value(k, sym));
    }
    return out;
}

HvDerivation lift_derivation_to_hv(const GroupInstance& g, const Derivation& D, int verify_samples) {
    std::array<Cocycle, 3> omega = central_cocycles(g);

    // Pull each canonical cocycle back along D.
    std::array<BilinearMap, 3> pulled;
    for (int k = 0; k < 3; ++k) {
        Cocycle om = omega[k];
        pulled[k] = [om, D, g](const AlgebraElement& u, const AlgebraElement& v) {
            return om.eval(D.apply(g, u), v) + om.eval(u, D.apply(g, v));
        };
    }
    if (verify_samples > 0) {
        for (int k = 0; k < 3; ++k) {
            CocycleCheckReport r = verify_cocycle(g, pulled[k], verify_samples, 0x9D5Full + k);
            if (!r.pass())
                throw error("pulled-back cocycle fails verification: input is not a derivation");
        }
    }

    // Central images from the classes: class(omega_CL) = (0, 1/12, 0),
    // class(omega_CI) = (1, 0, 0), class(omega_CLI) = (0, 0, 1).
    std::array<CohomologyClass, 3> cls;
    for (int k = 0; k < 3; ++k) cls[k] = extract_class(g, pulled[k]);

    std::array<AlgebraElement, 3> central_images = {
        AlgebraElement(AlgebraTag::HV), AlgebraElement(AlgebraTag::HV), AlgebraElement(AlgebraTag::HV)};
    // matrix[k][target]: coefficient of C_target in the image of C_k
    std::array<std::array<Scalar, 3>, 3> m;
    for (int target = 0; target < 3; ++target) {
        m[0][target] = Scalar(12) * cls[target].b;  // C_L row
        m[1][target] = cls[target].a;               // C_I row
        m[2][target] = cls[target].c;               // C_LI row
    }
    for (int k = 0; k < 3; ++k) {
        for (int target = 0; target < 3; ++target)
            central_images[k].add_term(central_symbol(target), m[k][target]);
    }

    // Coboundary remainder per target: pulled - sum_k m[k][target] omega_k.
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

    return HvDerivation(g, D, std::move(central_images), std::move(phi_forms));
}

}  // namespace hv
