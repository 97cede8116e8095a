#include "hv/algebra.hpp"

namespace hv {

std::string algebra_tag_name(AlgebraTag tag) {
    switch (tag) {
        case AlgebraTag::W: return "w";
        case AlgebraTag::D: return "d";
        case AlgebraTag::D1: return "d1";
        case AlgebraTag::HV: return "hv";
    }
    throw error("bad algebra tag");
}

AlgebraTag algebra_tag_from_name(const std::string& name) {
    if (name == "w" || name == "W") return AlgebraTag::W;
    if (name == "d" || name == "D") return AlgebraTag::D;
    if (name == "d1" || name == "D1") return AlgebraTag::D1;
    if (name == "hv" || name == "HV") return AlgebraTag::HV;
    throw error("unknown algebra '" + name + "' (expected w, d, d1 or hv)");
}

std::string BasisSymbol::to_string(AlgebraTag tag) const {
    switch (kind) {
        case Kind::CL: return "C_L";
        case Kind::CI: return "C_I";
        case Kind::CLI: return "C_LI";
        case Kind::Op: break;
    }
    if (tag == AlgebraTag::D) return "D(" + x.to_string() + ";" + std::to_string(m) + ")";
    if (m == 1) return "L(" + x.to_string() + ")";
    if (m == 0) return "I(" + x.to_string() + ")";
    return "D(" + x.to_string() + ";" + std::to_string(m) + ")";
}

void AlgebraElement::check_admissible(AlgebraTag tag, const BasisSymbol& sym) {
    switch (tag) {
        case AlgebraTag::W:
            if (!sym.is_L()) throw error("W admits only L(x) symbols");
            return;
        case AlgebraTag::D:
            if (sym.is_central() || sym.m < 0) throw error("D admits only D(x;m) symbols with m >= 0");
            return;
        case AlgebraTag::D1:
            if (sym.is_central() || sym.m < 0 || sym.m > 1)
                throw error("D1 admits only L(x) and I(x) symbols");
            return;
        case AlgebraTag::HV:
            if (!sym.is_central() && (sym.m < 0 || sym.m > 1))
                throw error("HV admits only L(x), I(x) and central symbols");
            return;
    }
    throw error("bad algebra tag");
}

AlgebraElement AlgebraElement::single(AlgebraTag tag, BasisSymbol sym, Scalar coeff) {
    AlgebraElement out(tag);
    out.add_term(sym, coeff);
    return out;
}

Scalar AlgebraElement::coeff(const BasisSymbol& sym) const {
    auto it = terms_.find(sym);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void AlgebraElement::add_term(const BasisSymbol& sym, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    check_admissible(tag_, sym);
    auto [it, inserted] = terms_.emplace(sym, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.tag_ != b.tag_) throw error("algebra tag mismatch");
    AlgebraElement out = a;
    for (const auto& [sym, c] : b.terms_) out.add_term(sym, c);
    return out;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) { return a + (-b); }

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement out(tag_);
    for (const auto& [sym, c] : terms_) out.terms_.emplace(sym, -c);
    return out;
}

AlgebraElement operator*(const Scalar& s, const AlgebraElement& a) {
    AlgebraElement out(a.tag_);
    if (s.is_zero()) return out;
    for (const auto& [sym, c] : a.terms_) out.terms_.emplace(sym, s * c);
    return out;
}

std::string AlgebraElement::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [sym, coeff] : terms_) {
        bool negative = coeff.is_rational() && coeff.rational_part().sign() < 0;
        Scalar abs = negative ? -coeff : coeff;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (!abs.is_one()) {
            out += abs.is_rational() ? abs.to_string() : "(" + abs.to_string() + ")";
            out += "*";
        }
        out += sym.to_string(tag_);
        first = false;
    }
    return out;
}

AlgebraElement AlgebraElement::retag(AlgebraTag tag) const {
    AlgebraElement out(tag);
    for (const auto& [sym, c] : terms_) out.add_term(sym, c);
    return out;
}

namespace {

void check_same_tag(const AlgebraElement& u, const AlgebraElement& v, AlgebraTag expect) {
    if (u.tag() != expect || v.tag() != expect)
        throw error("expected both operands tagged " + algebra_tag_name(expect));
}

// C(m, i) as exact scalars; m stays small (power cap).
Scalar binomial(int m, int i) {
    BigInt num(1), den(1);
    for (int k = 0; k < i; ++k) {
        num *= BigInt(m - k);
        den *= BigInt(k + 1);
    }
    return Scalar(Rational(num, den));
}

}  // namespace

AlgebraElement witt_bracket(const GroupInstance& g, const AlgebraElement& u, const AlgebraElement& v) {
    check_same_tag(u, v, AlgebraTag::W);
    AlgebraElement out(AlgebraTag::W);
    for (const auto& [su, cu] : u.terms()) {
        for (const auto& [sv, cv] : v.terms()) {
            // [t^x d, t^y d] = d(y-x) t^{x+y} d
            Scalar f = g.pairing_eval(sv.x - su.x);
            out.add_term(BasisSymbol::L(su.x + sv.x), cu * cv * f);
        }
    }
    return out;
}

AlgebraElement diffop_product(const GroupInstance& g, const AlgebraElement& u, const AlgebraElement& v,
                              int power_cap) {
    check_same_tag(u, v, AlgebraTag::D);
    AlgebraElement out(AlgebraTag::D);
    for (const auto& [su, cu] : u.terms()) {
        for (const auto& [sv, cv] : v.terms()) {
            // (t^x d^m)(t^y d^n) = t^{x+y} sum_i C(m,i) d(y)^i d^{m+n-i}
            Scalar dy = g.pairing_eval(sv.x);
            GroupElement xy = su.x + sv.x;
            Scalar base = cu * cv;
            for (int i = 0; i <= su.m; ++i) {
                int power = su.m + sv.m - i;
                if (power > power_cap)
                    throw error("operator power " + std::to_string(power) + " exceeds cap " +
                                std::to_string(power_cap));
                out.add_term(BasisSymbol::D(xy, power), base * binomial(su.m, i) * dy.pow(i));
            }
        }
    }
    return out;
}

AlgebraElement commutator(const GroupInstance& g, const AlgebraElement& u, const AlgebraElement& v,
                          int power_cap) {
    if (u.tag() != v.tag()) throw error("algebra tag mismatch");
    if (u.tag() == AlgebraTag::D1) {
        AlgebraElement du = embed_in_d(u), dv = embed_in_d(v);
        AlgebraElement prod = diffop_product(g, du, dv, power_cap) - diffop_product(g, dv, du, power_cap);
        // order <= 1 closure of the bracket on D1
        return prod.retag(AlgebraTag::D1);
    }
    if (u.tag() != AlgebraTag::D) throw error("commutator expects D or D1 operands");
    return diffop_product(g, u, v, power_cap) - diffop_product(g, v, u, power_cap);
}

AlgebraElement hv_bracket(const GroupInstance& g, const AlgebraElement& u, const AlgebraElement& v) {
    check_same_tag(u, v, AlgebraTag::HV);
    AlgebraElement out(AlgebraTag::HV);
    Scalar twelfth = Scalar(Rational(BigInt(1), BigInt(12)));
    for (const auto& [su, cu] : u.terms()) {
        if (su.is_central()) continue;
        for (const auto& [sv, cv] : v.terms()) {
            if (sv.is_central()) continue;
            Scalar c = cu * cv;
            GroupElement sum = su.x + sv.x;
            bool diag = sum.is_zero();
            if (su.is_L() && sv.is_L()) {
                out.add_term(BasisSymbol::L(sum), c * g.pairing_eval(sv.x - su.x));
                if (diag) {
                    Scalar dx = g.pairing_eval(su.x);
                    out.add_term(BasisSymbol::C_L(), c * twelfth * (dx.pow(3) - dx));
                }
            } else if (su.is_L() && sv.is_I()) {
                out.add_term(BasisSymbol::I(sum), c * g.pairing_eval(sv.x));
                if (diag) {
                    Scalar dx = g.pairing_eval(su.x);
                    out.add_term(BasisSymbol::C_LI(), c * (dx.pow(2) - dx));
                }
            } else if (su.is_I() && sv.is_L()) {
                // -[L(y), I(x)]
                out.add_term(BasisSymbol::I(sum), -(c * g.pairing_eval(su.x)));
                if (diag) {
                    Scalar dy = g.pairing_eval(sv.x);
                    out.add_term(BasisSymbol::C_LI(), -(c * (dy.pow(2) - dy)));
                }
            } else {  // I, I
                if (diag) out.add_term(BasisSymbol::C_I(), c * g.pairing_eval(sv.x));
            }
        }
    }
    return out;
}

AlgebraElement bracket(const GroupInstance& g, const AlgebraElement& u, const AlgebraElement& v,
                       int power_cap) {
    if (u.tag() != v.tag()) throw error("algebra tag mismatch");
    switch (u.tag()) {
        case AlgebraTag::W: return witt_bracket(g, u, v);
        case AlgebraTag::D:
        case AlgebraTag::D1: return commutator(g, u, v, power_cap);
        case AlgebraTag::HV: return hv_bracket(g, u, v);
    }
    throw error("bad algebra tag");
}

std::map<GroupElement, AlgebraElement> grade_components(const GroupInstance& g, const AlgebraElement& u) {
    std::map<GroupElement, AlgebraElement> out;
    for (const auto& [sym, c] : u.terms()) {
        GroupElement degree = sym.is_central() ? g.zero() : sym.x;
        auto it = out.find(degree);
        if (it == out.end()) it = out.emplace(degree, AlgebraElement(u.tag())).first;
        it->second.add_term(sym, c);
    }
    return out;
}

AlgebraElement project_to_d1(const AlgebraElement& u) {
    AlgebraElement out(AlgebraTag::D1);
    for (const auto& [sym, c] : u.terms()) {
        if (sym.is_central()) continue;
        out.add_term(sym, c);
    }
    return out;
}

AlgebraElement embed_in_d(const AlgebraElement& u) {
    if (u.tag() == AlgebraTag::D) return u;
    if (u.tag() == AlgebraTag::HV) throw error("central symbols do not embed in D");
    return u.retag(AlgebraTag::D);
}

AlgebraElement jacobi_defect(const GroupInstance& g, const AlgebraElement& u, const AlgebraElement& v,
                             const AlgebraElement& w) {
    AlgebraElement a = bracket(g, bracket(g, u, v), w);
    AlgebraElement b = bracket(g, bracket(g, v, w), u);
    AlgebraElement c = bracket(g, bracket(g, w, u), v);
    return a + b + c;
}

}  // namespace hv
