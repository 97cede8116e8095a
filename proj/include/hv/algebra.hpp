#pragma once

#include <map>
#include <string>

#include "hv/group.hpp"

namespace hv {

enum class AlgebraTag { W, D, D1, HV };

std::string algebra_tag_name(AlgebraTag tag);
AlgebraTag algebra_tag_from_name(const std::string& name);

// Canonical order: central symbols first (C_L < C_I < C_LI), then operator
// symbols by (partial-power m, group coordinates) lexicographically. L(x) and
// I(x) are the m=1 and m=0 operator symbols under the embedding into the full
// operator algebra.
struct BasisSymbol {
    enum class Kind : uint8_t { CL = 0, CI = 1, CLI = 2, Op = 3 };

    Kind kind = Kind::Op;
    int m = 0;           // partial-power, operator symbols only
    GroupElement x;      // empty for central symbols

    static BasisSymbol L(GroupElement g) { return {Kind::Op, 1, std::move(g)}; }
    static BasisSymbol I(GroupElement g) { return {Kind::Op, 0, std::move(g)}; }
    static BasisSymbol D(GroupElement g, int m) { return {Kind::Op, m, std::move(g)}; }
    static BasisSymbol C_L() { return {Kind::CL, 0, {}}; }
    static BasisSymbol C_I() { return {Kind::CI, 0, {}}; }
    static BasisSymbol C_LI() { return {Kind::CLI, 0, {}}; }

    bool is_central() const { return kind != Kind::Op; }
    bool is_L() const { return kind == Kind::Op && m == 1; }
    bool is_I() const { return kind == Kind::Op && m == 0; }

    bool operator==(const BasisSymbol& o) const { return kind == o.kind && m == o.m && x == o.x; }
    std::strong_ordering operator<=>(const BasisSymbol& o) const {
        if (kind != o.kind) return kind <=> o.kind;
        if (m != o.m) return m <=> o.m;
        return x <=> o.x;
    }

    std::string to_string(AlgebraTag tag) const;
};

// Finite linear combination of basis symbols over the scalar field, tagged by
// the ambient algebra. Zero coefficients are never stored; the empty map is
// zero. Symbols are validated against the tag on insertion.
class AlgebraElement {
public:
    explicit AlgebraElement(AlgebraTag tag = AlgebraTag::D1) : tag_(tag) {}
    static AlgebraElement zero(AlgebraTag tag) { return AlgebraElement(tag); }
    static AlgebraElement single(AlgebraTag tag, BasisSymbol sym, Scalar coeff = Scalar(1));

    AlgebraTag tag() const { return tag_; }
    const std::map<BasisSymbol, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t support_size() const { return terms_.size(); }

    Scalar coeff(const BasisSymbol& sym) const;
    void add_term(const BasisSymbol& sym, const Scalar& coeff);

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
    AlgebraElement operator-() const;
    friend AlgebraElement operator*(const Scalar& s, const AlgebraElement& a);
    AlgebraElement& operator+=(const AlgebraElement& o) { return *this = *this + o; }
    AlgebraElement& operator-=(const AlgebraElement& o) { return *this = *this - o; }

    bool operator==(const AlgebraElement& o) const { return tag_ == o.tag_ && terms_ == o.terms_; }

    // Canonical text form, e.g. "-4*L(0) + 1/2*C_L". Zero prints as "0";
    // two-part quadratic coefficients are parenthesized.
    std::string to_text() const;

    // Same terms under a different tag; every symbol re-validated.
    AlgebraElement retag(AlgebraTag tag) const;

    static void check_admissible(AlgebraTag tag, const BasisSymbol& sym);

private:
    AlgebraTag tag_;
    std::map<BasisSymbol, Scalar> terms_;
};

constexpr int kDefaultPowerCap = 16;

// Lie bracket of the generalized Witt algebra (W-tagged operands).
AlgebraElement witt_bracket(const GroupInstance& g, const AlgebraElement& u, const AlgebraElement& v);

// Associative product of generalized differential operators (D-tagged).
AlgebraElement diffop_product(const GroupInstance& g, const AlgebraElement& u, const AlgebraElement& v,
                              int power_cap = kDefaultPowerCap);

// uv - vu in D; D1 operands stay order <= 1 and come back D1-tagged.
AlgebraElement commutator(const GroupInstance& g, const AlgebraElement& u, const AlgebraElement& v,
                          int power_cap = kDefaultPowerCap);

// Bracket of the generalized Heisenberg-Virasoro algebra (HV-tagged).
AlgebraElement hv_bracket(const GroupInstance& g, const AlgebraElement& u, const AlgebraElement& v);

// Bracket dispatch on the operand tag (W / D / D1 / HV).
AlgebraElement bracket(const GroupInstance& g, const AlgebraElement& u, const AlgebraElement& v,
                       int power_cap = kDefaultPowerCap);

// Split by grading degree; central symbols sit in degree 0.
std::map<GroupElement, AlgebraElement> grade_components(const GroupInstance& g, const AlgebraElement& u);

// Quotient by the center: HV -> D1, killing C_L, C_I, C_LI.
AlgebraElement project_to_d1(const AlgebraElement& u);

// W or D1 element seen inside D (L(x) -> D(x,1), I(x) -> D(x,0)).
AlgebraElement embed_in_d(const AlgebraElement& u);

// [[u,v],w] + [[v,w],u] + [[w,u],v]; zero for every Lie bracket here.
AlgebraElement jacobi_defect(const GroupInstance& g, const AlgebraElement& u, const AlgebraElement& v,
                             const AlgebraElement& w);

}  // namespace hv
