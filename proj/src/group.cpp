#include "hv/group.hpp"

#include "hv/linalg.hpp"

namespace hv {

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
    if (a.coords.size() != b.coords.size()) throw error("group element arity mismatch");
    GroupElement out;
    out.coords.reserve(a.coords.size());
    for (size_t i = 0; i < a.coords.size(); ++i) out.coords.push_back(a.coords[i] + b.coords[i]);
    return out;
}

GroupElement operator-(const GroupElement& a, const GroupElement& b) { return a + (-b); }

GroupElement GroupElement::operator-() const {
    GroupElement out;
    out.coords.reserve(coords.size());
    for (const auto& c : coords) out.coords.push_back(-c);
    return out;
}

std::strong_ordering GroupElement::operator<=>(const GroupElement& o) const {
    if (coords.size() != o.coords.size()) return coords.size() <=> o.coords.size();
    for (size_t i = 0; i < coords.size(); ++i) {
        auto c = coords[i] <=> o.coords[i];
        if (c != std::strong_ordering::equal) return c;
    }
    return std::strong_ordering::equal;
}

std::string GroupElement::to_string() const {
    std::string out;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ",";
        out += coords[i].to_string();
    }
    return out;
}

int group_rank(GroupKind kind) {
    switch (kind) {
        case GroupKind::Z: return 1;
        case GroupKind::Z2: return 2;
        case GroupKind::Z3: return 3;
        case GroupKind::Z4: return 4;
        case GroupKind::Q: return 1;
    }
    throw error("bad group kind");
}

std::string group_kind_name(GroupKind kind) {
    switch (kind) {
        case GroupKind::Z: return "Z";
        case GroupKind::Z2: return "Z2";
        case GroupKind::Z3: return "Z3";
        case GroupKind::Z4: return "Z4";
        case GroupKind::Q: return "Q";
    }
    throw error("bad group kind");
}

GroupKind group_kind_from_name(const std::string& name) {
    if (name == "Z") return GroupKind::Z;
    if (name == "Z2") return GroupKind::Z2;
    if (name == "Z3") return GroupKind::Z3;
    if (name == "Z4") return GroupKind::Z4;
    if (name == "Q") return GroupKind::Q;
    throw error("unknown group kind '" + name + "' (expected Z, Z2, Z3, Z4 or Q)");
}

bool GroupInstance::nondegenerate(GroupKind kind, const std::vector<Scalar>& pairing) {
    int n = group_rank(kind);
    if (static_cast<int>(pairing.size()) != n) throw error("pairing arity mismatch for " + group_kind_name(kind));
    if (kind == GroupKind::Z || kind == GroupKind::Q) return !pairing[0].is_zero();
    // Z^n: a lattice vector m kills the pairing iff it kills both the rational
    // and the sqrt(d) coordinates. Any nonzero rational null vector scales to
    // an integer one (clear denominators), so check the null space of the
    // 2 x n rational matrix of parts.
    ScalarMatrix m(2, ScalarVector(n, Scalar(0)));
    for (int i = 0; i < n; ++i) {
        m[0][i] = Scalar(pairing[i].rational_part());
        m[1][i] = Scalar(pairing[i].sqrt_part());
    }
    return null_space(std::move(m)).empty();
}

GroupInstance::GroupInstance(GroupKind kind, std::vector<Scalar> pairing, long long sqrt_d)
    : kind_(kind), rank_(group_rank(kind)), pairing_(std::move(pairing)), sqrt_d_(sqrt_d) {
    if (sqrt_d_ != 0) Scalar::validate_sqrt_d(sqrt_d_);
    for (const auto& v : pairing_) {
        if (v.sqrt_d() != 0 && v.sqrt_d() != sqrt_d_)
            throw error("pairing value " + v.to_string() + " lies outside the configured field");
    }
    if (!nondegenerate(kind_, pairing_)) {
        throw error("degenerate pairing on " + group_kind_name(kind_) +
                    ": some nonzero group element pairs to zero");
    }
}

Scalar GroupInstance::pairing_eval(const GroupElement& x) const {
    check_member(x);
    Scalar out(0);
    for (int i = 0; i < rank_; ++i) out += Scalar(x.coords[i]) * pairing_[i];
    return out;
}

bool GroupInstance::epsilon_in_E(const Scalar& e) const {
    if (e.is_zero()) throw error("epsilon must be nonzero");
    if (!e.is_rational())
        throw error("epsilon " + e.to_string() + " cannot rescale " + group_kind_name(kind_) + " coordinates");
    if (kind_ == GroupKind::Q) return true;
    return e == Scalar(1) || e == Scalar(-1);
}

GroupElement GroupInstance::zero() const {
    GroupElement out;
    out.coords.assign(rank_, Rational(0));
    return out;
}

GroupElement GroupInstance::generator(int i) const {
    if (i < 0 || i >= rank_) throw error("generator index out of range");
    GroupElement out = zero();
    out.coords[i] = Rational(1);
    return out;
}

GroupElement GroupInstance::element(std::vector<Rational> coords) const {
    if (static_cast<int>(coords.size()) != rank_)
        throw error("coordinate arity mismatch: " + group_kind_name(kind_) + " needs " + std::to_string(rank_));
    if (kind_ != GroupKind::Q) {
        for (const auto& c : coords)
            if (!c.is_integer()) throw error("non-integer coordinate " + c.to_string() + " in " + group_kind_name(kind_));
    }
    GroupElement out;
    out.coords = std::move(coords);
    return out;
}

GroupElement GroupInstance::scale(long long k, const GroupElement& x) const {
    GroupElement out;
    out.coords.reserve(x.coords.size());
    for (const auto& c : x.coords) out.coords.push_back(c * Rational(k));
    return out;
}

GroupElement GroupInstance::scale(const Scalar& eps, const GroupElement& x) const {
    if (!epsilon_in_E(eps)) throw error("epsilon " + eps.to_string() + " is not in E for " + group_kind_name(kind_));
    GroupElement out;
    out.coords.reserve(x.coords.size());
    for (const auto& c : x.coords) out.coords.push_back(c * eps.rational_part());
    return out;
}

GroupElement GroupInstance::probe_base() const {
    for (int i = 0; i < rank_; ++i) {
        if (!pairing_[i].is_zero()) return generator(i);
    }
    throw error("no generator pairs nonzero (degenerate pairing)");
}

void GroupInstance::check_member(const GroupElement& x) const {
    if (static_cast<int>(x.coords.size()) != rank_)
        throw error("coordinate arity mismatch with group " + group_kind_name(kind_));
}

Character Character::trivial(const GroupInstance& g) {
    Character chi;
    if (g.kind() != GroupKind::Q) chi.images_.assign(g.rank(), Scalar(1));
    return chi;
}

Character::Character(const GroupInstance& g, std::vector<Scalar> generator_images) {
    if (g.kind() == GroupKind::Q) {
        for (const auto& v : generator_images) {
            if (!(v == Scalar(1)))
                throw error("only the trivial character exists on Q over the rationals");
        }
        return;  // trivial, stored empty
    }
    if (static_cast<int>(generator_images.size()) != g.rank())
        throw error("character needs one image per generator");
    for (const auto& v : generator_images) {
        if (v.is_zero()) throw error("character images must be nonzero");
    }
    images_ = std::move(generator_images);
}

bool Character::is_trivial() const {
    for (const auto& v : images_)
        if (!v.is_one()) return false;
    return true;
}

Scalar Character::eval(const GroupInstance& g, const GroupElement& x) const {
    g.check_member(x);
    if (g.kind() == GroupKind::Q) return Scalar(1);
    Scalar out(1);
    for (int i = 0; i < g.rank(); ++i) {
        const Rational& c = x.coords[i];
        if (c.is_zero()) continue;
        out *= images_[i].pow(c.numerator().to_int64());
    }
    return out;
}

Character Character::precompose_scale(const GroupInstance& g, const Scalar& eps) const {
    if (g.kind() == GroupKind::Q) return *this;
    if (!g.epsilon_in_E(eps)) throw error("epsilon not in E");
    if (eps == Scalar(1)) return *this;
    Character out;
    out.images_.reserve(images_.size());
    for (const auto& v : images_) out.images_.push_back(v.inverse());
    return out;
}

Character Character::times(const GroupInstance& g, const Character& other) const {
    if (g.kind() == GroupKind::Q) return *this;
    Character out;
    out.images_.reserve(images_.size());
    for (size_t i = 0; i < images_.size(); ++i) out.images_.push_back(images_[i] * other.images_[i]);
    return out;
}

Character Character::inverse(const GroupInstance& g) const {
    if (g.kind() == GroupKind::Q) return *this;
    Character out;
    out.images_.reserve(images_.size());
    for (const auto& v : images_) out.images_.push_back(v.inverse());
    return out;
}

AdditiveMap::AdditiveMap(const GroupInstance& g, std::vector<Scalar> generator_images) {
    if (static_cast<int>(generator_images.size()) != g.rank())
        throw error("additive map needs one image per generator");
    images_ = std::move(generator_images);
}

AdditiveMap AdditiveMap::zero(const GroupInstance& g) {
    return AdditiveMap(g, std::vector<Scalar>(g.rank(), Scalar(0)));
}

AdditiveMap AdditiveMap::pairing_multiple(const GroupInstance& g, const Scalar& k) {
    std::vector<Scalar> images;
    images.reserve(g.rank());
    for (const auto& v : g.pairing()) images.push_back(k * v);
    return AdditiveMap(g, std::move(images));
}

Scalar AdditiveMap::eval(const GroupInstance& g, const GroupElement& x) const {
    g.check_member(x);
    Scalar out(0);
    for (int i = 0; i < g.rank(); ++i) out += Scalar(x.coords[i]) * images_[i];
    return out;
}

}  // namespace hv
