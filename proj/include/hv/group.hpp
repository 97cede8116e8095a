#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hv/scalar.hpp"

namespace hv {

// Element of the grading group: integer coordinate vector for Z/Z^n (stored
// as exact rationals with denominator 1), a single rational for Q.
struct GroupElement {
    std::vector<Rational> coords;

    bool is_zero() const {
        for (const auto& c : coords)
            if (!c.is_zero()) return false;
        return true;
    }

    friend GroupElement operator+(const GroupElement& a, const GroupElement& b);
    friend GroupElement operator-(const GroupElement& a, const GroupElement& b);
    GroupElement operator-() const;

    bool operator==(const GroupElement& o) const { return coords == o.coords; }
    std::strong_ordering operator<=>(const GroupElement& o) const;

    std::string to_string() const;  // comma-separated coordinates
};

enum class GroupKind { Z, Z2, Z3, Z4, Q };

int group_rank(GroupKind kind);
std::string group_kind_name(GroupKind kind);
GroupKind group_kind_from_name(const std::string& name);

// Grading group A with the pairing value of the fixed generator of T on each
// group generator, plus the field configuration. Construction validates that
// the pairing is nondegenerate; the raw check is exposed separately so that
// degenerate data can be probed without constructing.
class GroupInstance {
public:
    GroupInstance(GroupKind kind, std::vector<Scalar> pairing, long long sqrt_d);

    static bool nondegenerate(GroupKind kind, const std::vector<Scalar>& pairing);

    GroupKind kind() const { return kind_; }
    int rank() const { return rank_; }
    long long sqrt_d() const { return sqrt_d_; }
    bool quadratic_mode() const { return sqrt_d_ != 0; }
    const std::vector<Scalar>& pairing() const { return pairing_; }

    // pairing_eval: value of the fixed generator of T on x.
    Scalar pairing_eval(const GroupElement& x) const;

    bool epsilon_in_E(const Scalar& e) const;  // throws on e = 0 or irrational e

    GroupElement zero() const;
    GroupElement generator(int i) const;
    GroupElement element(std::vector<Rational> coords) const;  // arity/integrality checked
    GroupElement scale(long long k, const GroupElement& x) const;
    GroupElement scale(const Scalar& eps, const GroupElement& x) const;  // eps in E

    // First generator with nonzero pairing value (exists by nondegeneracy).
    GroupElement probe_base() const;

    void check_member(const GroupElement& x) const;

    bool operator==(const GroupInstance& o) const {
        return kind_ == o.kind_ && pairing_ == o.pairing_ && sqrt_d_ == o.sqrt_d_;
    }

private:
    GroupKind kind_;
    int rank_;
    std::vector<Scalar> pairing_;
    long long sqrt_d_;
};

// Group homomorphism A -> F*, stored by generator images. On A = Q only the
// trivial character exists over the rationals (chi(1) would need all n-th
// roots), so kind Q admits only the empty image list.
class Character {
public:
    static Character trivial(const GroupInstance& g);
    Character(const GroupInstance& g, std::vector<Scalar> generator_images);

    Scalar eval(const GroupInstance& g, const GroupElement& x) const;
    bool is_trivial() const;

    Character precompose_scale(const GroupInstance& g, const Scalar& eps) const;  // chi o eps
    Character times(const GroupInstance& g, const Character& other) const;
    Character inverse(const GroupInstance& g) const;

    const std::vector<Scalar>& generator_images() const { return images_; }
    bool operator==(const Character& o) const { return images_ == o.images_; }

private:
    Character() = default;
    std::vector<Scalar> images_;  // empty for kind Q (trivial)
};

// Additive map A -> F. For kind Q the single image c gives mu(x) = c*x.
class AdditiveMap {
public:
    AdditiveMap() = default;
    AdditiveMap(const GroupInstance& g, std::vector<Scalar> generator_images);

    static AdditiveMap zero(const GroupInstance& g);
    // The pairing itself as an additive map (mu = k * pairing).
    static AdditiveMap pairing_multiple(const GroupInstance& g, const Scalar& k);

    Scalar eval(const GroupInstance& g, const GroupElement& x) const;
    const std::vector<Scalar>& generator_images() const { return images_; }
    bool operator==(const AdditiveMap& o) const { return images_ == o.images_; }

private:
    std::vector<Scalar> images_;
};

}  // namespace hv
