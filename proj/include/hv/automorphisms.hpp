#pragma once

#include "hv/derivations.hpp"

namespace hv {

using LinearMap = std::function<AlgebraElement(const AlgebraElement&)>;

// theta(chi, eps, a, b, c):
//   L(x) |-> eps^-1 chi(x) L(eps x) + (b d(x) + a) chi(x) I(eps x)
//   I(y) |-> c chi(y) I(eps y)
// eps must lie in E and c must be nonzero; both checked at construction.
class ThetaAut {
public:
    ThetaAut(const GroupInstance& g, Character chi, Scalar eps, Scalar a, Scalar b, Scalar c);
    static ThetaAut identity(const GroupInstance& g);

    AlgebraElement apply(const GroupInstance& g, const AlgebraElement& u) const;
    LinearMap as_map(const GroupInstance& g) const;

    const Character& chi() const { return chi_; }
    const Scalar& eps() const { return eps_; }
    const Scalar& a() const { return a_; }
    const Scalar& b() const { return b_; }
    const Scalar& c() const { return c_; }

    bool operator==(const ThetaAut& o) const = default;
    bool is_identity_params(const GroupInstance& g) const;

private:
    Character chi_;
    Scalar eps_, a_, b_, c_;
};

// Word in the inner automorphism group: factors (k, z) denote exp(k ad t^z),
// applied left to right. Each factor acts by L(y) |-> L(y) - k d(z) I(y+z)
// and fixes every I(y); the exponential truncates because ad(t^z)^2 = 0.
// Words are not normalized; equality of inner automorphisms is pointwise.
struct InnerAut {
    std::vector<std::pair<Scalar, GroupElement>> factors;

    InnerAut() = default;
    InnerAut(const GroupInstance& g, std::vector<std::pair<Scalar, GroupElement>> fs);

    AlgebraElement apply(const GroupInstance& g, const AlgebraElement& u) const;
    InnerAut inverse() const;
    bool empty() const { return factors.empty(); }
};

// Normal form of an automorphism: an inner word followed by a theta.
struct AutWord {
    InnerAut inner;
    ThetaAut theta;

    AlgebraElement apply(const GroupInstance& g, const AlgebraElement& u) const {
        return inner.apply(g, theta.apply(g, u));
    }
    LinearMap as_map(const GroupInstance& g) const {
        return [word = *this, g](const AlgebraElement& u) { return word.apply(g, u); };
    }
};

// Parameter-level composition law: theta1 o theta2 (theta2 applied first).
ThetaAut compose_theta(const GroupInstance& g, const ThetaAut& t1, const ThetaAut& t2);
ThetaAut invert_theta(const GroupInstance& g, const ThetaAut& t);

// pi([u,v]) - [pi(u), pi(v)] under the bracket of the operand tag.
AlgebraElement homomorphism_defect(const GroupInstance& g, const LinearMap& pi,
                                   const AlgebraElement& u, const AlgebraElement& v);

// Images of d = L(0), I(0), and L/I at the generators and their doubles:
// everything the factorization needs.
struct AutProbeImages {
    AlgebraElement partial;  // pi(L(0))
    AlgebraElement i_zero;   // pi(I(0))
    std::map<GroupElement, AlgebraElement> L, I;
};

AutProbeImages make_probe_images(const GroupInstance& g, const LinearMap& pi);

// Recovers the eta o theta normal form from probe images. Throws when the
// probes are inconsistent with an automorphism: a t^z d term with z != 0 in
// pi(d), eps outside E, non-multiplicative chi, or a failed final check.
AutWord factor_automorphism(const GroupInstance& g, const AutProbeImages& images);

// Automorphism of the central extension: unique lift through the pulled-back
// cocycle classes, with the coboundary remainder absorbed as central-valued
// corrections on the L/I images.
class HvAutomorphism {
public:
    AlgebraElement apply(const AlgebraElement& u) const;  // HV -> HV
    const AlgebraElement& central_image(BasisSymbol::Kind k) const;

    HvAutomorphism(GroupInstance g, LinearMap base, std::array<AlgebraElement, 3> central_images,
                   std::array<BilinearMap, 3> phi_forms);

private:
    Scalar phi_value(int which, const BasisSymbol& sym) const;

    GroupInstance group_;
    LinearMap base_;
    std::array<AlgebraElement, 3> central_images_;
    std::array<BilinearMap, 3> phi_forms_;
};

HvAutomorphism lift_automorphism_to_hv(const GroupInstance& g, const LinearMap& pi,
                                       int verify_samples = 48);
HvAutomorphism lift_automorphism_to_hv(const GroupInstance& g, const ThetaAut& theta,
                                       int verify_samples = 48);
HvAutomorphism lift_automorphism_to_hv(const GroupInstance& g, const AutWord& word,
                                       int verify_samples = 48);

struct GroupLawsReport {
    bool chi_slice_ok = true;         // X(A) image closed under composition
    bool affine_slice_ok = true;      // theta(1,1,a,b,1) abelian, adds parameters
    bool scale_slice_ok = true;       // c-parameters multiply
    bool conjugation_ok = true;       // eps-slice conjugation preserves N a c
    bool eps_projection_ok = true;    // theta -> eps is a homomorphism onto E
    std::string failure;
    int samples = 0;
    bool pass() const {
        return chi_slice_ok && affine_slice_ok && scale_slice_ok && conjugation_ok && eps_projection_ok;
    }
};

GroupLawsReport verify_group_laws(const GroupInstance& g, int samples, uint64_t seed);

// Random parameter samplers shared by suites and tests.
Character random_character(const GroupInstance& g, Rng& rng);
ThetaAut random_theta(const GroupInstance& g, Rng& rng);
InnerAut random_inner(const GroupInstance& g, Rng& rng, int max_factors = 3);
Scalar random_epsilon(const GroupInstance& g, Rng& rng);

}  // namespace hv
