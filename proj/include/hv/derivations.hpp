#pragma once

#include <variant>

#include "hv/cohomology.hpp"

namespace hv {

// Action of a linear map on basis symbols; evaluation extends linearly.
using GeneratorAction = std::function<AlgebraElement(const BasisSymbol&)>;

// Formal sum of scaled derivation atoms: ad(w), sigma_1..3, xi_mu, and a
// generic degree-0 form given by raw coefficient functions.
class Derivation {
public:
    struct Inner {
        AlgebraElement w;  // D1
    };
    struct Sigma {
        int index;  // 1: L(x) -> d(x) I(x); 2: L(x) -> I(x); 3: I(x) -> I(x)
    };
    struct Xi {
        AdditiveMap mu;  // L(x) -> mu(x) L(x), I(x) -> mu(x) I(x)
    };
    struct Generic0 {
        std::function<Scalar(const GroupElement&)> beta;    // I(x) -> beta(x) I(x)
        std::function<Scalar(const GroupElement&)> gamma;   // L(x) -> gamma(x) L(x) + ...
        std::function<Scalar(const GroupElement&)> lambda;  // ... + lambda(x) I(x)
    };
    using Atom = std::variant<Inner, Sigma, Xi, Generic0>;

    Derivation() = default;

    static Derivation inner(AlgebraElement w);
    static Derivation sigma(int index);
    static Derivation xi(AdditiveMap mu);
    static Derivation generic0(Generic0 coeffs);

    Derivation& add_scaled(Scalar coeff, Atom atom);
    friend Derivation operator+(const Derivation& a, const Derivation& b);
    friend Derivation operator*(const Scalar& s, const Derivation& d);

    AlgebraElement apply_symbol(const GroupInstance& g, const BasisSymbol& sym) const;
    AlgebraElement apply(const GroupInstance& g, const AlgebraElement& u) const;
    GeneratorAction action(const GroupInstance& g) const;

    const std::vector<std::pair<Scalar, Atom>>& parts() const { return parts_; }

private:
    std::vector<std::pair<Scalar, Atom>> parts_;
};

// D[u,v] - [Du,v] - [u,Dv]; identically zero exactly for derivations.
AlgebraElement leibniz_defect(const GroupInstance& g, const Derivation& D, const AlgebraElement& u,
                              const AlgebraElement& v);

// Default probe symbols: L/I at 0, +-e_i, +-2e_i and the mixed pairs e_i+e_j.
std::vector<BasisSymbol> default_probe_symbols(const GroupInstance& g);

// Split D's action on the probe symbols by output degree minus input degree.
std::map<GroupElement, std::map<BasisSymbol, AlgebraElement>> degree_components(
    const GroupInstance& g, const GeneratorAction& D, const std::vector<BasisSymbol>& probes);

struct Degree0Decomposition {
    AdditiveMap mu;
    Scalar a, b, c0;  // D = xi_mu + a sigma1 + b sigma2 + c0 sigma3
};

// Constructive degree-0 classification: reads (mu, a, b, c0) off the probe
// symbols and validates every probe against the reconstruction; probes that
// contradict the additivity/affinity constraints throw with a witness.
Degree0Decomposition decompose_degree0(const GroupInstance& g, const GeneratorAction& D);
Degree0Decomposition decompose_degree0(const GroupInstance& g, const Derivation& D);

Derivation reconstruct_degree0(const GroupInstance& g, const Degree0Decomposition& d);

// Derivation of the central extension: the unique lift of a derivation of D1.
// Central images come from extracting the class of the pulled-back canonical
// cocycles; the coboundary remainder is absorbed into central-valued
// corrections on the L/I images so the Leibniz rule holds pointwise.
class HvDerivation {
public:
    AlgebraElement apply(const AlgebraElement& u) const;  // HV -> HV
    const AlgebraElement& central_image(BasisSymbol::Kind k) const;

    HvDerivation(GroupInstance g, Derivation base, std::array<AlgebraElement, 3> central_images,
                 std::array<BilinearMap, 3> phi_forms);

private:
    Scalar phi_value(int which, const BasisSymbol& sym) const;

    GroupInstance group_;
    Derivation base_;
    std::array<AlgebraElement, 3> central_images_;  // images of C_L, C_I, C_LI
    std::array<BilinearMap, 3> phi_forms_;          // coboundary remainders
};

// verify_samples > 0 additionally checks each pulled-back form with the
// cocycle verifier and throws when the input is not a derivation.
HvDerivation lift_derivation_to_hv(const GroupInstance& g, const Derivation& D,
                                   int verify_samples = 48);

// The three central cocycles of the extension, indexed C_L, C_I, C_LI:
// (1/12) psi2, psi1, psi3 - psi3'.
std::array<Cocycle, 3> central_cocycles(const GroupInstance& g);

}  // namespace hv
