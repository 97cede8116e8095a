#pragma once

#include <array>
#include <functional>
#include <optional>

#include "hv/algebra.hpp"
#include "hv/rng.hpp"

namespace hv {

// Finitely supported linear functional on D1, extended by linearity.
class LinearFunctional {
public:
    LinearFunctional() = default;
    void set(const BasisSymbol& sym, const Scalar& value);
    Scalar eval(const AlgebraElement& u) const;
    const std::map<BasisSymbol, Scalar>& values() const { return values_; }
    bool operator==(const LinearFunctional& o) const { return values_ == o.values_; }

private:
    std::map<BasisSymbol, Scalar> values_;
};

// Opaque antisymmetric bilinear form on D1 elements.
using BilinearMap = std::function<Scalar(const AlgebraElement&, const AlgebraElement&)>;

struct CohomologyClass {
    Scalar a, b, c;  // coordinates in the basis [psi1], [psi2], [psi3]
    bool operator==(const CohomologyClass& o) const = default;
};

// a*psi1 + b*psi2 + c*psi3 + cprime*psi3' + psi_g with psi_g(u,v) = g([u,v]).
// Bilinear, antisymmetric and a 2-cocycle by construction.
class Cocycle {
public:
    Cocycle(GroupInstance g, Scalar a, Scalar b, Scalar c, Scalar cprime,
            LinearFunctional boundary = {});

    static Cocycle psi1(const GroupInstance& g) { return Cocycle(g, Scalar(1), Scalar(0), Scalar(0), Scalar(0)); }
    static Cocycle psi2(const GroupInstance& g) { return Cocycle(g, Scalar(0), Scalar(1), Scalar(0), Scalar(0)); }
    static Cocycle psi3(const GroupInstance& g) { return Cocycle(g, Scalar(0), Scalar(0), Scalar(1), Scalar(0)); }
    static Cocycle psi3prime(const GroupInstance& g) { return Cocycle(g, Scalar(0), Scalar(0), Scalar(0), Scalar(1)); }

    Scalar eval(const AlgebraElement& u, const AlgebraElement& v) const;
    BilinearMap as_map() const;

    const GroupInstance& group() const { return group_; }
    const Scalar& a() const { return a_; }
    const Scalar& b() const { return b_; }
    const Scalar& c() const { return c_; }
    const Scalar& cprime() const { return cprime_; }
    const LinearFunctional& boundary() const { return boundary_; }

private:
    GroupInstance group_;
    Scalar a_, b_, c_, cprime_;
    LinearFunctional boundary_;
};

// The 2-coboundary psi_g of a linear functional.
Cocycle coboundary(const GroupInstance& g, LinearFunctional functional);

// Cocycle of the Witt restriction: psi(t^x d, t^y d) = delta_{x+y,0} d(x)^3,
// extended by zero off the L-L pairs.
BilinearMap witt_cubic_cocycle(const GroupInstance& g);

struct CocycleCheckReport {
    bool antisymmetry_ok = true;
    bool identity_ok = true;
    // serialized witness when a check fails
    std::optional<std::array<std::string, 3>> witness;
    std::string failed_value;
    int samples = 0;
    bool pass() const { return antisymmetry_ok && identity_ok; }
};

// Antisymmetry + the 2-cocycle identity on seeded random triples.
CocycleCheckReport verify_cocycle(const GroupInstance& g, const BilinearMap& alpha, int samples,
                                  uint64_t seed);

// Reads (a, b, c) off finitely many probe pairs along the multiples of the
// probe base point x0 (first generator with nonzero pairing). The input must
// be a genuine 2-cocycle; inconsistent probes throw.
CohomologyClass extract_class(const GroupInstance& g, const BilinearMap& alpha);

// Exact null space of a functional-equation window system.
struct FeOracleResult {
    int dimension = 0;
    // each vector lists f(-N) ... f(N)
    std::vector<std::vector<Scalar>> basis;
    int window = 0;
};

// (k-l) f(k+l) = (k+l)(f(k) - f(l)) over the window [-N, N]; f(0) = 0.
// Solution space is spanned by k and k^2.
FeOracleResult solve_cubic_fe(int window);

// d(y-x) f(x+y) = d(y) f(y) - d(x) f(x) along integer multiples of the
// generator of a kind-Z instance. Solution space is spanned by d(x) and 1.
FeOracleResult solve_linear_fe(int window, const GroupInstance& g);

// Residuals for candidate solutions, exposed for oracle cross-checks.
Scalar cubic_fe_residual(const std::function<Scalar(long long)>& f, long long k, long long l);
Scalar linear_fe_residual(const GroupInstance& g, const std::function<Scalar(long long)>& f,
                          long long k, long long l);

// True when candidate (as f(k) values over the window) lies in span(basis).
bool in_span(const std::vector<std::vector<Scalar>>& basis, const std::vector<Scalar>& candidate);

}  // namespace hv
