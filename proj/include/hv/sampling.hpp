#pragma once

#include "hv/algebra.hpp"
#include "hv/rng.hpp"

namespace hv {

// Shared random generators for the property suites and tests. Coefficients
// come from a small pool so values stay readable in witnesses; everything is
// exact regardless.

Scalar random_coefficient(Rng& rng);                       // {+-1, +-2, +-1/2, +-1/3}
Scalar random_nonzero_scalar(const GroupInstance& g, Rng& rng);  // may use sqrt(d) in quadratic mode
GroupElement random_group_element(const GroupInstance& g, Rng& rng, int radius = 4);
BasisSymbol random_symbol(const GroupInstance& g, AlgebraTag tag, Rng& rng, int radius = 4);
AlgebraElement random_element(const GroupInstance& g, AlgebraTag tag, Rng& rng, int max_support = 4,
                              int radius = 4);

}  // namespace hv
