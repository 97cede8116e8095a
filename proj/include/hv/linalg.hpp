#pragma once

#include <vector>

#include "hv/scalar.hpp"

namespace hv {

using ScalarVector = std::vector<Scalar>;
using ScalarMatrix = std::vector<ScalarVector>;

// In-place reduced row echelon form by exact Gaussian elimination; returns the
// pivot column indices. No tolerances exist anywhere: a pivot is any nonzero
// entry.
std::vector<int> rref(ScalarMatrix& m);

// Basis of { x : m x = 0 }, one vector per free column, from the RREF.
std::vector<ScalarVector> null_space(ScalarMatrix m);

}  // namespace hv
