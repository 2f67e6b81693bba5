#pragma once

#include <map>
#include <vector>

#include "km/numeric.hpp"

// Graded free Lie algebras: dimensions of the homogeneous pieces versus
// generator counts, related by the product identity
//
//   prod_gamma (1 - x^gamma)^(L(gamma)) = 1 - sum_beta f(beta) x^beta
//
// solved grade by grade in exact integer arithmetic.  Grades live in a free
// commutative monoid of any fixed dimension; all computations are truncated
// at a total-degree (height) bound.

namespace km {

using Grade = std::vector<Int>;
using GradedDims = std::map<Grade, BigInt>;

// Generator counts f from graded dimensions L.
// Error: NegativeGeneratorCount when L is not the dimension profile of any
// free Lie algebra; InputError for malformed grades.
GradedDims witt_invert(const GradedDims& dims, Int height_bound);

// Graded dimensions L of the free Lie algebra on f(beta) generators in each
// grade beta.  Exact inverse of witt_invert up to the height bound.
GradedDims witt_expand(const GradedDims& gens, Int height_bound);

}  // namespace km
