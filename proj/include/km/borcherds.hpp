#pragma once

#include <array>
#include <map>
#include <vector>

#include "km/f_lattice.hpp"
#include "km/numeric.hpp"
#include "km/roots_mult.hpp"
#include "km/witt.hpp"

// The coplanar subalgebras sliced out of the rank-3 algebra by the plane of
// b0 = alpha_{-1} and b1 = m(alpha_0 + alpha_1) - alpha_1 (sign minus, m >= 3),
// graded by the pair (a0, a1) with H-height a0 + a1: multiplicity gap tables
// against the rank-3 oracle, the recursive imaginary-simple multiplicities
// mu(beta), and the rank-2 line decomposition M- + sl2 + M+.

namespace km {

using Grade2 = std::array<Int, 2>;
using Dims2 = std::map<Grade2, BigInt>;

// H-height of a coefficient pair; distinct from the height as a rank-3 root.
inline Int hheight(const Grade2& g) { return g[0] + g[1]; }

// Rank-3 coordinates of a0 b0 + a1 b1.
inline Coords plane_coords(Int m, const Grade2& g) {
  return Coords{g[0], m * g[1], (m - 1) * g[1]};
}

// Squared length 2(a0^2 + a1^2 - m a0 a1); a nonzero pair is a root of the
// rank-3 algebra exactly when this is <= 2.
inline Int plane_norm(Int m, const Grade2& g) {
  return 2 * (g[0] * g[0] + g[1] * g[1] - m * g[0] * g[1]);
}

// Multiplicities of the rank-2 algebra [[2,-m],[-m,2]] extended by imaginary
// simple roots with the given counts, extracted from the denominator identity
// truncated at the H-height bound.  Only singleton correction sets arise: the
// plane lattice has no null vectors for m >= 3.
// Errors: InputError (m < 3, bad grades), InternalError (extraction produced
// a non-integral or negative multiplicity).
Dims2 gkm_plane_dims(Int m, const Dims2& imaginary_simples, Int hheight_bound);

struct PlaneRootRow {
  Int a0 = 0, a1 = 0;
  Coords f_coords;  // the same vector as a rank-3 root
  Int norm = 0;
  BigInt mult_F, mult_H, gap;  // gap = mult_F - mult_H >= 0
};

struct PlaneSlice {
  Int m = 0;
  Int hheight_bound = 0;
  std::vector<PlaneRootRow> rows;  // (H-height, a0) order
};

// Largest rank-3 coordinate height among coplanar roots with H-height up to
// the bound; sizes a shared multiplicity table.
Int plane_f_height(Int m, Int hheight_bound);

// Table frontier sufficient for every slice query when lookups go through
// dominant representatives; much smaller than plane_f_height for large m.
Int plane_dominant_height(Int m, Int hheight_bound);

// Every coplanar root with H-height <= bound, with both multiplicities.  The
// supplied rank-3 table must cover plane_f_height(m, hheight_bound).
PlaneSlice plane_roots(Int m, Int hheight_bound, const MultiplicityTable& f_table);
PlaneSlice plane_roots(Int m, Int hheight_bound);

// The reporting view of the same data (rows carry the gap column).
PlaneSlice plane_gap_table(Int m, Int hheight_bound);

struct SimpleMultTable {
  Int m = 0;
  Int hheight_bound = 0;
  // mu(beta) = dim(F_beta) - dim(G^(i-1)_beta) at beta's H-height level i,
  // for every coplanar root; zero on real roots.
  Dims2 mu;
  // Free-generator counts of the complement (gap dims) via witt_invert,
  // reported side by side with mu; empty with free_gens_ok = false when the
  // gap profile is not free.
  Dims2 free_gens;
  bool free_gens_ok = true;
};

// Level-by-level imaginary-simple multiplicities.  After the last level the
// extended engine must reproduce the rank-3 multiplicities on every plane
// grade (self-consistency replay).
// Errors: NegativeMu, InternalError (replay mismatch).
SimpleMultTable mu_simple_mults(Int m, Int hheight_bound, const MultiplicityTable& f_table);
SimpleMultTable mu_simple_mults(Int m, Int hheight_bound);

struct LineDecomposition {
  Int height_bound = 0;
  // dims[n-1] = multiplicity of n(b0 + b1) in the m = 3 algebra, n = 1..bound
  std::vector<BigInt> dims;
  // the grade +-1 spaces together with h1 + h2 form the sl2 summand
  BigInt grade1 = 0;
  GradedDims m_plus;           // 1-dimensional grades {n}, n >= 2
  GradedDims free_generators;  // witt_invert(m_plus)
};

// Decomposition along the line n(b0 + b1) for m = 3.
// Errors: InputError, those of witt_invert.
LineDecomposition line_borcherds_h3(Int height_bound);

}  // namespace km
