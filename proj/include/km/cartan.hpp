#pragma once

#include <string>
#include <utility>
#include <vector>

#include "km/numeric.hpp"

// Generalized Cartan matrices and the finite / affine / indefinite trichotomy.
// Convention used throughout: C(i,j) = 2 (a_i, a_j) / (a_j, a_j), so row i of C
// lists the Cartan pairings of a_i against the coroots.

namespace km {

struct Gcm {
  IMat a;

  Int n() const { return a.rows(); }
};

// Checks squareness, diagonal 2, off-diagonal <= 0 and the zero-pairing
// symmetry C(i,j) = 0 <=> C(j,i) = 0.  Error: NonCartan.
Gcm validate_gcm(const IMat& m);

enum class CartanKind { finite, affine, indefinite };

struct CartanClass {
  CartanKind kind;
  bool hyperbolic = false;  // meaningful for indefinite indecomposable matrices
};

const char* to_string(CartanKind k);

// Exact integer determinant (fraction-free elimination).
BigInt det_exact(const IMat& m);

// Classification of an indecomposable GCM by principal-minor signs.
// Error: Decomposable.
CartanClass classify(const Gcm& g);

// Component-wise classification for possibly decomposable matrices (used by
// subalgebra reports): finite iff every component is finite, affine iff every
// component is finite or affine with at least one affine, else indefinite.
CartanClass classify_components(const Gcm& g);

// Left symmetrizer: positive diagonal D with D*M symmetric, minimal positive
// integer entries.  Returns (diagonal of D, D*M).  Error: NotSymmetrizable.
std::pair<IVec, IMat> symmetrize(const Gcm& g);

// Gram matrix G(i,j) = (a_i, a_j) under the convention above, scaled to the
// minimal positive integer matrix.  G(j,j) = 2 eps_j.
IMat gram_matrix(const Gcm& g);

// Primitive positive integer kernel vector of an affine GCM, normalized so the
// mark of affine_node is 1.  Error: NotAffine.
IVec marks(const Gcm& g, Int affine_node);

// Named finite types "A1".."A8", "B2".., "C2".., "D4".., "E6", "E7", "E8",
// "F4", "G2" (Bourbaki numbering).  Error: UnknownType.
Gcm finite_type(const std::string& label);

// All positive roots of a finite-type GCM, as coefficient vectors.
std::vector<IVec> finite_positive_roots(const Gcm& fin);

// The highest root of an indecomposable finite-type GCM.
IVec highest_root(const Gcm& fin);

// Double extension of a finite-type GCM: affine vertex 0 attached through the
// highest root, then a norm-2 over-extended vertex -1 attached to vertex 0 by
// a single bond.  Index order in `full` and `gram` is [-1, 0, 1..r].
struct Overextension {
  Gcm finite;
  Gcm affine;    // (r+1) x (r+1), node 0 first
  Gcm full;      // (r+2) x (r+2), node -1 first
  QMat gram;     // Gram of `full`, normalized so (a_0, a_0) = 2
  IVec marks;    // kernel marks of `affine` (first entry 1)
  std::string label;
};

// Error: NotFinite.
Overextension overextend(const Gcm& fin, const std::string& label = "");

enum class SeriesVariant { rank_r1, rank_r2 };

// Determinant identities satisfied by the series Cartan matrices:
//   rank_r1: det C = 2 det C' - m^2 det C''   (C' = C minus node 0,
//            C'' = C' minus its first node)
//   rank_r2: det C = -m^2 det C''             (C'' = C minus nodes 0 and 1)
bool det_identity_check(const IMat& c, Int m, SeriesVariant v);

}  // namespace km
