#pragma once

#include <map>
#include <optional>
#include <vector>

#include "km/cartan.hpp"
#include "km/f_lattice.hpp"
#include "km/numeric.hpp"

// Root tests, Weyl normal forms and the exact root-multiplicity engine.
//
// For the rank-3 algebra F the root system is Phi = { N != 0 : det(N) >= -1 }:
// det -1 real, det 0 light-cone, det >= 1 timelike imaginary.  For other
// symmetrizable ambients membership is decided through the multiplicity
// engine and is three-valued.

namespace km {

enum class RootKind { real, lightcone, imaginary };
enum class RootSign { positive, negative };

struct RootStatus {
  bool is_root = false;
  std::optional<RootKind> kind;
  std::optional<RootSign> sign;
  Int det = 0;
  Int norm = 0;
  Int level = 0;
};

// Error: ZeroVector.
RootStatus root_status_F(const SymMat2& n);

// All roots with level in [level_min, level_max] and coordinate height
// |n_-1| + |n_0| + |n_1| <= height_bound, sorted by (height, n_-1, n_0, n_1).
std::vector<SymMat2> enumerate_roots_F(Int level_min, Int level_max, Int height_bound);

struct NormalForm {
  Int a;      // [a 0; 0 0] for the light-cone form, [a 0; 0 1] for level 1
  Pgl2 word;  // weyl_apply(word, input) is the normal form
};

// W-orbit normal form of a nonzero det-0 vector.  Errors: ZeroVector, NotLightcone.
NormalForm lightcone_normal_form(const SymMat2& n);

// <r_0, r_1>-orbit normal form of a level-1 root; a = det of the input.
// Errors: WrongLevel, NotRoot.
NormalForm level1_normal_form(const SymMat2& n);

struct RootString {
  Int p, q;  // beta_j + k beta_i is a root exactly for -p <= k <= q
};

// Root string through beta_j along a real root beta_i, in F.
// Errors: NotRoot, NotRealRoot.
RootString root_string_F(const SymMat2& beta_j, const SymMat2& beta_i);

// Number of partitions of n.  Error: NegativeIndex.
BigInt partition_p(Int n);

enum class RootTest { yes, no, unknown };

// Exact root multiplicities of a symmetrizable Kac-Moody algebra with
// nondegenerate symmetrized form, computed by the standard height recursion
// on c_beta = sum_{k | beta} mult(beta/k)/k with
//   (beta, beta - 2 rho) c_beta = sum_{b' + b'' = beta} (b', b'') c_b' c_b''.
// All arithmetic is exact rational; stored multiplicities are big integers.
class MultiplicityTable {
 public:
  // gram may be any positive rational multiple of the true Gram matrix.
  MultiplicityTable(Gcm gcm, QMat gram, Int height_bound);

  Int rank() const { return gcm_.n(); }
  Int frontier() const { return bound_; }
  const Gcm& gcm() const { return gcm_; }

  // Multiplicity of an arbitrary coefficient vector; vectors of mixed sign or
  // off the root lattice count 0.  Error: HeightOverflow beyond the frontier.
  BigInt mult(const IVec& beta) const;

  // Three-valued root test; `unknown` only beyond the frontier.
  RootTest is_root(const IVec& beta) const;

  // Positive vectors with nonzero multiplicity, in (height, lex) order.
  const std::vector<std::pair<IVec, BigInt>>& entries() const { return entries_; }

 private:
  Gcm gcm_;
  IMat gram_;  // primitive integer rescaling of the input gram
  QVec rho_;   // (rho, a_i) = (a_i, a_i)/2 in the rescaled form
  Int bound_;
  std::map<std::vector<Int>, BigInt> mult_;
  std::vector<std::pair<IVec, BigInt>> entries_;

  void build();
};

// Engine over F itself (simple roots alpha_{-1}, alpha_0, alpha_1; coordinate
// order matches Coords).
MultiplicityTable peterson_table_F(Int height_bound);
BigInt mult_F(const MultiplicityTable& t, const SymMat2& n);

// Representative of the W-orbit with all simple pairings <= 0 (positive side).
// Coordinate height never increases, so table lookups through the dominant
// representative need a much smaller frontier.  Error: ZeroVector.
SymMat2 dominant_rep_F(const SymMat2& n);

// mult_F through the dominant representative: exact for any lattice vector
// whose dominant height fits the frontier.  Real roots and non-roots are
// settled without touching the table.
BigInt mult_F_reduced(const MultiplicityTable& t, const SymMat2& n);

// Rank-2 engine for the Cartan matrix [[2, -m], [-m, 2]].
MultiplicityTable peterson_table_H(Int m, Int height_bound);

// Level-2 multiplicity generating function: coefficient of q^(2a) is the
// multiplicity of [a 1; 1 2], coefficient of q^(2a+1) that of [a 0; 0 2].
//   [sum p(n) q^n] * [prod (1 - q^(4j-2))] * q^-3/2 *
//   [prod (1 + q^(2j-1)) - prod (1 - q^(2j-1)) - 2q]
std::vector<BigInt> level2_genfunc(Int terms);

// The level-2 root whose multiplicity sits at exponent n of the generating
// function; det = n - 1.
SymMat2 level2_root_for_exponent(Int n);

}  // namespace km
