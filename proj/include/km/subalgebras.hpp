#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "km/cartan.hpp"
#include "km/f_lattice.hpp"
#include "km/roots_mult.hpp"

// Subalgebras from subsets of positive real roots: a candidate set is simple
// for a subalgebra exactly when no pairwise difference is a root of the
// ambient algebra.  Includes the three series constructions, the worked
// example sets, linear-dependency detection and commutator words.

namespace km {

// An ambient algebra to test roots against: the rank 3 algebra itself (every
// membership question settled by the determinant) or a general over-extension
// (membership of deep imaginary vectors may be undecided).
struct Ambient {
  Gcm gcm;
  QMat gram;    // (a_i, a_j)
  bool exact;   // true: root tests never return `unknown`

  std::optional<Overextension> oe;               // present for the general case
  std::vector<IVec> finite_roots;                // Delta^+ of the finite part
  std::optional<MultiplicityTable> probe;        // imaginary-root probe table

  Int rank() const { return gcm.n(); }
};

// The rank 3 ambient; coefficient vectors are Coords as IVec(3).
Ambient ambient_F();

// Over-extension ambient with index order [-1, 0, 1..r].  probe_height > 0
// attaches a multiplicity table used to decide imaginary vectors up to that
// height; vectors beyond every exact rule come back `unknown`.
Ambient ambient_lorentzian(const Overextension& oe, Int probe_height = 0);

// Three-valued membership of an arbitrary coefficient vector in the ambient
// root system.
RootTest ambient_root_test(const Ambient& a, const IVec& v);

// Exact test: positive real roots descend to a simple root through simple
// reflections that lower the height.
bool is_positive_real_root(const Ambient& a, const IVec& v);

enum class Validity { valid, conditionally_valid, invalid };

const char* to_string(Validity v);
const char* to_string(RootTest t);

struct SubalgebraReport {
  std::vector<IVec> roots;
  // C(i,j) = 2 (b_i, b_j) / (b_j, b_j); absent only for invalid reports in
  // which some tolerated member has norm 0.
  std::optional<IMat> cartan;
  std::vector<std::vector<RootTest>> difference_verdicts;  // b_i - b_j in Phi?
  std::vector<IVec> dependencies;
  std::optional<CartanClass> classification;  // absent when not a valid GCM
  Validity validity = Validity::invalid;
  std::optional<std::pair<Int, Int>> offending_pair;  // first difference found in Phi
};

// Errors: NotPositiveReal (candidate fails the positive-real test),
// InputError (empty set, duplicates, rank mismatch), NonIntegralCartan.
// A candidate that is a positive root but imaginary is tolerated just long
// enough to see whether some pairwise difference is a root: that gives the
// more informative invalid report.  Otherwise it raises NotPositiveReal.
SubalgebraReport check_simple_set(const Ambient& a, const std::vector<IVec>& roots);

// {alpha_-1, m(alpha_0 + alpha_1) + sign*alpha_1} in the rank 3 algebra;
// Cartan [[2, -m], [-m, 2]].  sign is +1 or -1; m >= 1.
std::vector<IVec> series_h(Int m, int sign);

// {alpha_-1, m delta + alpha_1, alpha_2..alpha_r} in an over-extension; the
// Cartan matrix keeps the finite block and couples through a -m corner.
// m >= 0.
std::vector<IVec> series_rank_r1(const Overextension& oe, Int m);

// {alpha_-1, (m-1) delta + alpha_0, alpha_1..alpha_r}; the affine block is
// preserved and the gamma-system's minimal null root is m delta.  m >= 1.
std::vector<IVec> series_rank_r2(const Overextension& oe, Int m);

// The five worked example sets plus the second index-6 triangle and the
// fundamental triangle, keyed "example-4.1".."example-4.5", "example-4.1b",
// "fundamental".  All in rank 3 coordinates (n_-1, n_0, n_1).
const std::map<std::string, std::vector<IVec>>& example_fixtures();

// Basis of the integer kernel of the coordinate matrix: vectors t with
// sum_i t_i roots_i = 0, primitive, first nonzero entry positive.
std::vector<IVec> linear_dependencies(const std::vector<IVec>& roots, Int ambient_rank);

// Nested commutator expression over the simple generators whose root sum is
// beta: letters outermost first, so {1, 0, 1} reads [e1, [e0, e1]].
struct CommutatorWord {
  std::vector<int> letters;  // simple indices in {-1, 0, 1}
  Coords target;

  std::string text() const;
};

// Greedy descent: always subtract the simple root with the largest pairing
// against the remainder, among those leaving a positive root.
// Errors: NotPositiveReal, NoDescent (cannot occur for real roots; guard).
CommutatorWord commutator_word(const Coords& beta);

}  // namespace km
