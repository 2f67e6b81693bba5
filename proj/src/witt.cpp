#include "km/witt.hpp"

#include <algorithm>
#include <set>

#include "km/errors.hpp"

namespace km {

namespace {

Int gheight(const Grade& g) {
  Int s = 0;
  for (Int v : g) s += v;
  return s;
}

size_t validate(const GradedDims& d, Int bound) {
  if (bound < 1) fail("InputError", "height bound must be >= 1");
  size_t dim = 0;
  for (const auto& [g, c] : d) {
    if (dim == 0) dim = g.size();
    if (g.empty() || g.size() != dim) fail("InputError", "grades must share one fixed dimension");
    for (Int v : g)
      if (v < 0) fail("InputError", "grades must lie in the positive cone");
    if (gheight(g) < 1) fail("InputError", "the zero grade is not allowed");
    if (c < 0) fail("InputError", "graded counts must be nonnegative");
  }
  return dim;
}

BigInt binom(const BigInt& n, Int k) {
  BigInt r = 1;
  for (Int i = 1; i <= k; ++i) r = r * (n - i + 1) / i;
  return r;
}

// P *= (1 - x^g)^count, truncated to total degree <= bound
void mul_factor(GradedDims& P, const Grade& g, const BigInt& count, Int bound) {
  const Int h = gheight(g);
  const Int kmax = bound / h;
  if (kmax == 0 || count == 0) return;
  std::vector<BigInt> coef(kmax + 1);
  for (Int k = 0; k <= kmax; ++k) coef[k] = (k % 2 ? -binom(count, k) : binom(count, k));
  GradedDims out;
  for (const auto& [gp, c] : P) {
    const Int hp = gheight(gp);
    Grade ng = gp;
    for (Int k = 0; k <= kmax && hp + k * h <= bound; ++k) {
      if (k > 0)
        for (size_t i = 0; i < ng.size(); ++i) ng[i] += g[i];
      out[ng] += c * coef[k];
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  P = std::move(out);
}

}  // namespace

GradedDims witt_invert(const GradedDims& dims, Int height_bound) {
  const size_t dim = validate(dims, height_bound);
  GradedDims gens;
  if (dims.empty()) return gens;

  GradedDims P;
  P[Grade(dim, 0)] = 1;
  for (const auto& [g, c] : dims)
    if (gheight(g) <= height_bound) mul_factor(P, g, c, height_bound);

  for (const auto& [g, c] : P) {
    if (gheight(g) == 0) continue;
    if (c > 0)
      fail("NegativeGeneratorCount",
           "dimensions are not those of a free Lie algebra on nonnegatively many generators");
    gens[g] = -c;
  }
  return gens;
}

GradedDims witt_expand(const GradedDims& gens, Int height_bound) {
  const size_t dim = validate(gens, height_bound);
  GradedDims L;
  if (gens.empty()) return L;

  // L is supported on the monoid generated by the generator grades.
  std::set<Grade> reachable;
  std::vector<Grade> frontier;
  for (const auto& [g, c] : gens)
    if (c > 0 && gheight(g) <= height_bound && reachable.insert(g).second) frontier.push_back(g);
  std::vector<Grade> support;
  for (const auto& g : reachable) support.push_back(g);
  while (!frontier.empty()) {
    std::vector<Grade> next;
    for (const Grade& g : frontier)
      for (const Grade& s : support) {
        Grade ng(dim);
        for (size_t i = 0; i < dim; ++i) ng[i] = g[i] + s[i];
        if (gheight(ng) > height_bound) continue;
        if (reachable.insert(ng).second) next.push_back(ng);
      }
    frontier = std::move(next);
  }

  std::vector<Grade> order(reachable.begin(), reachable.end());
  std::sort(order.begin(), order.end(), [](const Grade& a, const Grade& b) {
    Int ha = gheight(a), hb = gheight(b);
    return ha != hb ? ha < hb : a < b;
  });

  GradedDims P;
  P[Grade(dim, 0)] = 1;
  for (const Grade& g : order) {
    // coefficient of the target 1 - sum f x^beta at g, versus the partial product
    BigInt target = 0;
    if (auto it = gens.find(g); it != gens.end()) target = -it->second;
    BigInt pg = 0;
    if (auto it = P.find(g); it != P.end()) pg = it->second;
    BigInt lv = pg - target;
    if (lv < 0) fail("InternalError", "free Lie algebra dimension came out negative");
    if (lv == 0) continue;
    L[g] = lv;
    mul_factor(P, g, lv, height_bound);
  }
  return L;
}

}  // namespace km
