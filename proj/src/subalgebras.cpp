#include "km/subalgebras.hpp"

#include <algorithm>
#include <boost/multiprecision/integer.hpp>

#include "km/errors.hpp"

namespace km {

namespace {

Rational pairing(const QMat& gram, const IVec& x, const IVec& y) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (Eigen::Index j = 0; j < y.size(); ++j) s += Rational(x[i]) * gram(i, j) * Rational(y[j]);
  }
  return s;
}

// -1: all entries <= 0 (some < 0), 0: zero or mixed, +1: all >= 0 (some > 0).
int sign_class(const IVec& v) {
  bool pos = false, neg = false;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] > 0) pos = true;
    if (v[i] < 0) neg = true;
  }
  if (pos && !neg) return 1;
  if (neg && !pos) return -1;
  return 0;
}

Coords as_coords(const IVec& v) { return Coords{v[0], v[1], v[2]}; }

void check_rank(const Ambient& a, const IVec& v) {
  if (v.size() != a.rank()) fail("InputError", "coefficient vector has the wrong length");
}

// Membership of a sign-definite positive vector supported on the affine nodes
// (v[0] == 0).  Exact: a vector in the span of a sub-diagram's simple roots is
// a root iff it is a root of the sub-diagram's algebra, and the affine root
// system is k delta + (Delta_fin or 0).
RootTest affine_slice_test(const Ambient& a, const IVec& v) {
  const Overextension& oe = *a.oe;
  const Int r = oe.finite.n();
  const Int k = v[1];  // delta has alpha_0-coefficient 1
  IVec gamma(r);
  for (Int j = 0; j < r; ++j) gamma[j] = v[2 + j] - k * oe.marks[1 + j];
  if (gamma == IVec::Zero(r)) return k != 0 ? RootTest::yes : RootTest::no;
  IVec g = sign_class(gamma) < 0 ? IVec(-gamma) : gamma;
  for (const IVec& fr : a.finite_roots)
    if (g == fr) return RootTest::yes;
  return RootTest::no;
}

}  // namespace

Ambient ambient_F() {
  IMat c(3, 3);
  c << 2, -1, 0, -1, 2, -2, 0, -2, 2;
  Ambient a;
  a.gcm = validate_gcm(c);
  a.gram = c.cast<Rational>();  // simple roots all of norm 2
  a.exact = true;
  return a;
}

Ambient ambient_lorentzian(const Overextension& oe, Int probe_height) {
  Ambient a;
  a.gcm = oe.full;
  a.gram = oe.gram;
  a.exact = false;
  a.oe = oe;
  a.finite_roots = finite_positive_roots(oe.finite);
  if (probe_height > 0) a.probe.emplace(oe.full, oe.gram, probe_height);
  return a;
}

bool is_positive_real_root(const Ambient& a, const IVec& v0) {
  check_rank(a, v0);
  if (sign_class(v0) != 1) return false;
  if (a.exact) {
    RootStatus st = root_status_F(to_matrix(as_coords(v0)));
    return st.is_root && st.kind == RootKind::real;
  }
  // Reflect down: a positive real root reaches a simple root through simple
  // reflections that strictly lower the height; anything else falls out of the
  // positive cone or runs out of height-lowering reflections.
  const IMat& c = a.gcm.a;
  const Int n = a.rank();
  IVec v = v0;
  Int hsum = 0;
  for (Int i = 0; i < n; ++i) hsum += v[i];
  while (true) {
    if (hsum == 1) return true;  // nonnegative with sum 1: a simple root
    Int best = -1, p_best = 0;
    for (Int i = 0; i < n && best < 0; ++i) {
      Int p = 0;
      for (Int j = 0; j < n; ++j) p += v[j] * c(j, i);
      if (p > 0) {
        best = i;
        p_best = p;
      }
    }
    if (best < 0) return false;  // inside the imaginary cone
    v[best] -= p_best;
    hsum -= p_best;
    if (v[best] < 0) return false;  // left the positive cone: not a root
  }
}

RootTest ambient_root_test(const Ambient& a, const IVec& v0) {
  check_rank(a, v0);
  if (a.exact) {
    SymMat2 x = to_matrix(as_coords(v0));
    if (x.is_zero()) return RootTest::no;
    return det2(x) >= -1 ? RootTest::yes : RootTest::no;
  }
  int sc = sign_class(v0);
  if (sc == 0) return RootTest::no;  // zero or mixed sign
  IVec v = sc < 0 ? IVec(-v0) : v0;
  if (v[0] == 0) return affine_slice_test(a, v);
  Rational norm = pairing(a.gram, v, v);
  if (norm > 0) return is_positive_real_root(a, v) ? RootTest::yes : RootTest::no;
  if (a.probe) {
    Int h = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) h += v[i];
    if (h <= a.probe->frontier()) return a.probe->is_root(v);
  }
  return RootTest::unknown;
}

const char* to_string(Validity v) {
  switch (v) {
    case Validity::valid: return "Valid";
    case Validity::conditionally_valid: return "ConditionallyValid";
    case Validity::invalid: return "Invalid";
  }
  return "?";
}

const char* to_string(RootTest t) {
  switch (t) {
    case RootTest::yes: return "IsRoot";
    case RootTest::no: return "NotRoot";
    case RootTest::unknown: return "Unknown";
  }
  return "?";
}

SubalgebraReport check_simple_set(const Ambient& amb, const std::vector<IVec>& roots) {
  const Int k = static_cast<Int>(roots.size());
  if (k == 0) fail("InputError", "candidate set is empty");
  for (const IVec& r : roots) check_rank(amb, r);
  for (Int i = 0; i < k; ++i)
    for (Int j = i + 1; j < k; ++j)
      if (roots[i] == roots[j]) fail("InputError", "candidate roots must be distinct");

  // A member that is a positive root but fails the real test is kept around
  // until the difference scan so that a set broken for the stronger reason
  // (some beta_i - beta_j is a root) reports that instead.
  std::vector<bool> real(k);
  for (Int i = 0; i < k; ++i) {
    real[i] = is_positive_real_root(amb, roots[i]);
    if (real[i]) continue;
    if (sign_class(roots[i]) != 1 || ambient_root_test(amb, roots[i]) == RootTest::no)
      fail("NotPositiveReal", "candidate is not a positive real root of the ambient algebra");
  }

  SubalgebraReport rep;
  rep.roots = roots;

  QMat pair(k, k);
  for (Int i = 0; i < k; ++i)
    for (Int j = 0; j <= i; ++j) {
      pair(i, j) = pairing(amb.gram, roots[i], roots[j]);
      pair(j, i) = pair(i, j);
    }

  rep.difference_verdicts.assign(k, std::vector<RootTest>(k, RootTest::no));
  bool any_unknown = false;
  for (Int i = 0; i < k; ++i)
    for (Int j = 0; j < k; ++j) {
      if (i == j) continue;
      RootTest t;
      if (real[i] && real[j] && pair(i, j) > 0) {
        // (b_i, b_j) > 0 with b_i != +-b_j forces b_i - b_j into the root
        // system (string through b_i along the real root b_j), so this is
        // decisive even when the general test would say `unknown`.
        t = RootTest::yes;
      } else {
        t = ambient_root_test(amb, roots[i] - roots[j]);
      }
      rep.difference_verdicts[i][j] = t;
      if (t == RootTest::yes && !rep.offending_pair) rep.offending_pair = {i, j};
      if (t == RootTest::unknown) any_unknown = true;
    }

  rep.validity = rep.offending_pair ? Validity::invalid
               : any_unknown        ? Validity::conditionally_valid
                                    : Validity::valid;

  if (rep.validity != Validity::invalid)
    for (Int i = 0; i < k; ++i)
      if (!real[i]) fail("NotPositiveReal", "candidate is not a positive real root of the ambient algebra");

  bool norms_ok = true;
  for (Int j = 0; j < k; ++j)
    if (pair(j, j) == 0) norms_ok = false;
  if (norms_ok) {
    IMat cartan(k, k);
    for (Int i = 0; i < k; ++i)
      for (Int j = 0; j < k; ++j) {
        Rational c = 2 * pair(i, j) / pair(j, j);
        if (!is_integer(c)) fail("NonIntegralCartan", "pairing 2(b_i,b_j)/(b_j,b_j) is not an integer");
        cartan(i, j) = numerator(c).convert_to<Int>();
      }
    rep.cartan = cartan;
    try {
      rep.classification = classify_components(validate_gcm(cartan));
    } catch (const Error&) {
      rep.classification = std::nullopt;  // positive off-diagonal entry: not a GCM
    }
  }

  rep.dependencies = linear_dependencies(roots, amb.rank());
  return rep;
}

std::vector<IVec> series_h(Int m, int sign) {
  if (m < 1) fail("InputError", "series needs m >= 1");
  if (sign != 1 && sign != -1) fail("InputError", "sign must be +1 or -1");
  IVec b0(3), b1(3);
  b0 << 1, 0, 0;
  b1 << 0, m, m + sign;
  return {b0, b1};
}

std::vector<IVec> series_rank_r1(const Overextension& oe, Int m) {
  if (m < 0) fail("InputError", "series needs m >= 0");
  const Int r = oe.finite.n();
  const Int n = r + 2;
  std::vector<IVec> out;
  IVec b0 = IVec::Zero(n);
  b0[0] = 1;
  out.push_back(b0);
  IVec b1 = IVec::Zero(n);
  for (Int j = 0; j <= r; ++j) b1[1 + j] = m * oe.marks[j];  // m delta
  b1[2] += 1;                                                // + alpha_1
  out.push_back(b1);
  for (Int j = 2; j <= r; ++j) {
    IVec e = IVec::Zero(n);
    e[1 + j] = 1;
    out.push_back(e);
  }
  return out;
}

std::vector<IVec> series_rank_r2(const Overextension& oe, Int m) {
  if (m < 1) fail("InputError", "series needs m >= 1");
  const Int r = oe.finite.n();
  const Int n = r + 2;
  std::vector<IVec> out;
  IVec g = IVec::Zero(n);
  g[0] = 1;
  out.push_back(g);
  IVec g0 = IVec::Zero(n);
  for (Int j = 0; j <= r; ++j) g0[1 + j] = (m - 1) * oe.marks[j];  // (m-1) delta
  g0[1] += 1;                                                      // + alpha_0
  out.push_back(g0);
  for (Int j = 1; j <= r; ++j) {
    IVec e = IVec::Zero(n);
    e[1 + j] = 1;
    out.push_back(e);
  }
  return out;
}

const std::map<std::string, std::vector<IVec>>& example_fixtures() {
  static const std::map<std::string, std::vector<IVec>> fixtures = [] {
    auto v = [](Int a, Int b, Int c) {
      IVec x(3);
      x << a, b, c;
      return x;
    };
    std::map<std::string, std::vector<IVec>> m;
    m["fundamental"] = {v(1, 0, 0), v(0, 1, 0), v(0, 0, 1)};
    m["example-4.1"] = {v(0, 0, 1), v(0, 2, 1), v(2, 2, 1)};
    m["example-4.1b"] = {v(0, 0, 1), v(0, 1, 0), v(4, 4, 3)};
    m["example-4.2"] = {v(0, 2, 3), v(2, 6, 3), v(4, 4, 3)};
    m["example-4.3"] = {v(0, 0, 1), v(2, 6, 3), v(4, 6, 3)};
    m["example-4.4"] = {v(1, 1, 0), v(0, 1, 2), v(0, 4, 3)};
    m["example-4.5"] = {v(1, 1, 0), v(2, 2, 3), v(0, 2, 3), v(0, 4, 3)};
    return m;
  }();
  return fixtures;
}

std::vector<IVec> linear_dependencies(const std::vector<IVec>& roots, Int ambient_rank) {
  const Int k = static_cast<Int>(roots.size());
  QMat a(ambient_rank, k);
  for (Int j = 0; j < k; ++j) {
    if (roots[j].size() != ambient_rank) fail("InputError", "coefficient vector has the wrong length");
    for (Int i = 0; i < ambient_rank; ++i) a(i, j) = Rational(roots[j][i]);
  }

  std::vector<Int> pivot_cols;
  Int row = 0;
  for (Int col = 0; col < k && row < ambient_rank; ++col) {
    Int pr = -1;
    for (Int i = row; i < ambient_rank; ++i)
      if (a(i, col) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (Int j = 0; j < k; ++j) std::swap(a(row, j), a(pr, j));
    const Rational piv = a(row, col);
    for (Int j = 0; j < k; ++j) a(row, j) /= piv;
    for (Int i = 0; i < ambient_rank; ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (Int j = 0; j < k; ++j) a(i, j) -= f * a(row, j);
    }
    pivot_cols.push_back(col);
    ++row;
  }

  std::vector<IVec> out;
  for (Int col = 0; col < k; ++col) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), col) != pivot_cols.end()) continue;
    QVec t = QVec::Zero(k);
    t[col] = 1;
    for (size_t i = 0; i < pivot_cols.size(); ++i) t[pivot_cols[i]] = -a(static_cast<Int>(i), col);
    BigInt scale = 1;
    for (Int j = 0; j < k; ++j) scale = boost::multiprecision::lcm(scale, denominator(t[j]));
    IVec v(k);
    for (Int j = 0; j < k; ++j)
      v[j] = BigInt(numerator(t[j]) * (scale / denominator(t[j]))).convert_to<Int>();
    Int g = content_gcd(v);
    if (g > 1)
      for (Int j = 0; j < k; ++j) v[j] /= g;
    for (Int j = 0; j < k; ++j) {
      if (v[j] == 0) continue;
      if (v[j] < 0) v = -v;
      break;
    }
    out.push_back(v);
  }
  return out;
}

std::string CommutatorWord::text() const {
  auto name = [](int i) { return "e" + std::to_string(i); };
  std::string s = name(letters.back());
  for (auto it = letters.rbegin() + 1; it != letters.rend(); ++it)
    s = "[" + name(*it) + ", " + s + "]";
  return s;
}

CommutatorWord commutator_word(const Coords& beta) {
  SymMat2 x = to_matrix(beta);
  if (x.is_zero()) fail("NotPositiveReal", "zero vector");
  RootStatus st = root_status_F(x);
  if (!st.is_root || st.kind != RootKind::real || st.sign != RootSign::positive)
    fail("NotPositiveReal", "commutator words are built for positive real roots");

  CommutatorWord w;
  w.target = beta;
  Coords cur = beta;
  Int h = std::abs(cur[0]) + std::abs(cur[1]) + std::abs(cur[2]);
  while (h > 1) {
    int best = -2;
    Int best_pair = 0;
    SymMat2 cx = to_matrix(cur);
    for (int i = -1; i <= 1; ++i) {
      Coords next = cur;
      next[i + 1] -= 1;
      if (next[0] < 0 || next[1] < 0 || next[2] < 0) continue;
      if (det2(to_matrix(next)) < -1) continue;  // prefix must stay a root
      Int p = bilinear(cx, alpha(i));
      if (best == -2 || p > best_pair) {
        best = i;
        best_pair = p;
      }
    }
    if (best == -2) fail("NoDescent", "no simple root keeps the prefix inside the root system");
    w.letters.push_back(best);
    cur[best + 1] -= 1;
    h -= 1;
  }
  for (int i = -1; i <= 1; ++i)
    if (cur[i + 1] == 1) w.letters.push_back(i);
  return w;
}

}  // namespace km
