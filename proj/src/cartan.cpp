#include "km/cartan.hpp"

#include <algorithm>
#include <numeric>

#include "km/errors.hpp"

namespace km {

const char* to_string(CartanKind k) {
  switch (k) {
    case CartanKind::finite: return "Finite";
    case CartanKind::affine: return "Affine";
    case CartanKind::indefinite: return "Indefinite";
  }
  return "?";
}

Gcm validate_gcm(const IMat& m) {
  if (m.rows() != m.cols() || m.rows() == 0) fail("NonCartan", "matrix must be square and nonempty");
  for (Int i = 0; i < m.rows(); ++i) {
    if (m(i, i) != 2) fail("NonCartan", "diagonal entries must equal 2");
    for (Int j = 0; j < m.cols(); ++j) {
      if (i == j) continue;
      if (m(i, j) > 0) fail("NonCartan", "off-diagonal entries must be <= 0");
      if ((m(i, j) == 0) != (m(j, i) == 0))
        fail("NonCartan", "C(i,j) = 0 requires C(j,i) = 0");
    }
  }
  return Gcm{m};
}

BigInt det_exact(const IMat& m) {
  const Int n = m.rows();
  if (n == 0) return 1;
  Mat<BigInt> w(n, n);
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < n; ++j) w(i, j) = m(i, j);
  // Bareiss fraction-free elimination
  BigInt prev = 1;
  Int sign = 1;
  for (Int k = 0; k + 1 < n; ++k) {
    if (w(k, k) == 0) {
      Int p = -1;
      for (Int i = k + 1; i < n; ++i)
        if (w(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      w.row(k).swap(w.row(p));
      sign = -sign;
    }
    for (Int i = k + 1; i < n; ++i) {
      for (Int j = k + 1; j < n; ++j)
        w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
      w(i, k) = 0;
    }
    prev = w(k, k);
  }
  return sign > 0 ? w(n - 1, n - 1) : -w(n - 1, n - 1);
}

namespace {

IMat principal_submatrix(const IMat& m, const std::vector<Int>& idx) {
  IMat s(idx.size(), idx.size());
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j) s(i, j) = m(idx[i], idx[j]);
  return s;
}

// Connected components of the Dynkin diagram restricted to idx.
std::vector<std::vector<Int>> components(const IMat& m, const std::vector<Int>& idx) {
  std::vector<std::vector<Int>> out;
  std::vector<bool> seen(idx.size(), false);
  for (size_t s = 0; s < idx.size(); ++s) {
    if (seen[s]) continue;
    std::vector<Int> comp;
    std::vector<size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      size_t v = stack.back();
      stack.pop_back();
      comp.push_back(idx[v]);
      for (size_t u = 0; u < idx.size(); ++u)
        if (!seen[u] && m(idx[v], idx[u]) != 0) {
          seen[u] = true;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<Int> all_indices(Int n) {
  std::vector<Int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  return idx;
}

// Finite/affine/indefinite for an indecomposable integer GCM given by idx.
CartanKind kind_of_connected(const IMat& m, const std::vector<Int>& idx) {
  // all principal minors positive  -> finite
  // proper ones positive, det = 0  -> affine
  const size_t n = idx.size();
  bool proper_positive = true;
  for (size_t mask = 1; mask + 1 < (size_t(1) << n) && proper_positive; ++mask) {
    std::vector<Int> sub;
    for (size_t b = 0; b < n; ++b)
      if (mask & (size_t(1) << b)) sub.push_back(idx[b]);
    if (det_exact(principal_submatrix(m, sub)) <= 0) proper_positive = false;
  }
  if (!proper_positive) return CartanKind::indefinite;
  BigInt d = det_exact(principal_submatrix(m, idx));
  if (d > 0) return CartanKind::finite;
  if (d == 0) return CartanKind::affine;
  return CartanKind::indefinite;
}

}  // namespace

CartanClass classify(const Gcm& g) {
  auto comps = components(g.a, all_indices(g.n()));
  if (comps.size() != 1) fail("Decomposable", "classification needs an indecomposable matrix");
  CartanKind kind = kind_of_connected(g.a, comps[0]);
  CartanClass out{kind, false};
  if (kind == CartanKind::indefinite) {
    // hyperbolic: every proper connected subdiagram is finite or affine
    out.hyperbolic = true;
    const Int n = g.n();
    for (size_t mask = 1; mask + 1 < (size_t(1) << n) && out.hyperbolic; ++mask) {
      std::vector<Int> sub;
      for (Int b = 0; b < n; ++b)
        if (mask & (size_t(1) << b)) sub.push_back(b);
      if (components(g.a, sub).size() != 1) continue;
      if (kind_of_connected(g.a, sub) == CartanKind::indefinite) out.hyperbolic = false;
    }
  }
  return out;
}

CartanClass classify_components(const Gcm& g) {
  auto comps = components(g.a, all_indices(g.n()));
  if (comps.size() == 1) return classify(g);  // keeps the hyperbolic flag meaningful
  bool any_affine = false, any_indefinite = false;
  for (const auto& comp : comps) {
    switch (kind_of_connected(g.a, comp)) {
      case CartanKind::finite: break;
      case CartanKind::affine: any_affine = true; break;
      case CartanKind::indefinite: any_indefinite = true; break;
    }
  }
  if (any_indefinite) return {CartanKind::indefinite, false};
  if (any_affine) return {CartanKind::affine, false};
  return {CartanKind::finite, false};
}

std::pair<IVec, IMat> symmetrize(const Gcm& g) {
  const Int n = g.n();
  // propagate d_i C(i,j) = d_j C(j,i) over the diagram, checking cycles
  QVec d = QVec::Constant(n, Rational(0));
  for (Int s = 0; s < n; ++s) {
    if (d[s] != 0) continue;
    d[s] = 1;
    std::vector<Int> stack{s};
    while (!stack.empty()) {
      Int v = stack.back();
      stack.pop_back();
      for (Int u = 0; u < n; ++u) {
        if (u == v || g.a(v, u) == 0) continue;
        Rational need = d[v] * g.a(v, u) / g.a(u, v);
        if (d[u] == 0) {
          d[u] = need;
          stack.push_back(u);
        } else if (d[u] != need) {
          fail("NotSymmetrizable", "no positive symmetrizer exists");
        }
      }
    }
  }
  // scale to minimal positive integers
  BigInt l = 1;
  for (Int i = 0; i < n; ++i) l = boost::multiprecision::lcm(l, denominator(d[i]));
  BigInt gcd = 0;
  std::vector<BigInt> scaled(n);
  for (Int i = 0; i < n; ++i) {
    scaled[i] = numerator(d[i] * Rational(l));
    gcd = boost::multiprecision::gcd(gcd, scaled[i]);
  }
  IVec out(n);
  for (Int i = 0; i < n; ++i) out[i] = static_cast<Int>(scaled[i] / gcd);
  IMat dm = out.asDiagonal() * g.a;
  if (dm != IMat(dm.transpose())) fail("NotSymmetrizable", "symmetrizer check failed");
  return {out, dm};
}

IMat gram_matrix(const Gcm& g) {
  // (a_i, a_j) = eps_j C(i,j) with eps solving eps_j C(i,j) = eps_i C(j,i),
  // i.e. the left symmetrizer of C^T.
  auto [eps, st] = symmetrize(validate_gcm(IMat(g.a.transpose())));
  (void)st;
  const Int n = g.n();
  IMat gram(n, n);
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < n; ++j) gram(i, j) = g.a(i, j) * eps[j];
  return gram;
}

IVec marks(const Gcm& g, Int affine_node) {
  if (affine_node < 0 || affine_node >= g.n()) fail("InputError", "affine node out of range");
  if (classify(g).kind != CartanKind::affine) fail("NotAffine", "marks need an affine matrix");
  const Int n = g.n();
  // delta = sum marks_j a_j is radical, i.e. sum_j marks_j C(j,i) = 0: the
  // kernel of C^T (1-dimensional).  Solve by rational elimination.
  QMat w(n, n);
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < n; ++j) w(i, j) = Rational(g.a(j, i));
  std::vector<Int> pivot_col;
  Int row = 0;
  for (Int col = 0; col < n && row < n; ++col) {
    Int p = -1;
    for (Int i = row; i < n; ++i)
      if (w(i, col) != 0) { p = i; break; }
    if (p < 0) continue;
    w.row(p).swap(w.row(row));
    w.row(row) /= w(row, col);
    for (Int i = 0; i < n; ++i)
      if (i != row && w(i, col) != 0) w.row(i) -= w(i, col) * w.row(row);
    pivot_col.push_back(col);
    ++row;
  }
  if (row != n - 1) fail("NotAffine", "kernel is not one-dimensional");
  Int free_col = 0;
  for (Int col = 0; col < n; ++col)
    if (std::find(pivot_col.begin(), pivot_col.end(), col) == pivot_col.end()) free_col = col;
  QVec k = QVec::Constant(n, Rational(0));
  k[free_col] = 1;
  for (Int r = 0; r < row; ++r) k[pivot_col[r]] = -w(r, free_col);
  // primitive positive integers
  BigInt l = 1;
  for (Int i = 0; i < n; ++i) l = boost::multiprecision::lcm(l, denominator(k[i]));
  std::vector<BigInt> scaled(n);
  BigInt gcd = 0;
  for (Int i = 0; i < n; ++i) {
    scaled[i] = numerator(k[i] * Rational(l));
    gcd = boost::multiprecision::gcd(gcd, scaled[i]);
  }
  IVec out(n);
  for (Int i = 0; i < n; ++i) out[i] = static_cast<Int>(scaled[i] / gcd);
  if (out[free_col] < 0) out = -out;
  for (Int i = 0; i < n; ++i)
    if (out[i] <= 0) fail("NotAffine", "kernel vector is not positive");
  if (out[affine_node] != 1)
    fail("NotAffine", "mark of the designated affine node is not 1");
  return out;
}

namespace {

Gcm chain(Int r) {
  IMat m = IMat::Identity(r, r) * 2;
  for (Int i = 0; i + 1 < r; ++i) m(i, i + 1) = m(i + 1, i) = -1;
  return Gcm{m};
}

}  // namespace

Gcm finite_type(const std::string& label) {
  if (label.size() < 2) fail("UnknownType", "bad type label: " + label);
  const char family = label[0];
  Int r = 0;
  try {
    r = std::stol(label.substr(1));
  } catch (...) {
    fail("UnknownType", "bad type label: " + label);
  }
  switch (family) {
    case 'A': {
      if (r < 1) fail("UnknownType", "A_r needs r >= 1");
      return chain(r);
    }
    case 'B': {
      // node r is the short root: C(r-1, r) = -2
      if (r < 2) fail("UnknownType", "B_r needs r >= 2");
      Gcm g = chain(r);
      g.a(r - 2, r - 1) = -2;
      return g;
    }
    case 'C': {
      if (r < 2) fail("UnknownType", "C_r needs r >= 2");
      Gcm g = chain(r);
      g.a(r - 1, r - 2) = -2;
      return g;
    }
    case 'D': {
      if (r < 4) fail("UnknownType", "D_r needs r >= 4");
      Gcm g = chain(r - 1);
      g.a.conservativeResize(r, r);
      g.a.row(r - 1).setZero();
      g.a.col(r - 1).setZero();
      g.a(r - 1, r - 1) = 2;
      g.a(r - 3, r - 1) = g.a(r - 1, r - 3) = -1;
      return g;
    }
    case 'E': {
      if (r < 6 || r > 8) fail("UnknownType", "E_r needs 6 <= r <= 8");
      // Bourbaki: chain 1-3-4-5-...-r with node 2 attached to node 4
      IMat m = IMat::Identity(r, r) * 2;
      auto bond = [&](Int i, Int j) { m(i - 1, j - 1) = m(j - 1, i - 1) = -1; };
      bond(1, 3);
      bond(2, 4);
      for (Int i = 3; i < r; ++i) bond(i, i + 1);
      return Gcm{m};
    }
    case 'F': {
      if (r != 4) fail("UnknownType", "F_r needs r = 4");
      Gcm g = chain(4);
      g.a(1, 2) = -2;
      g.a(2, 1) = -1;
      return g;
    }
    case 'G': {
      if (r != 2) fail("UnknownType", "G_r needs r = 2");
      IMat m(2, 2);
      m << 2, -1, -3, 2;
      return Gcm{m};
    }
    default:
      fail("UnknownType", "bad type label: " + label);
  }
}

std::vector<IVec> finite_positive_roots(const Gcm& fin) {
  if (classify_components(Gcm{fin.a}).kind != CartanKind::finite)
    fail("NotFinite", "root enumeration needs a finite-type matrix");
  const Int n = fin.n();
  // close the simple roots under the simple reflections
  // r_i(x) = x - (sum_j x_j C(j,i)) e_i
  std::vector<IVec> roots;
  std::vector<std::vector<Int>> seen;
  auto key = [](const IVec& v) {
    return std::vector<Int>(v.data(), v.data() + v.size());
  };
  std::vector<IVec> queue;
  for (Int i = 0; i < n; ++i) {
    IVec e = IVec::Zero(n);
    e[i] = 1;
    queue.push_back(e);
    seen.push_back(key(e));
  }
  std::sort(seen.begin(), seen.end());
  while (!queue.empty()) {
    IVec x = queue.back();
    queue.pop_back();
    roots.push_back(x);
    for (Int i = 0; i < n; ++i) {
      Int t = 0;
      for (Int j = 0; j < n; ++j) t += x[j] * fin.a(j, i);
      IVec y = x;
      y[i] -= t;
      auto k = key(y);
      auto it = std::lower_bound(seen.begin(), seen.end(), k);
      if (it == seen.end() || *it != k) {
        seen.insert(it, k);
        queue.push_back(y);
      }
    }
  }
  std::vector<IVec> pos;
  for (const auto& x : roots)
    if (x.maxCoeff() > 0 && x.minCoeff() >= 0) pos.push_back(x);
  std::sort(pos.begin(), pos.end(), [](const IVec& a, const IVec& b) {
    Int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                        b.data() + b.size());
  });
  return pos;
}

IVec highest_root(const Gcm& fin) {
  auto pos = finite_positive_roots(fin);
  return pos.back();
}

Overextension overextend(const Gcm& fin, const std::string& label) {
  if (classify(fin).kind != CartanKind::finite)
    fail("NotFinite", "over-extension needs an indecomposable finite-type matrix");
  const Int r = fin.n();
  IMat gram0 = gram_matrix(fin);
  IVec theta = highest_root(fin);
  IVec theta_pair = gram0 * theta;          // (theta, a_j) for each j
  Int theta_norm = theta.dot(theta_pair);   // (theta, theta) = 2 * eps_max
  if (theta_norm <= 0 || theta_norm % 2 != 0) fail("NotFinite", "bad highest-root norm");
  const Int s = theta_norm / 2;

  IMat aff = IMat::Zero(r + 1, r + 1);
  aff(0, 0) = 2;
  aff.block(1, 1, r, r) = fin.a;
  for (Int j = 0; j < r; ++j) {
    Int epsj = gram0(j, j) / 2;
    if (theta_pair[j] % epsj != 0 || theta_pair[j] % s != 0)
      fail("NotFinite", "affine attachment is not integral");
    aff(0, j + 1) = -theta_pair[j] / epsj;
    aff(j + 1, 0) = -theta_pair[j] / s;
  }

  IMat full = IMat::Zero(r + 2, r + 2);
  full(0, 0) = 2;
  full(0, 1) = full(1, 0) = -1;
  full.block(1, 1, r + 1, r + 1) = aff;

  // Gram normalized so the affine vertex has norm 2: scale gram0 by 1/s.
  QMat gram = QMat::Zero(r + 2, r + 2);
  gram(0, 0) = 2;
  gram(0, 1) = gram(1, 0) = -1;
  gram(1, 1) = 2;
  for (Int j = 0; j < r; ++j) {
    Rational v = Rational(-theta_pair[j], s);
    gram(1, j + 2) = gram(j + 2, 1) = v;
    for (Int i = 0; i < r; ++i) gram(i + 2, j + 2) = Rational(gram0(i, j), s);
  }

  Overextension out{fin, validate_gcm(aff), validate_gcm(full), gram, IVec(), label};
  out.marks = marks(out.affine, 0);
  // cross-check: marks should reproduce (1, theta)
  IVec expect(r + 1);
  expect[0] = 1;
  for (Int j = 0; j < r; ++j) expect[j + 1] = theta[j];
  if (out.marks != expect) fail("NotAffine", "marks disagree with the highest root");
  return out;
}

bool det_identity_check(const IMat& c, Int m, SeriesVariant v) {
  const Int n = c.rows();
  if (n < 2) return false;
  auto minor_from = [&](Int k) {
    IMat s(n - k, n - k);
    for (Int i = 0; i < n - k; ++i)
      for (Int j = 0; j < n - k; ++j) s(i, j) = c(i + k, j + k);
    return s;
  };
  BigInt d = det_exact(c);
  BigInt m2 = BigInt(m) * m;
  if (v == SeriesVariant::rank_r1)
    return d == 2 * det_exact(minor_from(1)) - m2 * det_exact(minor_from(2));
  return d == -m2 * det_exact(minor_from(2));
}

}  // namespace km
