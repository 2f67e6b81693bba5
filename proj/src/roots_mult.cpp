#include "km/roots_mult.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <utility>

#include "km/errors.hpp"

namespace km {

RootStatus root_status_F(const SymMat2& n) {
  if (n.is_zero()) fail("ZeroVector", "the zero vector is not a root");
  RootStatus st;
  st.det = det2(n);
  st.norm = norm2(n);
  st.level = level(n);
  st.is_root = st.det >= -1;
  if (!st.is_root) return st;
  st.kind = st.det == -1 ? RootKind::real : (st.det == 0 ? RootKind::lightcone : RootKind::imaginary);
  Coords c = to_coords(n);
  if (c.minCoeff() >= 0)
    st.sign = RootSign::positive;
  else if (c.maxCoeff() <= 0)
    st.sign = RootSign::negative;
  // every root is positive or negative; a mixed-sign vector passing the det
  // test would contradict that, so flag it loudly
  if (!st.sign) fail("InputError", "mixed-sign vector passed the root test");
  return st;
}

std::vector<SymMat2> enumerate_roots_F(Int level_min, Int level_max, Int height_bound) {
  if (height_bound < 0 || level_min > level_max) fail("InputError", "empty enumeration window");
  std::vector<std::pair<Coords, SymMat2>> hits;
  const Int h = height_bound;
  for (Int x = -h; x <= h; ++x)
    for (Int y = -h + std::abs(x); y <= h - std::abs(x); ++y)
      for (Int z = -h + std::abs(x) + std::abs(y); z <= h - std::abs(x) - std::abs(y); ++z) {
        Coords c{x, y, z};
        SymMat2 n = to_matrix(c);
        if (n.is_zero()) continue;
        if (level(n) < level_min || level(n) > level_max) continue;
        if (det2(n) < -1) continue;
        hits.emplace_back(c, n);
      }
  std::sort(hits.begin(), hits.end(), [](const auto& l, const auto& r) {
    Int hl = std::abs(l.first[0]) + std::abs(l.first[1]) + std::abs(l.first[2]);
    Int hr = std::abs(r.first[0]) + std::abs(r.first[1]) + std::abs(r.first[2]);
    if (hl != hr) return hl < hr;
    return std::lexicographical_compare(l.first.data(), l.first.data() + 3, r.first.data(),
                                        r.first.data() + 3);
  });
  std::vector<SymMat2> out;
  out.reserve(hits.size());
  for (auto& hit : hits) out.push_back(hit.second);
  return out;
}

NormalForm lightcone_normal_form(const SymMat2& n) {
  if (n.is_zero()) fail("ZeroVector", "the zero vector has no normal form");
  if (det2(n) != 0) fail("NotLightcone", "normal form needs det = 0");
  // N = s*g*w*w^T with w primitive; the group acts by w |-> A w, so reduce w
  // to (1, 0) by a subtractive Euclid (signs only matter mod +-1)
  Int g = std::gcd(std::gcd(std::abs(n.a), std::abs(n.b)), std::abs(n.c));
  Int s = (n.a + n.c) > 0 ? 1 : -1;  // a + c = s*g*(p^2 + q^2) != 0
  Int p, q;
  if (n.a != 0) {
    p = n.a * s / g;  // = p^2
    q = n.b * s / g;  // = p*q
  } else {
    p = n.b * s / g;
    q = n.c * s / g;
  }
  Int wg = std::gcd(std::abs(p), std::abs(q));
  p /= wg;
  q /= wg;
  std::vector<Gen> letters;  // application order, innermost first
  auto mod_sign = [&]() {
    if (p < 0 || (p == 0 && q < 0)) {
      p = -p;
      q = -q;
    }
  };
  mod_sign();
  while (q != 0) {
    if (q < 0) {
      q = -q;
      letters.push_back(Gen::r1);
    } else if (p < q) {
      std::swap(p, q);
      letters.push_back(Gen::rm1);
    } else {
      // p >= q > 0: r1 r0 sends (p, q) to (p - q, q) mod sign
      p = p - q;
      letters.push_back(Gen::r0);
      letters.push_back(Gen::r1);
      mod_sign();
    }
  }
  std::vector<Gen> word(letters.rbegin(), letters.rend());
  NormalForm out{s * g, from_word(word)};
  SymMat2 target{out.a, 0, 0};
  if (!(weyl_apply(out.word, n) == target)) fail("InputError", "light-cone reduction failed");
  return out;
}

NormalForm level1_normal_form(const SymMat2& n) {
  if (n.is_zero() || det2(n) < -1) fail("NotRoot", "input is not a root");
  if (level(n) != 1) fail("WrongLevel", "normal form needs a level-1 root");
  SymMat2 cur = n;
  std::vector<Gen> letters;  // application order
  while (cur.b != 0) {
    Gen g = cur.b < 0 ? Gen::r1 : Gen::r0;
    cur = weyl_apply(Pgl2::generator(g), cur);
    letters.push_back(g);
  }
  std::vector<Gen> word(letters.rbegin(), letters.rend());
  NormalForm out{cur.a, from_word(word)};
  if (!(weyl_apply(out.word, n) == cur) || cur.a != det2(n))
    fail("InputError", "level-1 reduction failed");
  return out;
}

RootString root_string_F(const SymMat2& beta_j, const SymMat2& beta_i) {
  if (norm2(beta_i) != 2) fail("NotRealRoot", "string direction must be a real root");
  auto is_root = [](const SymMat2& x) { return !x.is_zero() && det2(x) >= -1; };
  if (!is_root(beta_j) || !is_root(beta_i)) fail("NotRoot", "string endpoints must be roots");
  RootString s{0, 0};
  for (SymMat2 x = beta_j - beta_i; is_root(x); x = x - beta_i) ++s.p;
  for (SymMat2 x = beta_j + beta_i; is_root(x); x = x + beta_i) ++s.q;
  return s;
}

BigInt partition_p(Int n) {
  if (n < 0) fail("NegativeIndex", "partition numbers need n >= 0");
  static std::vector<BigInt> memo{1};
  for (Int m = static_cast<Int>(memo.size()); m <= n; ++m) {
    BigInt v = 0;
    for (Int k = 1;; ++k) {
      Int g1 = m - k * (3 * k - 1) / 2;
      Int g2 = m - k * (3 * k + 1) / 2;
      if (g1 < 0 && g2 < 0) break;
      BigInt t = 0;
      if (g1 >= 0) t += memo[g1];
      if (g2 >= 0) t += memo[g2];
      if (k % 2 == 1)
        v += t;
      else
        v -= t;
    }
    memo.push_back(v);
  }
  return memo[n];
}

// ---------------------------------------------------------------------------
// Peterson recursion

namespace {

std::vector<Int> key_of(const IVec& v) {
  return std::vector<Int>(v.data(), v.data() + v.size());
}

}  // namespace

MultiplicityTable::MultiplicityTable(Gcm gcm, QMat gram, Int height_bound)
    : gcm_(std::move(gcm)), bound_(height_bound) {
  const Int n = gcm_.n();
  if (gram.rows() != n || gram.cols() != n) fail("InputError", "gram size mismatch");
  if (height_bound < 1) fail("InputError", "height bound must be positive");
  // multiplicities only see ratios of pairings, so rescale the form to a
  // primitive integer matrix once and work with machine integers after that
  BigInt l = 1;
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < n; ++j) l = boost::multiprecision::lcm(l, denominator(gram(i, j)));
  BigInt g = 0;
  Mat<BigInt> scaled(n, n);
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < n; ++j) {
      scaled(i, j) = numerator(gram(i, j) * Rational(l));
      g = boost::multiprecision::gcd(g, scaled(i, j));
    }
  if (g == 0) fail("InputError", "gram matrix is zero");
  gram_.resize(n, n);
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < n; ++j) gram_(i, j) = static_cast<Int>(scaled(i, j) / g);
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < i; ++j)
      if (gram_(i, j) != gram_(j, i)) fail("InputError", "gram must be symmetric");
  // the recursion sees rho only through the pairings (rho, a_i) = (a_i, a_i)/2
  rho_.resize(n);
  for (Int i = 0; i < n; ++i) rho_[i] = Rational(gram_(i, i), 2);
  // reject degenerate forms up front
  QMat red(n, n);
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < n; ++j) red(i, j) = Rational(gram_(i, j));
  for (Int col = 0, row = 0; col < n && row < n; ++col) {
    Int piv_row = -1;
    for (Int i = row; i < n; ++i)
      if (red(i, col) != 0) {
        piv_row = i;
        break;
      }
    if (piv_row < 0) fail("InputError", "gram matrix is degenerate");
    if (piv_row != row) red.row(piv_row).swap(red.row(row));
    const Rational piv = red(row, col);
    for (Int i = row + 1; i < n; ++i)
      if (red(i, col) != 0) {
        const Rational f = red(i, col) / piv;
        red.row(i) -= f * red.row(row);
      }
    ++row;
  }
  build();
}

void MultiplicityTable::build() {
  const Int n = gcm_.n();

  auto pairing = [&](const IVec& x, const IVec& y) {
    Int s = 0;
    for (Int i = 0; i < n; ++i) {
      Int gi = 0;
      for (Int j = 0; j < n; ++j) gi += gram_(i, j) * y[j];
      s += x[i] * gi;
    }
    return s;
  };

  // support of the auxiliary coefficients c_beta, grouped by height; rhs sums
  // are accumulated per target height from pairs of lower entries, so vectors
  // never touched by a root stay out of the computation entirely
  std::vector<std::vector<std::pair<IVec, Rational>>> sup(bound_ + 1);
  std::vector<std::vector<IVec>> roots_at(bound_ + 1);

  {
    std::vector<IVec> simples;
    for (Int i = 0; i < n; ++i) {
      IVec e = IVec::Zero(n);
      e[i] = 1;
      simples.push_back(e);
    }
    std::sort(simples.begin(), simples.end(), [](const IVec& a, const IVec& b) {
      return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                          b.data() + b.size());
    });
    for (const IVec& e : simples) {
      sup[1].emplace_back(e, Rational(1));
      mult_.emplace(key_of(e), BigInt(1));
      entries_.emplace_back(e, BigInt(1));
      roots_at[1].push_back(e);
    }
  }

  for (Int h = 2; h <= bound_; ++h) {
    // (beta, beta - 2 rho) c_beta = sum over ordered splittings; keys come out
    // of the map in lex order, which keeps entries_ deterministic
    std::map<std::vector<Int>, Rational> acc;
    for (Int h1 = 1; 2 * h1 <= h; ++h1) {
      const Int h2 = h - h1;
      for (const auto& [b1, c1] : sup[h1])
        for (const auto& [b2, c2] : sup[h2]) {
          Rational term = Rational(pairing(b1, b2)) * c1 * c2;
          if (h1 != h2) term *= 2;  // both orders of an unequal-height pair
          acc[key_of(b1 + b2)] += term;
        }
    }
    // multiples of lower roots carry divisor terms in c_beta even when the
    // splitting sum misses them, so force them into the candidate set
    for (Int k = 2; k <= h; ++k) {
      if (h % k != 0) continue;
      for (const IVec& b0 : roots_at[h / k]) acc[key_of(IVec(k * b0))];
    }
    for (const auto& [key, rhs] : acc) {
      IVec b = Eigen::Map<const IVec>(key.data(), n);
      // c_beta = sum over divisors k of mult(beta/k)/k; the k >= 2 slice is
      // already known from lower heights
      Rational peel = 0;
      Int cg = content_gcd(b);
      for (Int k = 2; k <= cg; ++k) {
        if (cg % k != 0) continue;
        auto it = mult_.find(key_of(IVec(b / k)));
        if (it != mult_.end()) peel += Rational(it->second) / k;
      }
      Rational denom = Rational(pairing(b, b)) - 2 * dot(b, rho_);
      Rational cb, m;
      if (denom == 0) {
        // only k ht(a) multiples of a real root a land here; the identity
        // degenerates to 0 = 0 and the divisor sum is the whole coefficient
        if (rhs != 0) fail("InternalError", "vanishing Peterson denominator");
        cb = peel;
        m = 0;
      } else {
        cb = rhs / denom;
        m = cb - peel;
      }
      if (!is_integer(m)) fail("InputError", "non-integral multiplicity in recursion");
      BigInt mi = numerator(m);
      if (mi < 0) fail("InputError", "negative multiplicity in recursion");
      if (cb != 0) sup[h].emplace_back(b, cb);
      if (mi != 0) {
        mult_.emplace(key, mi);
        entries_.emplace_back(b, mi);
        roots_at[h].push_back(b);
      }
    }
  }
}

BigInt MultiplicityTable::mult(const IVec& beta) const {
  if (beta.size() != gcm_.n()) fail("InputError", "coefficient vector has wrong rank");
  IVec b = beta;
  if (b.maxCoeff() <= 0) b = -b;
  if (b.isZero() || b.minCoeff() < 0) return 0;
  if (height(b) > bound_) fail("HeightOverflow", "beyond the table frontier");
  auto it = mult_.find(key_of(b));
  return it == mult_.end() ? BigInt(0) : it->second;
}

RootTest MultiplicityTable::is_root(const IVec& beta) const {
  if (beta.size() != gcm_.n()) fail("InputError", "coefficient vector has wrong rank");
  IVec b = beta;
  if (b.isZero()) return RootTest::no;
  if (b.maxCoeff() <= 0) b = -b;
  if (b.minCoeff() < 0) return RootTest::no;
  if (height(b) <= bound_) return mult_.count(key_of(b)) ? RootTest::yes : RootTest::no;
  return RootTest::unknown;
}

MultiplicityTable peterson_table_F(Int height_bound) {
  IMat c(3, 3);
  c << 2, -1, 0, -1, 2, -2, 0, -2, 2;
  QMat g(3, 3);
  for (Int i = 0; i < 3; ++i)
    for (Int j = 0; j < 3; ++j) g(i, j) = Rational(c(i, j));
  return MultiplicityTable(validate_gcm(c), g, height_bound);
}

BigInt mult_F(const MultiplicityTable& t, const SymMat2& n) {
  Coords c = to_coords(n);
  IVec v(3);
  v << c[0], c[1], c[2];
  return t.mult(v);
}

SymMat2 dominant_rep_F(const SymMat2& n) {
  if (n.a == 0 && n.b == 0 && n.c == 0) fail("ZeroVector", "the zero vector has no orbit representative");
  if (det2(n) < -1) fail("InputError", "spacelike non-root vectors have no height-minimal representative");
  SymMat2 b = n;
  {
    Coords c = to_coords(b);
    if (c[0] + c[1] + c[2] < 0) b = SymMat2{-b.a, -b.b, -b.c};
  }
  if (det2(b) == -1) {
    // real roots never pair <= 0 with every simple; descend to a simple root
    while (coord_height(b) > 1) {
      bool moved = false;
      for (int i = -1; i <= 1 && !moved; ++i)
        if (bilinear(b, alpha(i)) > 0) {
          b = reflect(alpha(i), b);
          moved = true;
        }
      if (!moved) fail("InternalError", "real-root descent stalled");
    }
    return b;
  }
  // isotropic / timelike: every positive pairing lowers the coordinate height,
  // the positive cone is preserved, so this stops at the dominant vector
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = -1; i <= 1; ++i)
      if (bilinear(b, alpha(i)) > 0) {
        b = reflect(alpha(i), b);
        moved = true;
        break;
      }
  }
  return b;
}

BigInt mult_F_reduced(const MultiplicityTable& t, const SymMat2& n) {
  if (n.a == 0 && n.b == 0 && n.c == 0) return 0;
  Int d = det2(n);
  if (d < -1) return 0;  // not a root
  if (d == -1) return 1;
  return mult_F(t, dominant_rep_F(n));
}

MultiplicityTable peterson_table_H(Int m, Int height_bound) {
  if (m < 3) fail("InputError", "rank-2 table needs m >= 3");
  IMat c(2, 2);
  c << 2, -m, -m, 2;
  QMat g(2, 2);
  for (Int i = 0; i < 2; ++i)
    for (Int j = 0; j < 2; ++j) g(i, j) = Rational(c(i, j));
  return MultiplicityTable(validate_gcm(c), g, height_bound);
}

// ---------------------------------------------------------------------------
// Level-2 generating function

namespace {

using Series = std::vector<BigInt>;

Series mul(const Series& a, const Series& b, size_t terms) {
  Series r(terms, BigInt(0));
  for (size_t i = 0; i < a.size() && i < terms; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size() && i + j < terms; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace

std::vector<BigInt> level2_genfunc(Int terms) {
  if (terms < 1) fail("InputError", "need at least one term");
  const size_t t = static_cast<size_t>(terms) + 3;  // head room for the q^-3 shift
  Series part(t);
  for (size_t i = 0; i < t; ++i) part[i] = partition_p(static_cast<Int>(i));

  Series even(t, BigInt(0));
  even[0] = 1;
  for (size_t j = 1; 4 * j - 2 < t; ++j) {
    Series f(t, BigInt(0));
    f[0] = 1;
    f[4 * j - 2] = -1;
    even = mul(even, f, t);
  }

  Series odd_plus(t, BigInt(0)), odd_minus(t, BigInt(0));
  odd_plus[0] = 1;
  odd_minus[0] = 1;
  for (size_t j = 1; 2 * j - 1 < t; ++j) {
    Series fp(t, BigInt(0)), fm(t, BigInt(0));
    fp[0] = 1;
    fp[2 * j - 1] = 1;
    fm[0] = 1;
    fm[2 * j - 1] = -1;
    odd_plus = mul(odd_plus, fp, t);
    odd_minus = mul(odd_minus, fm, t);
  }
  Series bracket(t, BigInt(0));
  for (size_t i = 0; i < t; ++i) bracket[i] = odd_plus[i] - odd_minus[i];
  bracket[1] -= 2;
  // multiply by q^-3 / 2: the three lowest coefficients must vanish and the
  // rest must be even, or the closed form is being misused
  for (size_t i = 0; i < 3; ++i)
    if (bracket[i] != 0) fail("InputError", "generating function shift underflow");
  Series shifted(t, BigInt(0));
  for (size_t i = 3; i < t; ++i) {
    if (bracket[i] % 2 != 0) fail("InputError", "odd coefficient before halving");
    shifted[i - 3] = bracket[i] / 2;
  }

  Series out = mul(mul(part, even, t), shifted, t);
  out.resize(static_cast<size_t>(terms));
  return out;
}

SymMat2 level2_root_for_exponent(Int n) {
  if (n < 0) fail("NegativeIndex", "exponents start at 0");
  if (n % 2 == 0) return SymMat2{n / 2, 1, 2};
  return SymMat2{(n - 1) / 2, 0, 2};
}

}  // namespace km
