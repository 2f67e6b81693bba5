#include "km/borcherds.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "km/errors.hpp"

namespace km {

namespace {

using Series2 = std::map<Grade2, BigInt>;

Mat2i refl_matrix(Int m, int i) {
  // action of r_i on coefficient pairs over the Cartan matrix [[2,-m],[-m,2]]
  Mat2i r;
  if (i == 0)
    r << -1, m, 0, 1;
  else
    r << 1, 0, m, -1;
  return r;
}

struct WTerm {
  Mat2i w;
  int sign;       // det(w)
  Grade2 gamma;   // rho - w rho, a nonnegative integer pair
};

// All infinite-dihedral elements whose gamma stays within the height bound:
// the identity plus the two alternating branches; heights grow strictly along
// each branch, so both terminate.
std::vector<WTerm> dihedral_terms(Int m, Int bound) {
  std::vector<WTerm> out;
  out.push_back({Mat2i::Identity(), +1, {0, 0}});
  for (int start = 0; start <= 1; ++start) {
    Mat2i w = Mat2i::Identity();
    int g = start, sign = 1;
    for (Int len = 1;; ++len) {
      w = w * refl_matrix(m, g);
      g = 1 - g;
      sign = -sign;
      // gamma = (I - w) rho with rho = -(1,1)/(m-2)
      Mat2i d = Mat2i::Identity() - w;
      Int t0 = d(0, 0) + d(0, 1), t1 = d(1, 0) + d(1, 1);
      if (t0 % (m - 2) != 0 || t1 % (m - 2) != 0)
        fail("InternalError", "rho - w rho is not a lattice vector");
      Grade2 gamma{-t0 / (m - 2), -t1 / (m - 2)};
      if (gamma[0] < 0 || gamma[1] < 0)
        fail("InternalError", "rho - w rho left the positive cone");
      if (hheight(gamma) > bound) break;
      out.push_back({w, sign, gamma});
      if (len > 4 * bound + 8) fail("InternalError", "dihedral enumeration did not terminate");
    }
  }
  return out;
}

Series2 mul_trunc(const Series2& a, const Series2& b, Int bound) {
  Series2 out;
  for (const auto& [ga, ca] : a)
    for (const auto& [gb, cb] : b) {
      Grade2 g{ga[0] + gb[0], ga[1] + gb[1]};
      if (hheight(g) > bound) continue;
      out[g] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

Dims2 gkm_plane_dims(Int m, const Dims2& imaginary_simples, Int hheight_bound) {
  if (m < 3) fail("InputError", "the plane algebra needs m >= 3");
  if (hheight_bound < 1) fail("InputError", "height bound must be >= 1");
  for (const auto& [g, c] : imaginary_simples) {
    if (g[0] < 0 || g[1] < 0 || (g[0] == 0 && g[1] == 0))
      fail("InputError", "imaginary simple grades must be nonzero and nonnegative");
    if (c < 0) fail("InputError", "imaginary simple counts must be nonnegative");
  }

  // denominator identity: prod_{a > 0} (1 - x^a)^mult(a)
  //   = sum_w det(w) [x^(rho - w rho) - sum_s mu(s) x^(rho - w rho + w s)]
  Series2 rhs;
  for (const WTerm& t : dihedral_terms(m, hheight_bound)) {
    rhs[t.gamma] += t.sign;
    for (const auto& [s, mu] : imaginary_simples) {
      if (mu == 0) continue;
      Int ws0 = t.w(0, 0) * s[0] + t.w(0, 1) * s[1];
      Int ws1 = t.w(1, 0) * s[0] + t.w(1, 1) * s[1];
      if (ws0 < 0 || ws1 < 0) fail("InternalError", "imaginary root left the positive cone");
      Grade2 g{t.gamma[0] + ws0, t.gamma[1] + ws1};
      if (hheight(g) > hheight_bound) continue;
      rhs[g] -= t.sign * mu;
    }
  }
  if (rhs[{0, 0}] != 1) fail("InternalError", "constant term of the Weyl sum is not 1");

  Series2 u;  // 1 - rhs
  for (const auto& [g, c] : rhs) {
    if (g[0] == 0 && g[1] == 0) continue;
    if (c != 0) u[g] = -c;
  }

  // -log(1 - u) = sum u^k / k gives c_beta = sum_{k | beta} mult(beta/k) / k
  std::map<Grade2, Rational> cser;
  Series2 uk = u;
  for (Int k = 1; k <= hheight_bound && !uk.empty(); ++k) {
    for (const auto& [g, c] : uk) cser[g] += Rational(c) / k;
    if (k < hheight_bound) uk = mul_trunc(uk, u, hheight_bound);
  }

  std::vector<Grade2> order;
  for (const auto& [g, c] : cser) order.push_back(g);
  std::sort(order.begin(), order.end(), [](const Grade2& a, const Grade2& b) {
    return hheight(a) != hheight(b) ? hheight(a) < hheight(b) : a < b;
  });

  Dims2 mult;
  for (const Grade2& g : order) {
    Rational v = cser[g];
    Int d = std::gcd(g[0], g[1]);
    for (Int k = 2; k <= d; ++k) {
      if (d % k != 0) continue;
      auto it = mult.find(Grade2{g[0] / k, g[1] / k});
      if (it != mult.end()) v -= Rational(it->second) / k;
    }
    if (!is_integer(v)) fail("InternalError", "extracted multiplicity is not an integer");
    BigInt mv = numerator(v);
    if (mv < 0) fail("InternalError", "extracted multiplicity is negative");
    if (mv > 0) mult[g] = mv;
  }
  return mult;
}

Int plane_f_height(Int m, Int hheight_bound) {
  if (m < 3) fail("InputError", "the plane slice needs m >= 3");
  if (hheight_bound < 1) fail("InputError", "height bound must be >= 1");
  Int best = 1;
  for (Int h = 1; h <= hheight_bound; ++h)
    for (Int a0 = 0; a0 <= h; ++a0) {
      Grade2 g{a0, h - a0};
      if (plane_norm(m, g) > 2) continue;
      best = std::max(best, a0 + (2 * m - 1) * (h - a0));
    }
  return best;
}

Int plane_dominant_height(Int m, Int hheight_bound) {
  if (m < 3) fail("InputError", "the plane slice needs m >= 3");
  if (hheight_bound < 1) fail("InputError", "height bound must be >= 1");
  Int best = 1;
  for (Int h = 1; h <= hheight_bound; ++h)
    for (Int a0 = 0; a0 <= h; ++a0) {
      Grade2 g{a0, h - a0};
      if (plane_norm(m, g) > 2) continue;
      best = std::max(best, coord_height(dominant_rep_F(to_matrix(plane_coords(m, g)))));
    }
  return best;
}

PlaneSlice plane_roots(Int m, Int hheight_bound, const MultiplicityTable& f_table) {
  if (m < 3) fail("InputError", "the plane slice needs m >= 3");
  if (hheight_bound < 1) fail("InputError", "height bound must be >= 1");
  MultiplicityTable h_table = peterson_table_H(m, hheight_bound);

  PlaneSlice out;
  out.m = m;
  out.hheight_bound = hheight_bound;
  for (Int h = 1; h <= hheight_bound; ++h)
    for (Int a0 = 0; a0 <= h; ++a0) {
      Grade2 g{a0, h - a0};
      if (plane_norm(m, g) > 2) continue;
      PlaneRootRow row;
      row.a0 = g[0];
      row.a1 = g[1];
      row.f_coords = plane_coords(m, g);
      row.norm = plane_norm(m, g);
      row.mult_F = mult_F_reduced(f_table, to_matrix(row.f_coords));
      IVec hv(2);
      hv << g[0], g[1];
      row.mult_H = h_table.mult(hv);
      row.gap = row.mult_F - row.mult_H;
      if (row.gap < 0)
        fail("InternalError", "plane multiplicity exceeded the rank-3 multiplicity");
      out.rows.push_back(std::move(row));
    }
  return out;
}

PlaneSlice plane_roots(Int m, Int hheight_bound) {
  MultiplicityTable f = peterson_table_F(plane_dominant_height(m, hheight_bound));
  return plane_roots(m, hheight_bound, f);
}

PlaneSlice plane_gap_table(Int m, Int hheight_bound) { return plane_roots(m, hheight_bound); }

SimpleMultTable mu_simple_mults(Int m, Int hheight_bound, const MultiplicityTable& f_table) {
  if (m < 3) fail("InputError", "the mu pipeline needs m >= 3");
  if (hheight_bound < 1) fail("InputError", "height bound must be >= 1");

  auto f_dim = [&](const Grade2& g) -> BigInt {
    if ((g[0] == 0 && g[1] == 0) || plane_norm(m, g) > 2) return 0;
    return mult_F_reduced(f_table, to_matrix(plane_coords(m, g)));
  };

  SimpleMultTable out;
  out.m = m;
  out.hheight_bound = hheight_bound;

  Dims2 mu_acc;
  for (Int lev = 1; lev <= hheight_bound; ++lev) {
    Dims2 engine = gkm_plane_dims(m, mu_acc, lev);
    for (Int a0 = 0; a0 <= lev; ++a0) {
      Grade2 g{a0, lev - a0};
      BigInt fg = f_dim(g);
      BigInt mg = 0;
      if (auto it = engine.find(g); it != engine.end()) mg = it->second;
      BigInt d = fg - mg;
      if (d < 0) fail("NegativeMu", "engine dimension exceeded the rank-3 dimension");
      if (plane_norm(m, g) <= 2) out.mu[g] = d;
      if (d > 0) mu_acc[g] = d;
    }
  }

  Dims2 replay = gkm_plane_dims(m, mu_acc, hheight_bound);
  for (Int h = 1; h <= hheight_bound; ++h)
    for (Int a0 = 0; a0 <= h; ++a0) {
      Grade2 g{a0, h - a0};
      BigInt rg = 0;
      if (auto it = replay.find(g); it != replay.end()) rg = it->second;
      if (rg != f_dim(g)) fail("InternalError", "self-consistency replay mismatch");
    }

  PlaneSlice slice = plane_roots(m, hheight_bound, f_table);
  GradedDims gap;
  for (const PlaneRootRow& row : slice.rows)
    if (row.gap > 0) gap[Grade{row.a0, row.a1}] = row.gap;
  if (!gap.empty()) {
    try {
      for (const auto& [g, c] : witt_invert(gap, hheight_bound))
        out.free_gens[Grade2{g[0], g[1]}] = c;
    } catch (const Error& e) {
      if (e.code() != "NegativeGeneratorCount") throw;
      out.free_gens.clear();
      out.free_gens_ok = false;
    }
  }
  return out;
}

SimpleMultTable mu_simple_mults(Int m, Int hheight_bound) {
  MultiplicityTable f = peterson_table_F(plane_dominant_height(m, hheight_bound));
  return mu_simple_mults(m, hheight_bound, f);
}

LineDecomposition line_borcherds_h3(Int height_bound) {
  if (height_bound < 1) fail("InputError", "height bound must be >= 1");
  MultiplicityTable t = peterson_table_H(3, 2 * height_bound);
  LineDecomposition out;
  out.height_bound = height_bound;
  for (Int n = 1; n <= height_bound; ++n) {
    IVec v(2);
    v << n, n;
    out.dims.push_back(t.mult(v));
  }
  out.grade1 = out.dims[0];
  for (Int n = 2; n <= height_bound; ++n)
    if (out.dims[n - 1] > 0) out.m_plus[Grade{n}] = out.dims[n - 1];
  if (!out.m_plus.empty()) out.free_generators = witt_invert(out.m_plus, height_bound);
  return out;
}

}  // namespace km
