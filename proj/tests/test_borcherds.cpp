#include <doctest.h>

#include <random>

#include "km/borcherds.hpp"

using namespace km;

namespace {

IVec vec2(Int a, Int b) {
  IVec v(2);
  v << a, b;
  return v;
}

GradedDims to_graded(const Dims2& d) {
  GradedDims out;
  for (const auto& [g, c] : d) out[Grade{g[0], g[1]}] = c;
  return out;
}

const PlaneRootRow& row_at(const PlaneSlice& s, Int a0, Int a1) {
  for (const PlaneRootRow& r : s.rows)
    if (r.a0 == a0 && r.a1 == a1) return r;
  REQUIRE(false);
  return s.rows.front();
}

}  // namespace

TEST_CASE("plane embedding") {
  CHECK(plane_coords(3, {1, 1}) == Coords{1, 3, 2});
  CHECK(plane_coords(3, {2, 0}) == Coords{2, 0, 0});
  CHECK(plane_coords(5, {0, 1}) == Coords{0, 5, 4});
  CHECK(hheight({2, 3}) == 5);
  CHECK(plane_norm(3, {1, 0}) == 2);
  CHECK(plane_norm(3, {1, 1}) == -2);
  CHECK(plane_norm(3, {2, 2}) == -8);
  CHECK(plane_norm(4, {1, 1}) == -4);
  // the embedded vectors carry the same quadratic form
  for (Int m = 3; m <= 5; ++m)
    for (Int a0 = 0; a0 <= 5; ++a0)
      for (Int a1 = 0; a1 <= 5; ++a1) {
        if (a0 == 0 && a1 == 0) continue;
        CHECK(norm2(to_matrix(plane_coords(m, {a0, a1}))) == plane_norm(m, {a0, a1}));
      }
}

TEST_CASE("plane engine without corrections matches the rank-2 recursion") {
  for (Int m : {3, 4}) {
    const Int bound = m == 3 ? 8 : 6;
    Dims2 dims = gkm_plane_dims(m, {}, bound);
    MultiplicityTable t = peterson_table_H(m, bound);
    for (const auto& [g, c] : dims) {
      CHECK(c > 0);
      CHECK(hheight(g) <= bound);
    }
    for (Int a0 = 0; a0 <= bound; ++a0)
      for (Int a1 = 0; a0 + a1 <= bound; ++a1) {
        if (a0 == 0 && a1 == 0) continue;
        auto it = dims.find({a0, a1});
        BigInt got = it == dims.end() ? BigInt(0) : it->second;
        CHECK(got == t.mult(vec2(a0, a1)));
      }
  }
}

TEST_CASE("one imaginary simple generator adds its own dimension") {
  Dims2 sim;
  sim[{1, 1}] = 1;
  Dims2 dims = gkm_plane_dims(3, sim, 3);
  CHECK(dims.at({1, 1}) == 2);  // rank-2 value 1 plus the new generator
  CHECK(dims.at({0, 1}) == 1);
  CHECK(dims.at({1, 0}) == 1);
}

TEST_CASE("plane engine input validation") {
  CHECK_THROWS_WITH_AS(gkm_plane_dims(2, {}, 4), doctest::Contains("m >= 3"), Error);
  CHECK_THROWS_AS(gkm_plane_dims(3, {}, 0), Error);
  Dims2 zero_grade;
  zero_grade[{0, 0}] = 1;
  CHECK_THROWS_AS(gkm_plane_dims(3, zero_grade, 4), Error);
  Dims2 negative;
  negative[{1, 1}] = -1;
  CHECK_THROWS_AS(gkm_plane_dims(3, negative, 4), Error);
}

TEST_CASE("slice tables") {
  PlaneSlice s = plane_roots(3, 6);
  CHECK(s.m == 3);
  CHECK(s.hheight_bound == 6);
  REQUIRE(!s.rows.empty());
  for (size_t i = 0; i + 1 < s.rows.size(); ++i) {
    Int h0 = s.rows[i].a0 + s.rows[i].a1, h1 = s.rows[i + 1].a0 + s.rows[i + 1].a1;
    CHECK((h0 < h1 || (h0 == h1 && s.rows[i].a0 < s.rows[i + 1].a0)));
  }
  for (const PlaneRootRow& r : s.rows) {
    CHECK(r.f_coords == plane_coords(3, {r.a0, r.a1}));
    CHECK(r.norm == plane_norm(3, {r.a0, r.a1}));
    CHECK(r.norm <= 2);
    CHECK(r.mult_F >= 1);  // norm <= 2 lattice vectors are roots
    CHECK(r.mult_H >= 1);
    CHECK(r.gap >= 0);
    CHECK(r.gap == r.mult_F - r.mult_H);
  }

  const PlaneRootRow& first = row_at(s, 1, 1);
  CHECK(first.mult_F == 2);
  CHECK(first.mult_H == 1);
  CHECK(first.gap == 1);
  const PlaneRootRow& second = row_at(s, 2, 2);
  CHECK(second.mult_F == 7);
  CHECK(second.mult_H == 1);
  CHECK(second.gap == 6);
  CHECK(row_at(s, 1, 0).norm == 2);
  CHECK(row_at(s, 1, 0).gap == 0);

  // explicit table and reporting view give the same rows
  MultiplicityTable f = peterson_table_F(plane_dominant_height(3, 6));
  PlaneSlice via_table = plane_roots(3, 6, f);
  PlaneSlice report = plane_gap_table(3, 6);
  REQUIRE(via_table.rows.size() == s.rows.size());
  REQUIRE(report.rows.size() == s.rows.size());
  for (size_t i = 0; i < s.rows.size(); ++i) {
    CHECK(via_table.rows[i].a0 == s.rows[i].a0);
    CHECK(via_table.rows[i].a1 == s.rows[i].a1);
    CHECK(via_table.rows[i].mult_F == s.rows[i].mult_F);
    CHECK(via_table.rows[i].mult_H == s.rows[i].mult_H);
    CHECK(report.rows[i].gap == s.rows[i].gap);
  }

  CHECK_THROWS_AS(plane_roots(2, 6), Error);
  CHECK_THROWS_AS(plane_roots(3, 0), Error);
}

TEST_CASE("table sizing for slice queries") {
  CHECK(plane_f_height(3, 4) == 16);
  CHECK(plane_dominant_height(3, 4) == 10);
  for (Int m = 3; m <= 5; ++m)
    for (Int bound = 1; bound <= 6; ++bound)
      CHECK(plane_dominant_height(m, bound) <= plane_f_height(m, bound));
  CHECK_THROWS_AS(plane_f_height(2, 4), Error);
  CHECK_THROWS_AS(plane_dominant_height(3, 0), Error);
}

TEST_CASE("imaginary simple multiplicities") {
  SimpleMultTable sm = mu_simple_mults(3, 6);
  CHECK(sm.m == 3);
  CHECK(sm.hheight_bound == 6);
  CHECK(sm.mu.at({0, 1}) == 0);
  CHECK(sm.mu.at({1, 0}) == 0);
  CHECK(sm.mu.at({1, 1}) == 1);
  for (const auto& [g, c] : sm.mu) {
    CHECK(c >= 0);
    CHECK(plane_norm(3, g) <= 2);
    if (plane_norm(3, g) == 2) CHECK(c == 0);
  }

  // the gap column is the dimension profile of a free Lie algebra
  CHECK(sm.free_gens_ok);
  CHECK(sm.free_gens.at({1, 1}) == 1);
  GradedDims gap;
  for (const PlaneRootRow& r : plane_gap_table(3, 6).rows)
    if (r.gap > 0) gap[Grade{r.a0, r.a1}] = r.gap;
  REQUIRE(!gap.empty());
  CHECK(witt_expand(to_graded(sm.free_gens), 6) == gap);

  CHECK_THROWS_AS(mu_simple_mults(2, 6), Error);
  CHECK_THROWS_AS(mu_simple_mults(3, 0), Error);
}

TEST_CASE("decomposition along the doubled line") {
  LineDecomposition ld = line_borcherds_h3(8);
  CHECK(ld.height_bound == 8);
  REQUIRE(ld.dims.size() == 8);
  CHECK(ld.grade1 == 1);
  CHECK(ld.dims[0] == 1);
  CHECK(ld.dims[1] == 1);

  MultiplicityTable t = peterson_table_H(3, 16);
  for (Int n = 1; n <= 8; ++n) CHECK(ld.dims[n - 1] == t.mult(vec2(n, n)));

  REQUIRE(ld.m_plus.size() == 7);  // grades 2..8, all positive
  for (Int n = 2; n <= 8; ++n) CHECK(ld.m_plus.at(Grade{n}) == ld.dims[n - 1]);
  CHECK(ld.free_generators.at(Grade{2}) == 1);
  CHECK(witt_expand(ld.free_generators, 8) == ld.m_plus);

  CHECK_THROWS_AS(line_borcherds_h3(0), Error);
}

TEST_CASE("free Lie algebra dimensions") {
  // two generators in degree 1: binary necklace counts
  GradedDims two;
  two[Grade{1}] = 2;
  GradedDims L = witt_expand(two, 8);
  CHECK(L.at(Grade{1}) == 2);
  CHECK(L.at(Grade{2}) == 1);
  CHECK(L.at(Grade{3}) == 2);
  CHECK(L.at(Grade{4}) == 3);
  CHECK(L.at(Grade{5}) == 6);
  CHECK(L.at(Grade{6}) == 9);
  CHECK(L.at(Grade{7}) == 18);
  CHECK(L.at(Grade{8}) == 30);
  CHECK(witt_invert(L, 8) == two);

  // a profile no free Lie algebra has
  GradedDims bad;
  bad[Grade{1}] = 1;
  bad[Grade{2}] = 1;
  CHECK(witt_invert(bad, 2) == bad);  // fine if truncated before the clash
  CHECK_THROWS_AS(witt_invert(bad, 3), Error);

  // expand and invert are inverse on random generator profiles
  std::mt19937_64 rng(20260814ull);
  std::uniform_int_distribution<Int> coord(0, 3), count(0, 3);
  for (int trial = 0; trial < 30; ++trial) {
    GradedDims gens;
    for (int k = 0; k < 5; ++k) {
      Grade g{coord(rng), coord(rng)};
      Int h = g[0] + g[1];
      Int c = count(rng);
      if (h < 1 || h > 6 || c == 0) continue;
      gens[g] = c;
    }
    GradedDims dims = witt_expand(gens, 6);
    CHECK(witt_invert(dims, 6) == gens);
  }

  GradedDims mixed;
  mixed[Grade{1}] = 1;
  mixed[Grade{1, 1}] = 1;
  CHECK_THROWS_WITH_AS(witt_expand(mixed, 4), doctest::Contains("dimension"), Error);
  GradedDims zerog;
  zerog[Grade{0, 0}] = 1;
  CHECK_THROWS_AS(witt_expand(zerog, 4), Error);
  GradedDims negc;
  negc[Grade{2}] = -1;
  CHECK_THROWS_AS(witt_invert(negc, 4), Error);
  GradedDims negg;
  negg[Grade{-1, 2}] = 1;
  CHECK_THROWS_AS(witt_invert(negg, 4), Error);
  CHECK_THROWS_AS(witt_invert(two, 0), Error);
}
