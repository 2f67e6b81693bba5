#include <doctest.h>

#include <random>

#include "km/cartan.hpp"
#include "km/errors.hpp"

using namespace km;

namespace {

IMat mat(std::initializer_list<std::initializer_list<Int>> rows) {
  IMat m(rows.size(), rows.begin()->size());
  Int i = 0;
  for (const auto& row : rows) {
    Int j = 0;
    for (Int v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

// rational Gaussian elimination, used as an independent determinant oracle
Rational det_rational(const IMat& m) {
  const Int n = m.rows();
  QMat w(n, n);
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < n; ++j) w(i, j) = Rational(m(i, j));
  Rational det = 1;
  for (Int k = 0; k < n; ++k) {
    Int p = -1;
    for (Int i = k; i < n; ++i)
      if (w(i, k) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != k) {
      w.row(p).swap(w.row(k));
      det = -det;
    }
    det *= w(k, k);
    for (Int i = k + 1; i < n; ++i) {
      Rational f = w(i, k) / w(k, k);
      for (Int j = k; j < n; ++j) w(i, j) -= f * w(k, j);
    }
  }
  return det;
}

const IMat kF = mat({{2, -1, 0}, {-1, 2, -2}, {0, -2, 2}});

}  // namespace

TEST_CASE("gcm validation") {
  CHECK_NOTHROW(validate_gcm(kF));
  CHECK_THROWS_WITH_AS(validate_gcm(mat({{1}})), doctest::Contains("diagonal"), Error);
  CHECK_THROWS_WITH_AS(validate_gcm(mat({{2, 1}, {-1, 2}})), doctest::Contains("off-diagonal"),
                       Error);
  CHECK_THROWS_WITH_AS(validate_gcm(mat({{2, 0}, {-1, 2}})), doctest::Contains("requires"), Error);
  IMat rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS(validate_gcm(rect), Error);
}

TEST_CASE("exact determinants of the named types") {
  for (Int r = 1; r <= 8; ++r)
    CHECK(det_exact(finite_type("A" + std::to_string(r)).a) == r + 1);
  for (Int r = 2; r <= 5; ++r) {
    CHECK(det_exact(finite_type("B" + std::to_string(r)).a) == 2);
    CHECK(det_exact(finite_type("C" + std::to_string(r)).a) == 2);
  }
  for (Int r = 4; r <= 6; ++r)
    CHECK(det_exact(finite_type("D" + std::to_string(r)).a) == 4);
  CHECK(det_exact(finite_type("E6").a) == 3);
  CHECK(det_exact(finite_type("E7").a) == 2);
  CHECK(det_exact(finite_type("E8").a) == 1);
  CHECK(det_exact(finite_type("F4").a) == 1);
  CHECK(det_exact(finite_type("G2").a) == 1);
  CHECK(det_exact(kF) == -2);
}

TEST_CASE("determinant against rational elimination") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<Int> entry(-4, 4), size(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    Int n = size(rng);
    IMat m(n, n);
    for (Int i = 0; i < n; ++i)
      for (Int j = 0; j < n; ++j) m(i, j) = entry(rng);
    CHECK(Rational(det_exact(m)) == det_rational(m));
  }
}

TEST_CASE("classification trichotomy") {
  CHECK(classify(finite_type("A2")).kind == CartanKind::finite);
  CHECK(classify(finite_type("E8")).kind == CartanKind::finite);
  CHECK(classify(validate_gcm(mat({{2, -2}, {-2, 2}}))).kind == CartanKind::affine);
  CartanClass h = classify(validate_gcm(mat({{2, -3}, {-3, 2}})));
  CHECK(h.kind == CartanKind::indefinite);
  CHECK(h.hyperbolic);
  CartanClass f = classify(validate_gcm(kF));
  CHECK(f.kind == CartanKind::indefinite);
  CHECK(f.hyperbolic);
  // an indefinite proper subdiagram kills hyperbolicity
  CartanClass nh = classify(validate_gcm(mat({{2, -3, 0}, {-3, 2, -1}, {0, -1, 2}})));
  CHECK(nh.kind == CartanKind::indefinite);
  CHECK(!nh.hyperbolic);
  IMat block = IMat::Zero(4, 4);
  block.block(0, 0, 2, 2) = finite_type("A2").a;
  block.block(2, 2, 2, 2) = finite_type("A2").a;
  CHECK_THROWS_AS(classify(validate_gcm(block)), Error);
}

TEST_CASE("component-wise classification") {
  auto blockdiag = [](const IMat& a, const IMat& b) {
    IMat m = IMat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    m.block(0, 0, a.rows(), a.cols()) = a;
    m.block(a.rows(), a.cols(), b.rows(), b.cols()) = b;
    return m;
  };
  IMat aff = mat({{2, -2}, {-2, 2}});
  IMat ind = mat({{2, -3}, {-3, 2}});
  IMat fin = finite_type("A2").a;
  CHECK(classify_components(validate_gcm(blockdiag(fin, fin))).kind == CartanKind::finite);
  CHECK(classify_components(validate_gcm(blockdiag(fin, aff))).kind == CartanKind::affine);
  CHECK(classify_components(validate_gcm(blockdiag(aff, ind))).kind == CartanKind::indefinite);
  // single component falls through to the full classification
  CHECK(classify_components(validate_gcm(kF)).hyperbolic);
}

TEST_CASE("symmetrizers") {
  for (const char* label : {"A3", "B2", "B4", "C3", "D4", "F4", "G2", "E6"}) {
    Gcm g = finite_type(label);
    auto [d, dm] = symmetrize(g);
    CHECK(d.minCoeff() >= 1);
    CHECK(dm == IMat(dm.transpose()));
    Int gcd = 0;
    for (Int i = 0; i < d.size(); ++i) gcd = std::gcd(gcd, d[i]);
    CHECK(gcd == 1);
  }
  // a 3-cycle with mismatched bond ratios cannot be symmetrized
  IMat bad = mat({{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}});
  CHECK_THROWS_AS(symmetrize(validate_gcm(bad)), Error);
}

TEST_CASE("gram matrices") {
  CHECK(gram_matrix(validate_gcm(kF)) == kF);  // symmetric GCM is its own Gram matrix
  IMat gb2 = gram_matrix(finite_type("B2"));
  CHECK(gb2 == mat({{4, -2}, {-2, 2}}));
  for (const char* label : {"A2", "C3", "G2", "F4"}) {
    IMat g = gram_matrix(finite_type(label));
    CHECK(g == IMat(g.transpose()));
    for (Int j = 0; j < g.rows(); ++j) CHECK(g(j, j) % 2 == 0);
  }
}

TEST_CASE("marks of affine matrices") {
  IVec m1 = marks(validate_gcm(mat({{2, -2}, {-2, 2}})), 0);
  CHECK(m1 == IVec(IVec::Constant(2, 1)));
  IVec m2 = marks(validate_gcm(mat({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}})), 0);
  CHECK(m2 == IVec(IVec::Constant(3, 1)));
  // the marks annihilate the matrix from the left
  Overextension oe = overextend(finite_type("D4"));
  IVec md = oe.marks;
  CHECK((md.transpose() * oe.affine.a).isZero());
  CHECK(md[0] == 1);
  CHECK(md.sum() == 1 + 1 + 2 + 1 + 1);
  CHECK_THROWS_WITH_AS(marks(finite_type("A2"), 0), doctest::Contains("affine"), Error);
}

TEST_CASE("positive root counts of the finite types") {
  auto count = [](const char* label) {
    return static_cast<Int>(finite_positive_roots(finite_type(label)).size());
  };
  CHECK(count("A1") == 1);
  CHECK(count("A2") == 3);
  CHECK(count("A3") == 6);
  CHECK(count("A4") == 10);
  CHECK(count("B2") == 4);
  CHECK(count("B3") == 9);
  CHECK(count("C3") == 9);
  CHECK(count("D4") == 12);
  CHECK(count("G2") == 6);
  CHECK(count("F4") == 24);
  CHECK(count("E6") == 36);
  CHECK(count("E7") == 63);
  CHECK(count("E8") == 120);
  CHECK_THROWS_AS(finite_positive_roots(validate_gcm(mat({{2, -2}, {-2, 2}}))), Error);
}

TEST_CASE("highest roots") {
  IVec a3 = highest_root(finite_type("A3"));
  CHECK(a3 == IVec(IVec::Constant(3, 1)));
  IVec d4 = highest_root(finite_type("D4"));
  IVec d4_expect(4);
  d4_expect << 1, 2, 1, 1;
  CHECK(d4 == d4_expect);
  IVec g2 = highest_root(finite_type("G2"));
  IVec g2_expect(2);
  g2_expect << 3, 2;
  CHECK(g2 == g2_expect);
  IVec e8 = highest_root(finite_type("E8"));
  IVec e8_expect(8);
  e8_expect << 2, 3, 4, 6, 5, 4, 3, 2;
  CHECK(e8 == e8_expect);
}

TEST_CASE("over-extension of A1 gives the rank-3 matrix") {
  Overextension oe = overextend(finite_type("A1"), "A1");
  CHECK(oe.full.a == kF);
  CHECK(oe.affine.a == mat({{2, -2}, {-2, 2}}));
  REQUIRE(oe.gram.rows() == 3);
  for (Int i = 0; i < 3; ++i)
    for (Int j = 0; j < 3; ++j) CHECK(oe.gram(i, j) == Rational(kF(i, j)));
  CHECK(oe.label == "A1");
}

TEST_CASE("over-extension determinant flips the finite one") {
  for (const char* label :
       {"A1", "A2", "A3", "A4", "A5", "B3", "C3", "D4", "E6", "E7", "E8", "F4", "G2"}) {
    Overextension oe = overextend(finite_type(label), label);
    CHECK(det_exact(oe.affine.a) == 0);
    CHECK(det_exact(oe.full.a) == -det_exact(oe.finite.a));
    CHECK(oe.gram(0, 0) == 2);
    CHECK(oe.gram(0, 1) == -1);
    CHECK(oe.gram(1, 1) == 2);
    for (Int j = 2; j < oe.full.n(); ++j) CHECK(oe.gram(0, j) == 0);
  }
  CHECK_THROWS_AS(overextend(validate_gcm(mat({{2, -2}, {-2, 2}}))), Error);
}

TEST_CASE("series determinant identities") {
  for (Int m = 0; m <= 6; ++m) {
    IMat c = mat({{2, -m, 0}, {-m, 2, -2}, {0, -2, 2}});
    CHECK(det_identity_check(c, m, SeriesVariant::rank_r2));
    CHECK(det_exact(c) == -2 * m * m);
  }
  // rank-r1 shape over A2: corner -m against the finite block
  for (Int m = 0; m <= 6; ++m) {
    IMat c = mat({{2, -m, 0}, {-m, 2, -1}, {0, -1, 2}});
    CHECK(det_identity_check(c, m, SeriesVariant::rank_r1));
    CHECK(det_exact(c) == 2 * 3 - m * m * 2);
  }
  IMat off = mat({{2, -3, 0}, {-3, 2, -2}, {0, -2, 2}});
  CHECK(!det_identity_check(off, 2, SeriesVariant::rank_r2));
}

TEST_CASE("unknown finite-type labels") {
  for (const char* label : {"A0", "Z4", "E9", "F5", "G3", "B1", "D3", "X", ""})
    CHECK_THROWS_AS(finite_type(label), Error);
}
