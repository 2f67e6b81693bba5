#include <doctest.h>

#include "km/subalgebras.hpp"

using namespace km;

namespace {

IVec vec3(Int a, Int b, Int c) {
  IVec v(3);
  v << a, b, c;
  return v;
}

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

}  // namespace

TEST_CASE("exact ambient root test") {
  Ambient amb = ambient_F();
  CHECK(amb.exact);
  CHECK(amb.rank() == 3);
  CHECK(ambient_root_test(amb, vec3(0, 1, 1)) == RootTest::yes);
  CHECK(ambient_root_test(amb, vec3(1, 0, 0)) == RootTest::yes);
  CHECK(ambient_root_test(amb, vec3(2, 4, 4)) == RootTest::yes);
  CHECK(ambient_root_test(amb, vec3(-2, -4, -4)) == RootTest::yes);
  CHECK(ambient_root_test(amb, vec3(1, -1, 0)) == RootTest::no);
  CHECK(ambient_root_test(amb, vec3(1, 0, 1)) == RootTest::no);
  CHECK(ambient_root_test(amb, vec3(0, 0, 0)) == RootTest::no);
  CHECK_THROWS_AS(ambient_root_test(amb, IVec(IVec::Zero(2))), Error);

  CHECK(is_positive_real_root(amb, vec3(1, 0, 0)));
  CHECK(is_positive_real_root(amb, vec3(0, 1, 2)));
  CHECK(!is_positive_real_root(amb, vec3(2, 4, 4)));  // imaginary
  CHECK(!is_positive_real_root(amb, vec3(0, -1, 0)));
  CHECK(!is_positive_real_root(amb, vec3(0, 1, 1)));  // null
}

TEST_CASE("lorentzian ambient agrees with the exact one") {
  Overextension oe = overextend(finite_type("A1"), "A1");
  Ambient exact = ambient_F();
  Ambient probe8 = ambient_lorentzian(oe, 8);
  Ambient blind = ambient_lorentzian(oe, 0);
  CHECK(!probe8.exact);

  for (const SymMat2& n : enumerate_roots_F(-4, 4, 8)) {
    Coords c = to_coords(n);
    IVec v = vec3(c[0], c[1], c[2]);
    CHECK(ambient_root_test(probe8, v) == RootTest::yes);
    CHECK(is_positive_real_root(probe8, v) == is_positive_real_root(exact, v));
  }
  // non-roots across the three decision paths
  CHECK(ambient_root_test(probe8, vec3(1, -1, 0)) == RootTest::no);   // mixed sign
  CHECK(ambient_root_test(probe8, vec3(0, 1, 3)) == RootTest::no);    // affine slice
  CHECK(ambient_root_test(probe8, vec3(1, 0, 1)) == RootTest::no);    // positive norm descent
  CHECK(ambient_root_test(probe8, vec3(0, 5, 5)) == RootTest::yes);   // affine null
  CHECK(ambient_root_test(probe8, vec3(0, 5, 4)) == RootTest::yes);   // affine real

  // deep timelike vectors need the probe table
  CHECK(ambient_root_test(blind, vec3(2, 4, 4)) == RootTest::unknown);
  CHECK(ambient_root_test(probe8, vec3(3, 12, 12)) == RootTest::unknown);  // beyond frontier
  Ambient probe27 = ambient_lorentzian(oe, 27);
  CHECK(ambient_root_test(probe27, vec3(3, 12, 12)) == RootTest::yes);
}

TEST_CASE("fixture reports carry the published Cartan matrices") {
  Ambient amb = ambient_F();
  const auto& fx = example_fixtures();
  REQUIRE(fx.size() == 7);

  auto cartan_of = [&](const char* name) {
    SubalgebraReport r = check_simple_set(amb, fx.at(name));
    CHECK(r.validity == Validity::valid);
    CHECK(!r.offending_pair.has_value());
    REQUIRE(r.cartan.has_value());
    return *r.cartan;
  };

  CHECK(cartan_of("fundamental") == mat({{2, -1, 0}, {-1, 2, -2}, {0, -2, 2}}));
  CHECK(cartan_of("example-4.1") == mat({{2, -2, -2}, {-2, 2, -2}, {-2, -2, 2}}));
  CHECK(cartan_of("example-4.1b") == mat({{2, -2, -2}, {-2, 2, -2}, {-2, -2, 2}}));
  CHECK(cartan_of("example-4.2") == mat({{2, -10, -10}, {-10, 2, -10}, {-10, -10, 2}}));
  CHECK(cartan_of("example-4.3") == mat({{2, -6, -6}, {-6, 2, -2}, {-6, -2, 2}}));
  CHECK(cartan_of("example-4.4") == mat({{2, -3, -2}, {-3, 2, -2}, {-2, -2, 2}}));
  CHECK(cartan_of("example-4.5") ==
        mat({{2, -2, -4, -2}, {-2, 2, -2, -10}, {-4, -2, 2, -2}, {-2, -10, -2, 2}}));

  SubalgebraReport dep = check_simple_set(amb, fx.at("example-4.5"));
  REQUIRE(dep.dependencies.size() == 1);
  IVec rel(4);
  rel << 2, -1, 2, -1;
  CHECK(dep.dependencies[0] == rel);
  for (const char* name : {"example-4.1", "example-4.2", "example-4.3", "example-4.4"})
    CHECK(check_simple_set(amb, fx.at(name)).dependencies.empty());
}

TEST_CASE("offending pairs") {
  Ambient amb = ambient_F();
  // the difference of these two is a simple root
  SubalgebraReport r = check_simple_set(amb, {vec3(0, 1, 0), vec3(0, 1, 1)});
  CHECK(r.validity == Validity::invalid);
  REQUIRE(r.offending_pair.has_value());
  CHECK(*r.offending_pair == std::pair<Int, Int>{0, 1});
  CHECK(r.difference_verdicts[0][1] == RootTest::yes);
  CHECK(!r.cartan.has_value());  // the null member has norm 0

  // two real roots at positive pairing: difference must be a root
  SubalgebraReport s = check_simple_set(amb, {vec3(0, 1, 2), vec3(0, 0, 1)});
  CHECK(s.validity == Validity::invalid);
}

TEST_CASE("candidate screening errors") {
  Ambient amb = ambient_F();
  CHECK_THROWS_WITH_AS(check_simple_set(amb, {}), doctest::Contains("empty"), Error);
  CHECK_THROWS_WITH_AS(check_simple_set(amb, {vec3(1, 0, 0), vec3(1, 0, 0)}),
                       doctest::Contains("distinct"), Error);
  CHECK_THROWS_AS(check_simple_set(amb, {vec3(0, -1, 0)}), Error);
  CHECK_THROWS_AS(check_simple_set(amb, {vec3(1, -1, 0)}), Error);
  // an imaginary candidate whose differences are no-roots ends in the member check
  CHECK_THROWS_WITH_AS(check_simple_set(amb, {vec3(2, 4, 4)}), doctest::Contains("positive real"),
                       Error);
  IVec short_vec(2);
  short_vec << 1, 0;
  CHECK_THROWS_AS(check_simple_set(amb, {short_vec}), Error);
}

TEST_CASE("two-generator series") {
  Ambient amb = ambient_F();
  for (Int m = 1; m <= 12; ++m)
    for (int sign : {-1, 1}) {
      std::vector<IVec> roots = series_h(m, sign);
      REQUIRE(roots.size() == 2);
      CHECK(roots[0] == vec3(1, 0, 0));
      CHECK(roots[1] == vec3(0, m, m + sign));
      // beta_1 as a lattice matrix: [-m, sign; sign, 0]
      CHECK(to_matrix(Coords{0, m, m + sign}) == SymMat2{-m, sign, 0});
      SubalgebraReport r = check_simple_set(amb, roots);
      CHECK(r.validity == Validity::valid);
      REQUIRE(r.cartan.has_value());
      CHECK(*r.cartan == mat({{2, -m}, {-m, 2}}));
      CHECK(r.dependencies.empty());
      REQUIRE(r.classification.has_value());
      CartanKind expect = m == 1   ? CartanKind::finite
                          : m == 2 ? CartanKind::affine
                                   : CartanKind::indefinite;
      CHECK(r.classification->kind == expect);
      if (m >= 3) CHECK(r.classification->hyperbolic);
    }
  CHECK_THROWS_AS(series_h(0, -1), Error);
  CHECK_THROWS_AS(series_h(3, 2), Error);
}

TEST_CASE("series with a shifted affine generator over larger ambients") {
  for (const char* label : {"A2", "A3", "D4"}) {
    Overextension oe = overextend(finite_type(label), label);
    Ambient amb = ambient_lorentzian(oe, 0);
    const Int r = oe.finite.n();
    for (Int m = 0; m <= 5; ++m) {
      std::vector<IVec> roots = series_rank_r1(oe, m);
      REQUIRE(static_cast<Int>(roots.size()) == r + 1);
      SubalgebraReport rep = check_simple_set(amb, roots);
      CHECK(rep.validity == Validity::valid);
      REQUIRE(rep.cartan.has_value());
      const IMat& c = *rep.cartan;
      // corner pattern: node 0 couples only to node 1, with entry -m
      CHECK(c(0, 0) == 2);
      CHECK(c(0, 1) == -m);
      CHECK(c(1, 0) == -m);
      for (Int j = 2; j <= r; ++j) {
        CHECK(c(0, j) == 0);
        CHECK(c(j, 0) == 0);
      }
      // remaining block is the finite Cartan matrix
      for (Int i = 1; i <= r; ++i)
        for (Int j = 1; j <= r; ++j) CHECK(c(i, j) == oe.finite.a(i - 1, j - 1));
      CHECK(det_identity_check(c, m, SeriesVariant::rank_r1));
    }
  }
  // closed-form determinant over the A family
  for (Int r = 1; r <= 8; ++r) {
    Overextension oe = overextend(finite_type("A" + std::to_string(r)));
    for (Int m = 0; m <= 10; ++m) {
      SubalgebraReport rep =
          check_simple_set(ambient_lorentzian(oe, 0), series_rank_r1(oe, m));
      REQUIRE(rep.cartan.has_value());
      CHECK(det_exact(*rep.cartan) == 2 * (r + 1) - m * m * r);
    }
  }
  CHECK_THROWS_AS(series_rank_r1(overextend(finite_type("A2")), -1), Error);
}

TEST_CASE("series with a shifted over-extended generator") {
  Overextension oe = overextend(finite_type("A1"), "A1");
  Ambient amb = ambient_F();
  for (Int m = 1; m <= 10; ++m) {
    std::vector<IVec> roots = series_rank_r2(oe, m);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == vec3(1, 0, 0));
    CHECK(roots[1] == vec3(0, m, m - 1));
    CHECK(roots[2] == vec3(0, 0, 1));
    SubalgebraReport rep = check_simple_set(amb, roots);
    CHECK(rep.validity == Validity::valid);
    REQUIRE(rep.cartan.has_value());
    CHECK(*rep.cartan == mat({{2, -m, 0}, {-m, 2, -2}, {0, -2, 2}}));
    CHECK(det_identity_check(*rep.cartan, m, SeriesVariant::rank_r2));
    REQUIRE(rep.classification.has_value());
    CHECK(rep.classification->kind == CartanKind::indefinite);
    // minimal null root of the new affine block: gamma_0 + alpha_1 = m delta
    CHECK(roots[1] + roots[2] == vec3(0, m, m));
  }
  // m = 1 returns the ambient simple roots themselves
  std::vector<IVec> base = series_rank_r2(oe, 1);
  CHECK(base[1] == vec3(0, 1, 0));
  CHECK_THROWS_AS(series_rank_r2(oe, 0), Error);
}

TEST_CASE("kernel relations") {
  std::vector<IVec> dep = linear_dependencies({vec3(1, 0, 0), vec3(2, 0, 0)}, 3);
  REQUIRE(dep.size() == 1);
  IVec rel(2);
  rel << 2, -1;
  CHECK(dep[0] == rel);
  CHECK(linear_dependencies({vec3(1, 0, 0), vec3(0, 1, 0)}, 3).empty());
  CHECK_THROWS_AS(linear_dependencies({vec3(1, 0, 0), IVec(IVec::Zero(2))}, 3), Error);
}

TEST_CASE("commutator words") {
  CommutatorWord w1 = commutator_word(Coords{0, 0, 1});
  CHECK(w1.text() == "e1");
  CHECK(w1.letters == std::vector<int>{1});

  CommutatorWord w0 = commutator_word(Coords{0, 1, 0});
  CHECK(w0.text() == "e0");

  CommutatorWord w = commutator_word(Coords{0, 1, 2});
  CHECK(w.text() == "[e1, [e0, e1]]");
  CHECK(w.target == Coords{0, 1, 2});

  // the alternating pattern of the shifted-generator series, length 2m + 1
  CommutatorWord deep = commutator_word(Coords{0, 2, 3});
  CHECK(deep.text() == "[e1, [e0, [e1, [e0, e1]]]]");
  CHECK(deep.letters.size() == 5);

  // letters always sum to the target root
  for (const SymMat2& n : enumerate_roots_F(-3, 3, 9)) {
    RootStatus st = root_status_F(n);
    if (st.kind != RootKind::real || st.sign != RootSign::positive) continue;
    Coords c = to_coords(n);
    CommutatorWord cw = commutator_word(c);
    Coords sum = Coords::Zero();
    for (int letter : cw.letters) sum += to_coords(alpha(letter));
    CHECK(sum == c);
    CHECK(static_cast<Int>(cw.letters.size()) == coord_height(n));
  }

  CHECK_THROWS_WITH_AS(commutator_word(Coords{2, 4, 4}), doctest::Contains("real"), Error);
  CHECK_THROWS_AS(commutator_word(Coords{0, 0, -1}), Error);
  CHECK_THROWS_AS(commutator_word(Coords{0, 0, 0}), Error);
}

TEST_CASE("validity and verdict names") {
  CHECK(std::string(to_string(Validity::valid)) == "Valid");
  CHECK(std::string(to_string(Validity::conditionally_valid)) == "ConditionallyValid");
  CHECK(std::string(to_string(Validity::invalid)) == "Invalid");
  CHECK(std::string(to_string(RootTest::yes)) == "IsRoot");
  CHECK(std::string(to_string(RootTest::no)) == "NotRoot");
  CHECK(std::string(to_string(RootTest::unknown)) == "Unknown");
}
