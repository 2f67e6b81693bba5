#include <doctest.h>

#include "km/json_io.hpp"

using namespace km;

TEST_CASE("scalar encodings") {
  CHECK(json_int(BigInt(42)) == Json(42));
  CHECK(json_int(BigInt(-7)) == Json(-7));
  BigInt big = BigInt("123456789012345678901234567890");
  Json jb = json_int(big);
  REQUIRE(jb.is_string());
  CHECK(jb.get<std::string>() == "123456789012345678901234567890");
  CHECK(json_int(-big).get<std::string>() == "-123456789012345678901234567890");

  CHECK(json_rational(Rational(6, 2)) == Json(3));
  Json half = json_rational(Rational(3, 2));
  REQUIRE(half.is_string());
  CHECK(half.get<std::string>() == "3/2");
  CHECK(json_rational(Rational(-1, 4)).get<std::string>() == "-1/4");
}

TEST_CASE("vector and matrix encodings") {
  CHECK(json_coords(Coords{1, -2, 3}).dump() == "[1,-2,3]");
  IVec v(2);
  v << 5, -6;
  CHECK(json_ivec(v).dump() == "[5,-6]");
  IMat m(2, 2);
  m << 2, -1, -1, 2;
  CHECK(json_imat(m).dump() == "[[2,-1],[-1,2]]");

  Json r = json_root(alpha(0));
  CHECK(r["coords"].dump() == "[0,1,0]");
  CHECK(r["matrix"].dump() == "[[-1,-1],[-1,0]]");

  CHECK(json_word({Gen::rm1, Gen::r0, Gen::r1}).dump() == R"(["r-1","r0","r1"])");
}

TEST_CASE("documents lead with tool and version") {
  Json payload = Json::object();
  payload["answer"] = 42;
  std::string text = dump_document(payload);
  CHECK(text.substr(0, 40) == "{\n  \"tool\": \"km\",\n  \"version\": \"0.1.0\",\n");
  CHECK(text.back() == '\n');
  CHECK(text == dump_document(payload));

  Json err = error_json("NotRoot", "input is not a root");
  CHECK(err["tool"] == "km");
  CHECK(err["error"]["code"] == "NotRoot");
  CHECK(err["error"]["message"] == "input is not a root");
}

TEST_CASE("report views") {
  Json st = to_json(root_status_F(to_matrix(Coords{2, 4, 4})));
  CHECK(st["is_root"] == true);
  CHECK(st["kind"] == "imaginary");
  CHECK(st["sign"] == "positive");
  CHECK(st["det"] == 4);
  CHECK(st["norm"] == -8);
  CHECK(st["level"] == -2);

  Json neg = to_json(root_status_F(SymMat2{0, 2, 0}));  // non-root
  CHECK(neg["is_root"] == false);
  CHECK(neg["kind"].is_null());

  Json nf = to_json(lightcone_normal_form(to_matrix(Coords{0, 2, 2})));
  CHECK(nf["a"] == -2);
  REQUIRE(nf["word"].is_array());
  CHECK(nf["pgl_matrix"].is_array());

  Json rs = to_json(root_string_F(alpha(0), alpha(1)));
  CHECK(rs["p"] == 0);
  CHECK(rs["q"] == 2);

  Json cc = to_json(classify(overextend(finite_type("A1")).full));
  CHECK(cc["kind"] == "Indefinite");
  CHECK(cc["hyperbolic"] == true);

  Json pa = to_json(pair_angle(alpha(0), alpha(1)));
  CHECK(pa["kind"] == "Ideal");
  CHECK(pa["product"] == -2);
  CHECK(pa["theta"].is_null());
  CHECK(to_json(pair_angle(alpha(-1), alpha(1)))["theta"].is_number());

  Json ra = to_json(region_area({alpha(-1), alpha(0), alpha(1)}));
  CHECK(ra["finite"] == true);
  CHECK(ra["area_sixths"] == 1);
  CHECK(ra["boundary_order"].size() == 3);
  Json inf = to_json(region_area({alpha(-1), alpha(1)}));
  CHECK(inf["area"] == "Infinite");
  CHECK(inf["area_sixths"].is_null());

  Json ix = to_json(index_in_W({alpha(-1), alpha(0), alpha(1)}));
  CHECK(ix["finite"] == true);
  CHECK(ix["index"] == 1);
  CHECK(to_json(SubgroupIndex{false, 0})["index"] == "Infinite");

  Json gd = to_json(project_root_line(alpha(0)));
  CHECK(gd["diameter"] == false);
  CHECK(gd["endpoints"][0]["x"] == 1);
  CHECK(gd["endpoints"][1]["x"] == "-3/5");
  CHECK(gd["center"][0] == doctest::Approx(1.0));
  CHECK(gd["radius"] == doctest::Approx(2.0));
  Json dia = to_json(project_root_line(alpha(1)));
  CHECK(dia["diameter"] == true);
  CHECK(dia["center"].is_null());
  CHECK(dia["radius"].is_null());
}

TEST_CASE("subalgebra report view") {
  Ambient amb = ambient_F();
  Json ok = to_json(check_simple_set(amb, example_fixtures().at("example-4.1")));
  CHECK(ok["validity"] == "Valid");
  CHECK(ok["roots"].size() == 3);
  CHECK(ok["cartan"].dump() == "[[2,-2,-2],[-2,2,-2],[-2,-2,2]]");
  CHECK(ok["classification"]["kind"] == "Indefinite");
  CHECK(ok["offending_pair"].is_null());
  CHECK(ok["dependencies"].empty());
  CHECK(ok["difference_verdicts"][0][1] == "NotRoot");

  IVec b0(3), b1(3);
  b0 << 0, 1, 0;
  b1 << 0, 1, 1;
  Json badj = to_json(check_simple_set(amb, {b0, b1}));
  CHECK(badj["validity"] == "Invalid");
  CHECK(badj["offending_pair"].dump() == "[0,1]");
  CHECK(badj["cartan"].is_null());

  Json cw = to_json(commutator_word(Coords{0, 1, 2}));
  CHECK(cw["target"].dump() == "[0,1,2]");
  CHECK(cw["letters"].dump() == "[1,0,1]");
  CHECK(cw["text"] == "[e1, [e0, e1]]");
}

TEST_CASE("graded table views") {
  PlaneSlice s = plane_roots(3, 4);
  Json js = to_json(s);
  CHECK(js["m"] == 3);
  CHECK(js["hheight_bound"] == 4);
  REQUIRE(js["rows"].is_array());
  CHECK(js["rows"][0]["grade"].dump() == "[0,1]");
  for (const auto& row : js["rows"]) {
    CHECK(row.contains("coords"));
    CHECK(row.contains("mult_F"));
    CHECK(row.contains("mult_H"));
    CHECK(row.contains("gap"));
  }

  GradedDims g;
  g[Grade{1}] = 2;
  g[Grade{3}] = BigInt("98765432109876543210");
  Json jg = to_json(g);
  CHECK(jg.dump() == R"([{"grade":[1],"count":2},{"grade":[3],"count":"98765432109876543210"}])");

  LineDecomposition ld = line_borcherds_h3(4);
  Json jl = to_json(ld);
  CHECK(jl["height_bound"] == 4);
  CHECK(jl["dims"].size() == 4);
  CHECK(jl["grade1_dim"] == 1);
  CHECK(jl["m_plus"].is_array());
  CHECK(jl["free_generators"].is_array());

  SimpleMultTable sm = mu_simple_mults(3, 4);
  Json jm = to_json(sm);
  CHECK(jm["m"] == 3);
  CHECK(jm["free_generators_ok"] == true);
  bool found = false;
  for (const auto& row : jm["mu"]) {
    if (row["grade"].dump() == "[1,1]") {
      CHECK(row["mu"] == 1);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("input parsing") {
  CHECK(parse_ivec(Json::parse("[1,2,3,4]")) == IVec(IVec::LinSpaced(4, 1, 4)));
  CHECK(parse_coords(Json::parse("[0,1,2]")) == Coords{0, 1, 2});
  std::vector<IVec> roots = parse_root_list(Json::parse("[[1,0,0],[0,1,0]]"));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0][0] == 1);
  CHECK(roots[1][1] == 1);

  CHECK_THROWS_AS(parse_ivec(Json::parse("[]")), Error);
  CHECK_THROWS_AS(parse_ivec(Json::parse("[1,\"x\"]")), Error);
  CHECK_THROWS_AS(parse_ivec(Json::parse("{\"a\":1}")), Error);
  CHECK_THROWS_AS(parse_ivec(Json::parse("[1.5]")), Error);
  CHECK_THROWS_AS(parse_coords(Json::parse("[1,2]")), Error);
  CHECK_THROWS_AS(parse_root_list(Json::parse("[]")), Error);
  CHECK_THROWS_AS(parse_root_list(Json::parse("[[1,2],3]")), Error);
}
