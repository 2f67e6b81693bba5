#include "km/json_io.hpp"

#include <limits>

#include "km/errors.hpp"
#include "km/version.hpp"

namespace km {

namespace {

const char* kind_name(RootKind k) {
  switch (k) {
    case RootKind::real: return "real";
    case RootKind::lightcone: return "lightcone";
    case RootKind::imaginary: return "imaginary";
  }
  return "?";
}

const char* sign_name(RootSign s) {
  return s == RootSign::positive ? "positive" : "negative";
}

const char* pair_kind_name(PairKind k) {
  switch (k) {
    case PairKind::intersecting: return "Intersecting";
    case PairKind::ideal: return "Ideal";
    case PairKind::ultraparallel: return "Ultraparallel";
  }
  return "?";
}

Json json_mat2i(const Mat2i& m) {
  return Json::array({Json::array({m(0, 0), m(0, 1)}), Json::array({m(1, 0), m(1, 1)})});
}

Json json_ideal_point(const IdealPoint& p) {
  Json j = Json::object();
  j["direction"] = Json::array({p.p, p.q});
  j["x"] = json_rational(p.x);
  j["y"] = json_rational(p.y);
  return j;
}

Json json_graded(const GradedDims& d, const char* value_key) {
  Json rows = Json::array();
  for (const auto& [grade, count] : d) {
    Json row = Json::object();
    Json g = Json::array();
    for (Int gi : grade) g.push_back(gi);
    row["grade"] = std::move(g);
    row[value_key] = json_int(count);
    rows.push_back(std::move(row));
  }
  return rows;
}

Json json_dims2(const Dims2& d, const char* value_key) {
  Json rows = Json::array();
  for (const auto& [grade, count] : d) {
    Json row = Json::object();
    row["grade"] = Json::array({grade[0], grade[1]});
    row[value_key] = json_int(count);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json json_int(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

Json json_rational(const Rational& q) {
  if (is_integer(q)) return json_int(numerator(q));
  return Json(numerator(q).str() + "/" + denominator(q).str());
}

Json json_coords(const Coords& n) { return Json::array({n[0], n[1], n[2]}); }

Json json_ivec(const IVec& v) {
  Json j = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(v[i]);
  return j;
}

Json json_imat(const IMat& m) {
  Json j = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    j.push_back(std::move(row));
  }
  return j;
}

Json json_root(const SymMat2& x) {
  Json j = Json::object();
  j["coords"] = json_coords(to_coords(x));
  j["matrix"] = Json::array({Json::array({x.a, x.b}), Json::array({x.b, x.c})});
  return j;
}

Json json_word(const std::vector<Gen>& w) {
  Json j = Json::array();
  for (Gen g : w) j.push_back(gen_name(g));
  return j;
}

Json json_document(const Json& payload) {
  Json doc = Json::object();
  doc["tool"] = kToolName;
  doc["version"] = kVersion;
  for (const auto& [key, value] : payload.items()) doc[key] = value;
  return doc;
}

std::string dump_document(const Json& payload) { return json_document(payload).dump(2) + "\n"; }

Json error_json(const std::string& code, const std::string& message) {
  Json e = Json::object();
  e["error"] = Json::object();
  e["error"]["code"] = code;
  e["error"]["message"] = message;
  return json_document(e);
}

Json to_json(const RootStatus& s) {
  Json j = Json::object();
  j["is_root"] = s.is_root;
  j["kind"] = s.kind ? Json(kind_name(*s.kind)) : Json(nullptr);
  j["sign"] = s.sign ? Json(sign_name(*s.sign)) : Json(nullptr);
  j["det"] = s.det;
  j["norm"] = s.norm;
  j["level"] = s.level;
  return j;
}

Json to_json(const NormalForm& nf) {
  Json j = Json::object();
  j["a"] = nf.a;
  j["word"] = nf.word.word ? json_word(*nf.word.word) : Json(nullptr);
  j["pgl_matrix"] = json_mat2i(nf.word.m);
  return j;
}

Json to_json(const RootString& rs) {
  Json j = Json::object();
  j["p"] = rs.p;
  j["q"] = rs.q;
  return j;
}

Json to_json(const CartanClass& c) {
  Json j = Json::object();
  j["kind"] = to_string(c.kind);
  j["hyperbolic"] = c.hyperbolic;
  return j;
}

Json to_json(const SubalgebraReport& r) {
  Json j = Json::object();
  j["validity"] = to_string(r.validity);
  Json roots = Json::array();
  for (const IVec& v : r.roots) roots.push_back(json_ivec(v));
  j["roots"] = std::move(roots);
  j["cartan"] = r.cartan ? json_imat(*r.cartan) : Json(nullptr);
  j["classification"] = r.classification ? to_json(*r.classification) : Json(nullptr);
  Json verdicts = Json::array();
  for (const auto& row : r.difference_verdicts) {
    Json vr = Json::array();
    for (RootTest t : row) vr.push_back(to_string(t));
    verdicts.push_back(std::move(vr));
  }
  j["difference_verdicts"] = std::move(verdicts);
  j["offending_pair"] = r.offending_pair
                            ? Json::array({r.offending_pair->first, r.offending_pair->second})
                            : Json(nullptr);
  Json deps = Json::array();
  for (const IVec& v : r.dependencies) deps.push_back(json_ivec(v));
  j["dependencies"] = std::move(deps);
  return j;
}

Json to_json(const CommutatorWord& w) {
  Json j = Json::object();
  j["target"] = json_coords(w.target);
  Json letters = Json::array();
  for (int l : w.letters) letters.push_back(l);
  j["letters"] = std::move(letters);
  j["text"] = w.text();
  return j;
}

Json to_json(const DiskGeodesic& g) {
  Json j = Json::object();
  j["root"] = json_root(g.root);
  j["diameter"] = g.is_diameter;
  j["endpoints"] = Json::array({json_ideal_point(g.end1), json_ideal_point(g.end2)});
  j["center"] = g.is_diameter ? Json(nullptr) : Json::array({g.cx, g.cy});
  j["radius"] = g.is_diameter ? Json(nullptr) : Json(g.radius);
  return j;
}

Json to_json(const PairAngle& p) {
  Json j = Json::object();
  j["kind"] = pair_kind_name(p.kind);
  j["product"] = p.product;
  j["theta"] = p.kind == PairKind::intersecting ? Json(p.theta) : Json(nullptr);
  return j;
}

Json to_json(const RegionArea& a) {
  Json j = Json::object();
  j["finite"] = a.finite;
  j["area_sixths"] = a.finite ? Json(a.area_sixths) : Json(nullptr);
  j["area"] = a.finite ? Json(a.area) : Json("Infinite");
  Json order = Json::array();
  for (Int i : a.boundary_order) order.push_back(i);
  j["boundary_order"] = std::move(order);
  return j;
}

Json to_json(const SubgroupIndex& i) {
  Json j = Json::object();
  j["finite"] = i.finite;
  j["index"] = i.finite ? Json(i.index) : Json("Infinite");
  return j;
}

Json to_json(const PlaneSlice& s) {
  Json j = Json::object();
  j["m"] = s.m;
  j["hheight_bound"] = s.hheight_bound;
  Json rows = Json::array();
  for (const PlaneRootRow& r : s.rows) {
    Json row = Json::object();
    row["grade"] = Json::array({r.a0, r.a1});
    row["coords"] = json_coords(r.f_coords);
    row["norm"] = r.norm;
    row["mult_F"] = json_int(r.mult_F);
    row["mult_H"] = json_int(r.mult_H);
    row["gap"] = json_int(r.gap);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

Json to_json(const SimpleMultTable& t) {
  Json j = Json::object();
  j["m"] = t.m;
  j["hheight_bound"] = t.hheight_bound;
  j["mu"] = json_dims2(t.mu, "mu");
  j["free_generators_ok"] = t.free_gens_ok;
  j["free_generators"] = json_dims2(t.free_gens, "count");
  return j;
}

Json to_json(const LineDecomposition& d) {
  Json j = Json::object();
  j["height_bound"] = d.height_bound;
  Json dims = Json::array();
  for (const BigInt& v : d.dims) dims.push_back(json_int(v));
  j["dims"] = std::move(dims);
  j["grade1_dim"] = json_int(d.grade1);
  j["m_plus"] = json_graded(d.m_plus, "dim");
  j["free_generators"] = json_graded(d.free_generators, "count");
  return j;
}

Json to_json(const GradedDims& d) { return json_graded(d, "count"); }

IVec parse_ivec(const Json& j) {
  if (!j.is_array() || j.empty()) fail("InputError", "expected a nonempty integer array");
  IVec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) fail("InputError", "expected a nonempty integer array");
    v[static_cast<Eigen::Index>(i)] = j[i].get<Int>();
  }
  return v;
}

Coords parse_coords(const Json& j) {
  IVec v = parse_ivec(j);
  if (v.size() != 3) fail("InputError", "expected 3 coordinates (n_-1, n_0, n_1)");
  return Coords(v[0], v[1], v[2]);
}

std::vector<IVec> parse_root_list(const Json& j) {
  if (!j.is_array() || j.empty()) fail("InputError", "expected a nonempty array of roots");
  std::vector<IVec> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(parse_ivec(e));
  return out;
}

}  // namespace km
