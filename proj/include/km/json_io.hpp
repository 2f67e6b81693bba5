#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "km/borcherds.hpp"
#include "km/cartan.hpp"
#include "km/disk_geometry.hpp"
#include "km/f_lattice.hpp"
#include "km/roots_mult.hpp"
#include "km/subalgebras.hpp"
#include "km/witt.hpp"

// JSON views of the report types.  Conventions: documents carry the tool name
// and version up front; big integers degrade to decimal strings only when
// they do not fit in 64 bits; rationals with denominator 1 are numbers,
// otherwise "p/q" strings.

namespace km {

using Json = nlohmann::ordered_json;

Json json_int(const BigInt& v);
Json json_rational(const Rational& q);
Json json_coords(const Coords& n);
Json json_ivec(const IVec& v);
Json json_imat(const IMat& m);
Json json_root(const SymMat2& x);  // {"coords": [...], "matrix": [[a,b],[b,c]]}
Json json_word(const std::vector<Gen>& w);

// {"tool": ..., "version": ..., <payload fields>}
Json json_document(const Json& payload);
std::string dump_document(const Json& payload);
Json error_json(const std::string& code, const std::string& message);

Json to_json(const RootStatus& s);
Json to_json(const NormalForm& nf);
Json to_json(const RootString& rs);
Json to_json(const CartanClass& c);
Json to_json(const SubalgebraReport& r);
Json to_json(const CommutatorWord& w);
Json to_json(const DiskGeodesic& g);
Json to_json(const PairAngle& p);
Json to_json(const RegionArea& a);
Json to_json(const SubgroupIndex& i);
Json to_json(const PlaneSlice& s);
Json to_json(const SimpleMultTable& t);
Json to_json(const LineDecomposition& d);
Json to_json(const GradedDims& d);

// Input parsing.  Errors: InputError.
IVec parse_ivec(const Json& j);
Coords parse_coords(const Json& j);
std::vector<IVec> parse_root_list(const Json& j);

}  // namespace km
