#pragma once

// JSON serialization for bodies and exact scalars.  Rationals travel as
// "p/q" strings so round trips stay lossless; bodies carry a dim field plus
// exactly one of vrep (vertex list) or hrep (halfspace list).

#include "latgeom/polytope.hpp"

#include "json.hpp"

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace latgeom {

using Json = nlohmann::ordered_json;

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid json: ") + e.what());
  }
}

inline Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  throw parse_error("expected a rational as \"p/q\" or an integer");
}

inline Json rat_to_json(const Rat& r) { return Json(rat_str(r)); }

inline RatVec vec_from_json(const Json& j, int dim) {
  if (!j.is_array() || j.size() != size_t(dim))
    throw parse_error("expected a coordinate array of length dim");
  RatVec v;
  for (const Json& e : j) v.push_back(rat_from_json(e));
  return v;
}

inline Json vec_to_json(const RatVec& v) {
  Json j = Json::array();
  for (const Rat& x : v) j.push_back(rat_str(x));
  return j;
}

inline Json matrix_to_json(const RatMatrix& m) {
  Json j = Json::array();
  for (int r = 0; r < m.rows; ++r) j.push_back(vec_to_json(m.row(r)));
  return j;
}

struct BodyInput {
  Polytope poly;
  HRep hrep;
};

inline Json body_to_json(const Polytope& p) {
  Json j;
  j["dim"] = p.dim;
  Json verts = Json::array();
  for (const RatVec& v : p.vertices) verts.push_back(vec_to_json(v));
  j["vrep"] = std::move(verts);
  return j;
}

inline BodyInput body_from_json(const Json& j) {
  if (!j.is_object()) throw parse_error("body must be a json object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw parse_error("body needs an integer dim field");
  int dim = j["dim"].get<int>();
  check_dim(dim);
  bool has_v = j.contains("vrep");
  bool has_h = j.contains("hrep");
  if (has_v == has_h) throw parse_error("body needs exactly one of vrep or hrep");
  if (has_v) {
    const Json& arr = j["vrep"];
    if (!arr.is_array() || arr.empty()) throw parse_error("vrep must be a nonempty array");
    std::vector<RatVec> pts;
    for (const Json& e : arr) pts.push_back(vec_from_json(e, dim));
    Polytope poly = polytope_from_points(dim, pts);
    HRep h = to_hrep(poly);
    return BodyInput{std::move(poly), std::move(h)};
  }
  const Json& arr = j["hrep"];
  if (!arr.is_array() || arr.empty()) throw parse_error("hrep must be a nonempty array");
  std::vector<HalfSpace> hss;
  for (const Json& e : arr) {
    if (!e.is_object() || !e.contains("a") || !e.contains("b"))
      throw parse_error("halfspace needs fields a and b");
    hss.push_back(make_halfspace(vec_from_json(e["a"], dim), rat_from_json(e["b"])));
  }
  HRep h = make_hrep(dim, std::move(hss));
  Polytope poly = vertex_enum(h);
  return BodyInput{std::move(poly), std::move(h)};
}

inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string digest_label(const std::string& s) {
  std::ostringstream os;
  os << "fnv1a:" << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(s);
  return os.str();
}

}  // namespace latgeom
