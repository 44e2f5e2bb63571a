#include "divstab/json_io.hpp"

#include <fstream>
#include <sstream>

namespace divstab {

namespace {

const Json& require_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw parse_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

int require_int(const Json& j, const char* what) {
  if (!j.is_number_integer())
    throw parse_error(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw parse_error("rationals must be \"p/q\" strings or integers");
}

Json rational_to_json(const Rational& r) { return Json(r.str()); }

Json vector_to_json(const RatVector& v) {
  Json arr = Json::array();
  for (int i = 0; i < v.dim(); ++i) arr.push_back(rational_to_json(v[i]));
  return arr;
}

RatVector vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw parse_error("vector must be a nonempty array");
  std::vector<Rational> coords;
  for (const auto& c : j) coords.push_back(rational_from_json(c));
  return RatVector(std::move(coords));
}

ToricFano fan_from_json(const Json& j) {
  ToricFano fan;
  fan.dim = require_int(require_field(j, "dim"), "dim");
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw parse_error("name must be a string");
    fan.name = j.at("name").get<std::string>();
  }
  const Json& rays = require_field(j, "rays");
  if (!rays.is_array() || rays.empty()) throw parse_error("rays must be a nonempty array");
  for (const auto& ray : rays) {
    if (!ray.is_array()) throw parse_error("each ray must be an array of integers");
    std::vector<long long> r;
    for (const auto& c : ray) {
      if (!c.is_number_integer()) throw parse_error("ray entries must be integers");
      r.push_back(c.get<long long>());
    }
    fan.rays.push_back(std::move(r));
  }
  validate_fan(fan);
  return fan;
}

Json fan_to_json(const ToricFano& fan) {
  Json j;
  j["dim"] = fan.dim;
  j["name"] = fan.name;
  Json rays = Json::array();
  for (const auto& ray : fan.rays) {
    Json r = Json::array();
    for (long long c : ray) r.push_back(c);
    rays.push_back(std::move(r));
  }
  j["rays"] = std::move(rays);
  return j;
}

ModelSequence sequence_from_json(const Json& j) {
  const int n = require_int(require_field(j, "n"), "n");
  const Json& segs = require_field(j, "segments");
  if (!segs.is_array() || segs.empty())
    throw parse_error("segments must be a nonempty array");
  std::vector<ModelSegment> segments;
  for (const auto& s : segs) {
    ModelSegment seg;
    seg.tau_lo = rational_from_json(require_field(s, "tau_lo"));
    seg.tau_hi = rational_from_json(require_field(s, "tau_hi"));
    const Json& m = require_field(s, "m");
    if (!m.is_array()) throw parse_error("m must be an array");
    for (const auto& c : m) seg.m.push_back(rational_from_json(c));
    segments.push_back(std::move(seg));
  }
  try {
    return ModelSequence(n, std::move(segments));
  } catch (const precondition_error& e) {
    throw parse_error(e.what());
  }
}

Json sequence_to_json(const ModelSequence& seq) {
  Json j;
  j["n"] = seq.n();
  Json segs = Json::array();
  for (const auto& seg : seq.segments()) {
    Json s;
    s["tau_lo"] = rational_to_json(seg.tau_lo);
    s["tau_hi"] = rational_to_json(seg.tau_hi);
    Json m = Json::array();
    for (const auto& c : seg.m) m.push_back(rational_to_json(c));
    s["m"] = std::move(m);
    segs.push_back(std::move(s));
  }
  j["segments"] = std::move(segs);
  return j;
}

Polytope polytope_from_json(const Json& j) {
  const int dim = require_int(require_field(j, "dim"), "dim");
  const Json& hs = require_field(j, "halfspaces");
  if (!hs.is_array() || hs.empty())
    throw parse_error("halfspaces must be a nonempty array");
  std::vector<HalfSpace> halfspaces;
  for (const auto& h : hs) {
    RatVector normal = vector_from_json(require_field(h, "normal"));
    Rational offset = rational_from_json(require_field(h, "offset"));
    try {
      halfspaces.emplace_back(std::move(normal), std::move(offset));
    } catch (const error& e) {
      throw parse_error(e.what());
    }
  }
  return Polytope::from_halfspaces(std::move(halfspaces), dim);
}

Json polytope_to_json(const Polytope& p) {
  Json j;
  j["dim"] = p.dim();
  Json hs = Json::array();
  for (const auto& h : p.halfspaces()) {
    Json hj;
    hj["normal"] = vector_to_json(h.normal);
    hj["offset"] = rational_to_json(h.offset);
    hs.push_back(std::move(hj));
  }
  j["halfspaces"] = std::move(hs);
  return j;
}

CurveBlowupParams curve_params_from_json(const Json& j) {
  CurveBlowupParams params;
  params.H3 = rational_from_json(require_field(j, "H3"));
  params.r = require_int(require_field(j, "r"), "r");
  params.e = require_int(require_field(j, "e"), "e");
  params.h = require_int(require_field(j, "h"), "h");
  params.d = require_int(require_field(j, "d"), "d");
  params.g = require_int(require_field(j, "g"), "g");
  params.tau1 = rational_from_json(require_field(j, "tau1"));
  params.tau2 = rational_from_json(require_field(j, "tau2"));
  return params;
}

Json curve_params_to_json(const CurveBlowupParams& params) {
  Json j;
  j["H3"] = rational_to_json(params.H3);
  j["r"] = params.r;
  j["e"] = params.e;
  j["h"] = params.h;
  j["d"] = params.d;
  j["g"] = params.g;
  j["tau1"] = rational_to_json(params.tau1);
  j["tau2"] = rational_to_json(params.tau2);
  return j;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

}  // namespace divstab
