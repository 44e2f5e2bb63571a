// JSON schemas for fans, model sequences, polytope bodies and curve-blowup
// parameters. Rationals travel as canonical "p/q" strings ("p" when q = 1);
// no floats anywhere.
#pragma once

#include <string>

#include <json.hpp>

#include "divstab/model_sequence.hpp"
#include "divstab/polytope.hpp"
#include "divstab/toric.hpp"

namespace divstab {

using Json = nlohmann::json;  // std::map-backed, so object keys stay sorted

Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& r);

Json vector_to_json(const RatVector& v);
RatVector vector_from_json(const Json& j);

// {"name": str, "dim": n, "rays": [[int,...], ...]}
ToricFano fan_from_json(const Json& j);
Json fan_to_json(const ToricFano& fan);

// {"n": int, "segments": [{"m": [...], "tau_hi": "p/q", "tau_lo": "p/q"}, ...]}
ModelSequence sequence_from_json(const Json& j);
Json sequence_to_json(const ModelSequence& seq);

// {"dim": n, "halfspaces": [{"normal": [...], "offset": "p/q"}, ...]}
Polytope polytope_from_json(const Json& j);
Json polytope_to_json(const Polytope& p);

CurveBlowupParams curve_params_from_json(const Json& j);
Json curve_params_to_json(const CurveBlowupParams& params);

// Canonical rendering: keys sorted, two-space indent, trailing newline.
std::string canonical_dump(const Json& j);

Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace divstab
