#pragma once

#include "eulerchi/isopar.hpp"
#include "eulerchi/pigraded.hpp"
#include "eulerchi/quadext.hpp"
#include "eulerchi/ratfunc.hpp"
#include "eulerchi/spaceform.hpp"

#include <json.hpp>

namespace eulerchi {

// Wire encodings shared by the CLI and any external consumer:
//   Rational   {"num": "...", "den": "..."} decimal strings
//   RatFunc    {"num": [Rational...], "den": [Rational...]} by ascending degree
//   QuadExt    {"a": ..., "b": ..., "d": 3}
//   PiGraded   {"coeff": ..., "pi_half_exp": k}  meaning coeff * pi^{k/2}
//   models     {"variant": "...", parameters...}

nlohmann::json to_json(const Rational& v);
nlohmann::json to_json(const RatFunc& v);
nlohmann::json to_json(const ExtFunc& v);
nlohmann::json to_json(const PiRational& v);
nlohmann::json to_json(const PiGraded<RatFunc>& v);

Rational rational_from_json(const nlohmann::json& j);
RatFunc ratfunc_from_json(const nlohmann::json& j);
PiRational pigraded_from_json(const nlohmann::json& j);

HypersurfaceModel model_from_json(const nlohmann::json& j);

} // namespace eulerchi
