#pragma once

#include <json.hpp>

#include "starcut/corpus.hpp"
#include "starcut/covering.hpp"
#include "starcut/existence.hpp"
#include "starcut/star.hpp"
#include "starcut/struct_solver.hpp"
#include "starcut/verifier.hpp"

namespace starcut {

using Json = nlohmann::json;

// Star: {"center": c, "leaves": [...]}; StarFamily: array of stars.
void to_json(Json& j, const Star& s);
void to_json(Json& j, const StarFamily& f);
void to_json(Json& j, const Certificate& c);
void to_json(Json& j, const StructResult& r);
void to_json(Json& j, const CheckOutcome& o);
void to_json(Json& j, const VerificationRecord& r);
void to_json(Json& j, const CoverTrace& t);
void to_json(Json& j, const CoverResult& r);
void to_json(Json& j, const RunSummary& s);

Star star_from_json(const Json& j);
StarFamily family_from_json(const Json& j, int arity = 2);

}  // namespace starcut
