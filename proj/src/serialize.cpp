#include "starcut/serialize.hpp"

#include "starcut/errors.hpp"

namespace starcut {

void to_json(Json& j, const Star& s) { j = Json{{"center", s.center}, {"leaves", s.leaves}}; }

void to_json(Json& j, const StarFamily& f) {
  j = Json::array();
  for (const Star& s : f) j.push_back(s);
}

void to_json(Json& j, const Certificate& c) {
  j = Json{{"verdict", to_string(c.verdict)}, {"rule", to_string(c.rule)}};
  if (c.witness) j["witness"] = *c.witness;
  if (!c.detail.empty()) j["detail"] = c.detail;
}

void to_json(Json& j, const StructResult& r) {
  if (!r.found()) {
    j = Json{{"status", "NoCutExists"}, {"value", "no-cut"}};
    return;
  }
  j = Json{{"status", "Found"}, {"value", *r.value}};
  if (r.witness) j["witness"] = *r.witness;
}

void to_json(Json& j, const CheckOutcome& o) {
  j = Json{{"status", to_string(o.status)}};
  if (!o.reason.empty()) j["reason"] = o.reason;
}

void to_json(Json& j, const VerificationRecord& r) {
  j = Json{{"graph_id", r.graph_id}, {"n", r.n}, {"m", r.m}};
  j["kappa"] = r.kappa ? Json(*r.kappa) : Json(nullptr);
  j["struct_kappa"] = r.struct_kappa ? Json(*r.struct_kappa) : Json(nullptr);
  if (r.arity != 2) j["arity"] = r.arity;
  if (!r.certificate_rule.empty()) j["certificate_rule"] = r.certificate_rule;
  Json checks = Json::object();
  for (const auto& [name, outcome] : r.checks) checks[name] = outcome;
  j["checks"] = checks;
  j["refinement_fallback"] = r.refinement_fallback;
}

void to_json(Json& j, const CoverTrace& t) {
  j = Json{{"initial", t.initial},
           {"reduced", t.reduced},
           {"pair_merged", t.pair_merged},
           {"neighbor_merged", t.neighbor_merged},
           {"disentangled", t.disentangled},
           {"pair_swaps", t.pair_swaps},
           {"multiplicity_swaps", t.multiplicity_swaps},
           {"singleton_swaps", t.singleton_swaps},
           {"anchor_swaps", t.anchor_swaps},
           {"freeing_swaps", t.freeing_swaps}};
}

void to_json(Json& j, const CoverResult& r) {
  const Json matching = [&] {
    Json m = Json::array();
    for (const Edge& e : r.partition.matching) m.push_back({e.first, e.second});
    return m;
  }();
  j = Json{{"cut", r.cut},
           {"family", r.family},
           {"f1", r.partition.f1},
           {"matching", matching},
           {"x3", r.partition.x3},
           {"f2", r.f2},
           {"f3", r.f3},
           {"trace", r.trace}};
}

void to_json(Json& j, const RunSummary& s) {
  Json totals = Json::object();
  for (const auto& [name, t] : s.totals) totals[name] = Json{{"pass", t.pass}, {"fail", t.fail}, {"skip", t.skip}};
  j = Json{{"records", s.records},
           {"resumed", s.resumed},
           {"errors", s.errors},
           {"failed_graphs", s.failed_graphs},
           {"checks", totals},
           {"refinement_runs", s.refinement_runs},
           {"refinement_fallbacks", s.refinement_fallbacks},
           {"fallback_rate", s.fallback_rate()},
           {"exit_code", s.exit_code()}};
}

Star star_from_json(const Json& j) {
  try {
    return Star::make(j.at("center").get<Vertex>(), j.at("leaves").get<std::vector<Vertex>>());
  } catch (const Json::exception& e) {
    throw FormatError(std::string("bad star JSON: ") + e.what());
  }
}

StarFamily family_from_json(const Json& j, int arity) {
  if (!j.is_array()) throw FormatError("star family JSON must be an array");
  StarFamily f(arity);
  for (const Json& s : j) f.push_back(star_from_json(s));
  return f;
}

}  // namespace starcut
