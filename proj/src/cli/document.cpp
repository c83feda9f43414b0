#include "twobridge/cli/document.hpp"

namespace twobridge::cli {

Json integer_json(const BigInt& v) {
  if (auto small = to_int64(v)) return Json(*small);
  return Json(v.str());
}

Json rational_json(const Rational& v) { return Json(v.str()); }

Json to_json(const SchubertForm& s) {
  return Json{{"alpha", integer_json(s.alpha())}, {"beta", integer_json(s.beta())}};
}

Json to_json(const ContinuedFraction& cf) {
  Json out = Json::array();
  for (const auto& t : cf.terms()) out.push_back(integer_json(t));
  return out;
}

Json to_json(const BoundarySlopeRecord& rec) {
  return Json{{"cf", to_json(rec.cf)},
              {"n_plus", rec.n_plus},
              {"n_minus", rec.n_minus},
              {"slope", rec.slope},
              {"weight", integer_json(rec.weight)}};
}

Json to_json(const SlopeSystem& sys) {
  Json records = Json::array();
  for (const auto& rec : sys.records) records.push_back(to_json(rec));
  return Json{{"knot", to_json(sys.knot)},
              {"longitude_index", sys.longitude_index},
              {"records", std::move(records)}};
}

Json to_json(const LaurentPolynomial& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = integer_json(c);
  return out;
}

Json to_json(const LambdaValue& v) {
  return Json{{"value", v.value ? rational_json(*v.value) : Json(nullptr)},
              {"hypotheses_ok", v.hypotheses_ok},
              {"caveats", v.caveats}};
}

Json to_json(const ObstructionReport& r) {
  return Json{{"knot", to_json(r.knot)},
              {"mirrored", r.mirrored},
              {"name", r.name ? Json(*r.name) : Json(nullptr)},
              {"crossing_number", integer_json(r.crossing_number)},
              {"delta_second", integer_json(r.delta_second)},
              {"sigma", r.sigma},
              {"casson_difference", rational_json(r.casson_difference)},
              {"verdict", to_string(r.verdict)},
              {"caveats", r.caveats}};
}

Json make_document(const std::string& command, Json payload) {
  return Json{{"schema_version", kSchemaVersion}, {"command", command}, {"payload", std::move(payload)}};
}

}  // namespace twobridge::cli
