#include "rka/json_io.hpp"

#include <nlohmann/json.hpp>

namespace rka::io {

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j) {
  detail::require(j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(),
                  "json: a complex number must be a two-element array [re, im]");
  return Complex{j[0].get<double>(), j[1].get<double>()};
}

namespace {

json complex_vector_to_json(const std::vector<Complex>& v) {
  json out = json::array();
  for (const Complex& c : v) out.push_back(complex_to_json(c));
  return out;
}

std::vector<Complex> complex_vector_from_json(const json& j, const char* field) {
  detail::require(j.is_array(), std::string("json: field '") + field + "' must be an array");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(complex_from_json(item));
  return out;
}

}  // namespace

json space_to_json(const SpaceSpec& spec) {
  json j;
  j["kind"] = spec.kind() == SpaceKind::Hardy ? "hardy" : "bergman";
  j["alpha"] = spec.alpha();
  j["truncation"] = spec.truncation();
  j["rmax"] = spec.r_max();
  return j;
}

SpaceSpec space_from_json(const json& j) {
  detail::require(j.contains("kind"), "json: space requires field 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  const std::size_t truncation = j.value("truncation", std::size_t{512});
  const double rmax = j.value("rmax", 0.995);
  if (kind == "hardy") return SpaceSpec::hardy(truncation, rmax);
  if (kind == "bergman") {
    return SpaceSpec::weighted_bergman(j.value("alpha", 0.0), truncation, rmax);
  }
  throw std::invalid_argument("json: space kind must be 'hardy' or 'bergman'");
}

json target_to_json(const TargetSpec& t) {
  json j;
  switch (t.kind) {
    case TargetSpec::Kind::Taylor:
      j["taylor"] = complex_vector_to_json(t.taylor);
      break;
    case TargetSpec::Kind::Rational:
      j["rational"]["poles"] = complex_vector_to_json(t.poles);
      j["rational"]["residues"] = complex_vector_to_json(t.residues);
      break;
    case TargetSpec::Kind::Builtin:
      j["builtin"] = t.builtin;
      break;
  }
  return j;
}

TargetSpec target_from_json(const json& j) {
  if (j.contains("taylor")) {
    return TargetSpec::from_taylor(complex_vector_from_json(j.at("taylor"), "taylor"));
  }
  if (j.contains("rational")) {
    const json& r = j.at("rational");
    detail::require(r.contains("poles") && r.contains("residues"),
                    "json: field 'rational' requires 'poles' and 'residues'");
    return TargetSpec::from_rational(complex_vector_from_json(r.at("poles"), "poles"),
                                     complex_vector_from_json(r.at("residues"), "residues"));
  }
  if (j.contains("builtin")) {
    return TargetSpec::from_builtin(j.at("builtin").get<std::string>());
  }
  throw std::invalid_argument(
      "json: target requires one of the fields 'taylor', 'rational', 'builtin'");
}

json result_to_json(const ApproxResult& r) {
  json j;
  j["parameters"] = complex_vector_to_json(r.parameters.points());
  j["multiplicities"] = r.parameters.multiplicities();
  j["coefficients"] = complex_vector_to_json(r.coefficients);
  j["residual_norm"] = r.residual_norm;
  j["objective_trace"] = r.objective_trace;
  j["interior_margin"] = r.interior_margin;
  j["gram_min_eig"] = r.gram_min_eig;
  if (!r.start_objectives.empty()) j["start_objectives"] = r.start_objectives;
  if (!r.selection_gains.empty()) {
    j["selection_gains"] = r.selection_gains;
    j["grid_best_gains"] = r.grid_best_gains;
  }
  return j;
}

json tuple_to_json(const ParameterTuple& t) { return complex_vector_to_json(t.points()); }

ParameterTuple tuple_from_json(const json& j) {
  return ParameterTuple(complex_vector_from_json(j, "parameters"));
}

}  // namespace rka::io
