#include "tropfan/io.hpp"

#include <fstream>

#include "tropfan/errors.hpp"

namespace tropfan {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(j.dump());
  throw InputError("expected a rational string, got " + j.dump());
}

Json vector_to_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_to_json(x));
  return a;
}

RatVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals");
  RatVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InputError(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::size_t index_from_json(const Json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError("expected a nonnegative index, got " + j.dump());
  return j.get<std::size_t>();
}

}  // namespace

Json weight_to_json(const MinkowskiWeight& w) {
  Json o = Json::object();
  for (const auto& [c, v] : w.values) o[cone_key(c)] = rational_to_json(v);
  return o;
}

Json fan_to_json(const MarkedFan& f, const MinkowskiWeight* w) {
  Json j;
  j["ambient_dim"] = f.ambient_dim();
  j["rays"] = Json::array();
  for (const auto& u : f.rays()) j["rays"].push_back(vector_to_json(u));
  j["maximal_cones"] = Json::array();
  for (const auto& c : f.maximal_cones()) j["maximal_cones"].push_back(c);
  if (w) j["weights"] = weight_to_json(*w);
  return j;
}

FanInput fan_from_json(const Json& j) {
  const Json& dim = field(j, "ambient_dim");
  std::size_t n = index_from_json(dim);
  std::vector<RatVector> rays;
  const Json& jr = field(j, "rays");
  if (!jr.is_array()) throw InputError("'rays' must be an array");
  for (const auto& r : jr) rays.push_back(vector_from_json(r));
  std::vector<Cone> cones;
  const Json& jc = field(j, "maximal_cones");
  if (!jc.is_array()) throw InputError("'maximal_cones' must be an array");
  for (const auto& c : jc) {
    if (!c.is_array()) throw InputError("each maximal cone must be an array of ray indices");
    Cone cone;
    for (const auto& i : c) cone.push_back(index_from_json(i));
    cones.push_back(std::move(cone));
  }
  FanInput out{MarkedFan(n, std::move(rays), std::move(cones)), std::nullopt};
  if (j.contains("weights")) {
    const Json& jw = j.at("weights");
    if (!jw.is_object()) throw InputError("'weights' must be an object keyed by cones");
    MinkowskiWeight w;
    bool first = true;
    for (const auto& [key, value] : jw.items()) {
      Cone c = parse_cone_key(key);
      if (first) w.degree = c.size();
      else if (c.size() != w.degree) throw InputError("weights mix cones of different dimensions");
      first = false;
      if (!out.fan.has_cone(c)) throw InputError("weight given on cone {" + key + "} outside the fan");
      w.values[c] = rational_from_json(value);
    }
    if (first) w.degree = out.fan.dim();
    out.weight = std::move(w);
  }
  return out;
}

TropicalFan tropical_from_json(const Json& j) {
  FanInput in = fan_from_json(j);
  if (!in.weight) throw InputError("fan has no weights");
  return make_tropical_fan(std::move(in.fan), std::move(*in.weight));
}

Json divisor_to_json(const Divisor& d) { return Json{{"values", vector_to_json(d.values)}}; }

Divisor divisor_from_json(const Json& j) { return Divisor{vector_from_json(field(j, "values"))}; }

std::vector<Divisor> divisors_from_json(const Json& j) {
  const Json* list = &j;
  if (j.is_object() && j.contains("divisors")) list = &j.at("divisors");
  else if (j.is_object()) return {divisor_from_json(j)};
  if (!list->is_array()) throw InputError("expected a list of divisors");
  std::vector<Divisor> out;
  for (const auto& d : *list) out.push_back(divisor_from_json(d));
  return out;
}

Matroid matroid_from_json(const Json& j) {
  std::size_t n = index_from_json(field(j, "n"));
  std::vector<std::vector<std::size_t>> bases;
  const Json& jb = field(j, "bases");
  if (!jb.is_array()) throw InputError("'bases' must be an array");
  for (const auto& b : jb) {
    if (!b.is_array()) throw InputError("each basis must be an array");
    std::vector<std::size_t> basis;
    for (const auto& e : b) basis.push_back(index_from_json(e));
    bases.push_back(std::move(basis));
  }
  return Matroid::from_bases(n, bases);
}

Json matroid_to_json(const Matroid& m) {
  Json j;
  j["n"] = m.size();
  j["bases"] = Json::array();
  for (auto b : m.bases()) j["bases"].push_back(elements_of(b));
  return j;
}

PolytopeInput polytope_from_json(const Json& j) {
  FanInput f = fan_from_json(field(j, "fan"));
  return PolytopeInput{std::move(f.fan), vector_from_json(field(j, "rhs"))};
}

Json to_json(const Inertia& in) { return Json{{"positive", in.positive}, {"negative", in.negative}, {"zero", in.zero}}; }

Json to_json(const ValidationReport& r) {
  return Json{{"valid", r.ok()},
              {"simplicial", r.simplicial},
              {"pure", r.pure},
              {"rays_used", r.rays_used},
              {"fan_condition_checked", r.fan_condition_checked},
              {"fan_condition", r.fan_condition},
              {"failures", r.failures}};
}

Json to_json(const BalancingReport& r) {
  Json fails = Json::array();
  for (const auto& c : r.failures) fails.push_back(cone_key(c));
  return Json{{"balanced", r.balanced}, {"failures", fails}};
}

Json to_json(const ConvexityCertificate& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  if (c.failing_cone) j["failing_cone"] = cone_key(*c.failing_cone);
  j["cones"] = Json::array();
  for (const auto& cc : c.cones)
    j["cones"].push_back(
        Json{{"cone", cone_key(cc.cone)}, {"slack", rational_to_json(cc.slack)}, {"functional", vector_to_json(cc.functional)}});
  return j;
}

Json to_json(const LorentzianCertificate& c) {
  Json j;
  j["verdict"] = c.verdict ? "yes" : "no";
  j["reasons"] = c.reasons;
  j["witness"] = c.witness ? divisor_to_json(*c.witness) : Json(nullptr);
  Json pinches = Json::array();
  for (const auto& p : c.unpinched.pinches) pinches.push_back(cone_key(p));
  j["unpinched"] = Json{{"unpinched", c.unpinched.unpinched}, {"pinches", pinches}};
  Json stars = Json::object();
  for (const auto& [tau, in] : c.star_inertia) stars[cone_key(tau)] = to_json(in);
  j["stars"] = stars;
  return j;
}

Json to_json(const SampleCheckReport& r) {
  Json j;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["passed"] = r.passed;
  j["stars"] = Json::array();
  for (const auto& s : r.stars)
    j["stars"].push_back(Json{{"cone", cone_key(s.cone)},
                              {"star_dim", s.star_dim},
                              {"one_positive_eigenvalue", s.one_positive_eigenvalue},
                              {"positive_degrees", s.positive_degrees}});
  return j;
}

Json to_json(const AFReport& r) {
  Json seq = Json::array();
  for (const auto& x : r.sequence) seq.push_back(rational_to_json(x));
  return Json{{"gap", rational_to_json(r.gap)}, {"sequence", seq}, {"log_concave", r.log_concave}, {"unimodal", r.unimodal}};
}

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(Json{{"monomial", m}, {"coefficient", rational_to_json(c)}});
  return Json{{"num_vars", p.num_vars()}, {"terms", terms}};
}

}  // namespace tropfan
