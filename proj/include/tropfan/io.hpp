#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "tropfan/convexity.hpp"
#include "tropfan/fan.hpp"
#include "tropfan/lorentzian.hpp"
#include "tropfan/matroid.hpp"
#include "tropfan/minkowski.hpp"

namespace tropfan {

using Json = nlohmann::json;

Json read_json_file(const std::string& path);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json vector_to_json(const RatVector& v);
RatVector vector_from_json(const Json& j);

// { "ambient_dim": n, "rays": [[...]], "maximal_cones": [[...]], "weights": { "i,j": "p/q" } }
Json fan_to_json(const MarkedFan& f, const MinkowskiWeight* w = nullptr);
struct FanInput {
  MarkedFan fan;
  std::optional<MinkowskiWeight> weight;
};
FanInput fan_from_json(const Json& j);
TropicalFan tropical_from_json(const Json& j);
Json weight_to_json(const MinkowskiWeight& w);

// { "values": [...] }
Json divisor_to_json(const Divisor& d);
Divisor divisor_from_json(const Json& j);
// A list of divisor objects, { "divisors": [...] }, or a single divisor object.
std::vector<Divisor> divisors_from_json(const Json& j);

// { "n": ..., "bases": [[...], ...] }
Matroid matroid_from_json(const Json& j);
Json matroid_to_json(const Matroid& m);

// { "fan": {...}, "rhs": [...] }
struct PolytopeInput {
  MarkedFan fan;
  RatVector rhs;
};
PolytopeInput polytope_from_json(const Json& j);

Json to_json(const Inertia& in);
Json to_json(const ValidationReport& r);
Json to_json(const BalancingReport& r);
Json to_json(const ConvexityCertificate& c);
Json to_json(const LorentzianCertificate& c);
Json to_json(const SampleCheckReport& r);
Json to_json(const AFReport& r);
Json to_json(const Polynomial& p);

}  // namespace tropfan
