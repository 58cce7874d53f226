#pragma once

#include <vector>

#include "tropfan/minkowski.hpp"

namespace tropfan {

TropicalFan product_tropical(const TropicalFan& a, const TropicalFan& b);

// The (d-1)-skeleton weighted by D . w. D must be strictly convex.
TropicalFan act_divisor_fan(const TropicalFan& tf, const Divisor& d);

struct Modification {
  TropicalFan tropical;
  std::size_t down_ray;  // index of the ray marked (0, ..., 0, -1)
};

// Fan in V x R: graph cones over the cones of the fan with marks (u, z(u)),
// plus downward cones over the (d-1)-cones. D must be strictly convex.
Modification tropical_modification(const TropicalFan& tf, const Divisor& d);

// Pure of full dimension, every wall in exactly two maximal cones lying on
// opposite sides, and connected through walls.
bool is_complete(const MarkedFan& f);

// w(sigma) = 1 / |det(marks of sigma)|: the balanced top weight of a complete fan.
MinkowskiWeight volume_weight(const MarkedFan& f);

struct PolytopeBridge {
  Rational mixed_degree;  // deg(D_P1 ... D_Pn) with the volume weight
  Rational mixed_volume;  // mixed_degree / n!
  Rational normalization; // n!
};

// Each polytope is {x : <u_rho, x> <= rhs_rho for every ray}, with D_P = sum rhs_rho D_rho.
PolytopeBridge polytope_bridge(const MarkedFan& f, const std::vector<RatVector>& rhs);

}  // namespace tropfan
