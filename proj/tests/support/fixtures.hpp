#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tropfan/fan_ops.hpp"
#include "tropfan/linalg.hpp"
#include "tropfan/matroid.hpp"
#include "tropfan/minkowski.hpp"
#include "tropfan/random.hpp"

namespace fixtures {

using namespace tropfan;

RatVector vec(std::initializer_list<long> xs);
Divisor div(std::initializer_list<long> xs);
Divisor constant_divisor(std::size_t n, long c);

TropicalFan with_unit_weight(MarkedFan f);

// Normal fan of the triangle: rays e1, e2, -e1-e2.
TropicalFan triangle();
// Rays e1, -e1.
TropicalFan line();
// 2-skeleton of the coordinate fan in R^3; rays +e1,-e1,+e2,-e2,+e3,-e3.
// Cones in the (ei, ej) plane carry weight p_i p_j with (p1, p2, p3) = (a, b, c).
TropicalFan coordinate_skeleton(long a = 1, long b = 1, long c = 1);
TropicalFan triangle_times_line();
TropicalFan quadrants();
// Two triangle fans on complementary coordinate planes of R^4 meeting at the origin.
TropicalFan two_triangles();
// Rays +e3, -e3 and m legs; cones {leg, +e3}, {leg, -e3}. The last leg is shifted by c e3.
TropicalFan spindle(std::size_t m, long c = 0);
// Complete fan of projective n-space.
TropicalFan projective_space(std::size_t n);
// Complete fan in R^3 over a twisted triangulation of two nested triangles;
// admits no strictly convex divisor.
MarkedFan twisted_fan();

TropicalFan bergman(const Matroid& m);

struct Named {
  std::string name;
  TropicalFan fan;
};
// Shipped fixtures expected to be Lorentzian.
std::vector<Named> lorentzian_catalog();

// Complete fan in R^2 with 3..7 random rays and the volume weight times c.
TropicalFan random_complete_2fan(SeededRng& rng);

// Strictly convex rhs on a complete 2-fan.
RatVector random_polygon(const MarkedFan& f, SeededRng& rng);

// Shoelace area of {x : <u_rho, x> <= rhs_rho} on a complete 2-fan with
// rays in counterclockwise order around the fan.
Rational polygon_area(const MarkedFan& f, const RatVector& rhs);

// Subdivide maximal cone sigma of a 2-fan at v = a1 u1 + a2 u2 and compare
// Vol' with Vol - (w(sigma) / (a1 a2)) (z_v - a1 z1 - a2 z2)^2.
struct EdgeCheck {
  bool identity = false;
  Inertia before;
  Inertia after;
};
EdgeCheck edge_identity(const TropicalFan& tf, std::size_t sigma, const Rational& a1, const Rational& a2);

}  // namespace fixtures
