#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "tropfan/fan.hpp"
#include "tropfan/rational.hpp"

namespace tropfan {

struct MinkowskiWeight {
  std::size_t degree = 0;
  std::map<Cone, Rational> values;

  // Throws InputError when the cone carries no value.
  const Rational& at(const Cone& c) const;
  friend bool operator==(const MinkowskiWeight&, const MinkowskiWeight&) = default;
};

// One value per ray: the piecewise linear function with z(u_rho) = values[rho].
struct Divisor {
  RatVector values;
  friend bool operator==(const Divisor&, const Divisor&) = default;
};

Divisor operator+(const Divisor& a, const Divisor& b);
Divisor operator-(const Divisor& a, const Divisor& b);
Divisor operator*(const Rational& s, const Divisor& d);

struct TropicalFan {
  MarkedFan fan;
  MinkowskiWeight weight;  // top degree
};

MinkowskiWeight constant_weight(const MarkedFan& f, std::size_t k, const Rational& c);

struct BalancingReport {
  bool balanced = true;
  std::vector<Cone> failures;  // cones of codimension one in the weight's support
};

BalancingReport check_balancing(const MarkedFan& f, const MinkowskiWeight& w);

// Checks top degree, positivity and balancing.
TropicalFan make_tropical_fan(MarkedFan f, MinkowskiWeight w);

Divisor indicator_divisor(const MarkedFan& f, std::size_t ray);
Divisor linear_divisor(const MarkedFan& f, const RatVector& functional);
// Value of the piecewise linear function at a point of the support.
Rational evaluate(const MarkedFan& f, const Divisor& d, const RatVector& point);

MinkowskiWeight divisor_action(const MarkedFan& f, const Divisor& d, const MinkowskiWeight& w);

// deg(D_1 ... D_k . w) for a weight of degree k.
Rational mixed_degree(const MarkedFan& f, const MinkowskiWeight& w, const std::vector<Divisor>& ds);
Rational mixed_degree(const TropicalFan& tf, const std::vector<Divisor>& ds);

// Weight on the star: each star cone inherits the value of its lift.
MinkowskiWeight star_weight(const Star& s, const MinkowskiWeight& w);
TropicalFan star_tropical(const TropicalFan& tf, const Cone& tau);

// Divisor on the star: subtract the matching functional of tau and project.
Divisor descend_divisor(const MarkedFan& f, const Star& s, const Divisor& d);

// u' = lambda u, w'(sigma) = prod_{rho in sigma} lambda_rho^{-1} w(sigma).
TropicalFan rescale_marking(const TropicalFan& tf, const RatVector& lambda);
// Same piecewise linear function expressed on rescaled marks.
Divisor rescale_divisor(const Divisor& d, const RatVector& lambda);

// Weight on a refinement with the same support and degree:
// w'(sigma') = w(sigma) / |det M|, M the coordinates of sigma' marks in sigma marks.
MinkowskiWeight transport_weight(const TropicalFan& coarse, const MarkedFan& fine,
                                 const std::optional<std::vector<std::size_t>>& containment = std::nullopt);

Divisor pullback_divisor(const MarkedFan& coarse, const Divisor& d, const MarkedFan& fine);

}  // namespace tropfan
