#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropfan/convexity.hpp"
#include "tropfan/linalg.hpp"
#include "tropfan/minkowski.hpp"
#include "tropfan/polynomial.hpp"

namespace tropfan {

// Vol(z) = z^T matrix z on the ray basis: off-diagonal entries are the
// weights of 2-cones, diagonal entries are -a_rho where the balancing
// sum around rho equals a_rho u_rho.
struct QuadraticVolumeForm {
  RatMatrix matrix;
  RatVector a;
};

// Bilinear form (D_i, D_j) -> deg(D_i D_j w) of a balanced degree-2 weight.
QuadraticVolumeForm degree_two_form(const MarkedFan& f, const MinkowskiWeight& w);

QuadraticVolumeForm volume_poly_2d(const TropicalFan& tf);

// Vol(z) = deg(D_z^d), expanded in the ray variables. Requires d <= 4.
Polynomial volume_polynomial(const TropicalFan& tf);

struct LorentzianOptions {
  std::size_t jobs = 1;
};

struct LorentzianCertificate {
  bool verdict = false;
  std::optional<Divisor> witness;
  UnpinchedReport unpinched;
  std::map<Cone, Inertia> star_inertia;  // tau of codimension two
  std::vector<std::string> reasons;      // why the verdict is negative
};

LorentzianCertificate is_lorentzian(const TropicalFan& tf, const LorentzianOptions& opts = {});

struct StarSampleResult {
  Cone cone;
  std::size_t star_dim = 0;
  std::size_t samples = 0;
  bool one_positive_eigenvalue = true;
  bool positive_degrees = true;
};

struct SampleCheckReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  bool passed = true;
  std::vector<StarSampleResult> stars;
};

// Samples strictly convex D_3..D_e on every star of dimension e >= 2 and
// checks that (D_1, D_2) -> deg(D_1 D_2 D_3 ... D_e) has one positive
// eigenvalue and that sampled top degrees are positive.
SampleCheckReport definition_sample_check(const TropicalFan& tf, std::size_t samples, std::uint64_t seed);

struct AFReport {
  Rational gap;  // deg(D1 D2 aux)^2 - deg(D1^2 aux) deg(D2^2 aux)
  std::vector<Rational> sequence;  // deg(D1^k D2^(d-k)), k = 0..d
  bool log_concave = true;
  bool unimodal = true;
};

AFReport af_report(const TropicalFan& tf, const Divisor& d1, const Divisor& d2, const std::vector<Divisor>& aux);

bool is_log_concave(const std::vector<Rational>& seq);
bool is_unimodal(const std::vector<Rational>& seq);

}  // namespace tropfan
