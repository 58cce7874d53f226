#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropfan/fan.hpp"
#include "tropfan/minkowski.hpp"
#include "tropfan/random.hpp"

namespace tropfan {

enum class ConvexityVerdict { none, convex, strictly_convex };

std::string to_string(ConvexityVerdict v);

// Local witness at tau: a functional equal to z on tau's rays, with
// z - functional >= slack on the other rays of the neighborhood.
struct ConeCertificate {
  Cone cone;
  Rational slack;
  RatVector functional;
};

struct ConvexityCertificate {
  ConvexityVerdict verdict = ConvexityVerdict::none;
  std::vector<ConeCertificate> cones;
  std::optional<Cone> failing_cone;
};

// With strict = false the verdict stops at "convex".
ConvexityCertificate classify_convexity(const MarkedFan& f, const Divisor& d, bool strict = true);

// Re-checks every local witness exactly against the claimed verdict.
bool verify_convexity_certificate(const MarkedFan& f, const Divisor& d, const ConvexityCertificate& cert);

// A strictly convex divisor, or nullopt when none exists.
std::optional<Divisor> find_strictly_convex(const MarkedFan& f);

// After a stellar subdivision: pulled - eps * D_new for the first eps = 2^-k that
// certifies strict convexity.
std::optional<Divisor> subdivision_witness(const MarkedFan& fine, const Divisor& pulled, std::size_t new_ray);

// Witness scaled by a random factor plus a certified random perturbation by
// nonnegative combinations of indicator divisors and a random linear function.
Divisor sample_convex_divisor(const MarkedFan& f, const Divisor& witness, SeededRng& rng);

}  // namespace tropfan
