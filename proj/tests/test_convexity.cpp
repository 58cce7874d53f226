#include <doctest.h>

#include "fixtures.hpp"
#include "tropfan/convexity.hpp"
#include "tropfan/errors.hpp"
#include "tropfan/lp.hpp"

using namespace tropfan;
using fixtures::div;
using fixtures::vec;

namespace {

RatVector random_functional(std::size_t n, SeededRng& rng) {
  RatVector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(rng.uniform_rational(-2, 2, 3));
  return v;
}

Divisor random_divisor(std::size_t n, SeededRng& rng) {
  Divisor d;
  for (std::size_t i = 0; i < n; ++i) d.values.push_back(rng.uniform_rational(-3, 3, 2));
  return d;
}

// Largest |z_i| over z with z and -z convex, |z| <= 1, z = 0 on rays spanning the marks.
// Built independently of the library's convexity code.
Rational largest_two_sided(const MarkedFan& f) {
  const std::size_t n = f.num_rays(), m = f.ambient_dim();
  std::vector<Cone> cones;
  for (std::size_t k = 0; k <= f.dim(); ++k)
    for (const auto& c : f.cones(k)) cones.push_back(c);
  const std::size_t vars = n + 2 * m * cones.size();
  auto zero = [&] { return RatVector(vars); };
  LinearProgram lp;
  lp.num_vars = vars;
  lp.nonneg.assign(vars, false);
  for (std::size_t t = 0; t < cones.size(); ++t) {
    const Cone& tau = cones[t];
    Cone nb = f.neighborhood_rays(tau);
    for (int side = 0; side < 2; ++side) {
      const std::size_t off = n + (2 * t + side) * m;
      const Rational sz = side == 0 ? 1 : -1;
      for (auto r : tau) {
        RatVector row = zero();
        for (std::size_t j = 0; j < m; ++j) row[off + j] = f.ray(r)[j];
        row[r] = -sz;
        lp.constraints.push_back({row, Relation::eq, 0});
      }
      for (auto r : nb) {
        RatVector row = zero();
        for (std::size_t j = 0; j < m; ++j) row[off + j] = f.ray(r)[j];
        row[r] = -sz;
        lp.constraints.push_back({row, Relation::le, 0});
      }
    }
  }
  std::vector<RatVector> picked;
  for (std::size_t r = 0; r < n; ++r) {
    picked.push_back(f.ray(r));
    if (rank(RatMatrix::from_columns(picked, m)) < picked.size()) {
      picked.pop_back();
      continue;
    }
    RatVector row = zero();
    row[r] = 1;
    lp.constraints.push_back({row, Relation::eq, 0});
  }
  for (std::size_t r = 0; r < n; ++r) {
    RatVector row = zero();
    row[r] = 1;
    lp.constraints.push_back({row, Relation::le, 1});
    lp.constraints.push_back({row, Relation::ge, -1});
  }
  Rational best = 0;
  for (std::size_t r = 0; r < n; ++r)
    for (int s : {1, -1}) {
      lp.objective = zero();
      lp.objective[r] = s;
      LpResult res = maximize(lp);
      REQUIRE(res.status == LpStatus::optimal);
      best = std::max(best, res.value);
    }
  return best;
}

}  // namespace

TEST_CASE("triangle fan examples") {
  MarkedFan f = fixtures::triangle().fan;
  ConvexityCertificate c = classify_convexity(f, div({1, 1, 1}));
  CHECK(c.verdict == ConvexityVerdict::strictly_convex);
  CHECK(verify_convexity_certificate(f, div({1, 1, 1}), c));
  CHECK(c.cones.size() == 7);
  CHECK(classify_convexity(f, div({1, 1, 1}), false).verdict == ConvexityVerdict::convex);

  ConvexityCertificate bad = classify_convexity(f, div({-1, 0, 0}));
  CHECK(bad.verdict == ConvexityVerdict::none);
  REQUIRE(bad.failing_cone);
  CHECK(f.has_cone(*bad.failing_cone));
  CHECK(classify_convexity(f, div({-3, 1, 1})).verdict == ConvexityVerdict::none);
  CHECK(classify_convexity(f, div({-1, 1, 1})).verdict == ConvexityVerdict::strictly_convex);

  CHECK(to_string(ConvexityVerdict::strictly_convex) == "strictly-convex");
  CHECK(to_string(ConvexityVerdict::convex) == "convex");
  CHECK(to_string(ConvexityVerdict::none) == "none");
  CHECK_THROWS_AS(classify_convexity(f, div({1, 1})), InputError);
}

TEST_CASE("tampered certificates are rejected") {
  MarkedFan f = fixtures::triangle().fan;
  Divisor d = div({1, 2, 3});
  ConvexityCertificate c = classify_convexity(f, d);
  REQUIRE(c.verdict == ConvexityVerdict::strictly_convex);
  ConvexityCertificate t = c;
  for (auto& cc : t.cones)
    if (cc.cone.size() == 1) {
      cc.functional[0] += 1;
      break;
    }
  CHECK_FALSE(verify_convexity_certificate(f, d, t));
  ConvexityCertificate claim = c;
  claim.cones.front().slack = 0;
  CHECK_FALSE(verify_convexity_certificate(f, d, claim));
}

TEST_CASE("property: linear functions are convex and never strictly convex") {
  SeededRng rng(31);
  for (const auto& [name, tf] : fixtures::lorentzian_catalog()) {
    CAPTURE(name);
    Divisor lin = linear_divisor(tf.fan, random_functional(tf.fan.ambient_dim(), rng));
    ConvexityCertificate c = classify_convexity(tf.fan, lin);
    CHECK(c.verdict == ConvexityVerdict::convex);
    CHECK(verify_convexity_certificate(tf.fan, lin, c));
  }
}

TEST_CASE("property: adding a linear function keeps the verdict; sums of strictly convex stay strict") {
  SeededRng rng(32);
  for (const auto& [name, tf] : fixtures::lorentzian_catalog()) {
    CAPTURE(name);
    const MarkedFan& f = tf.fan;
    auto w = find_strictly_convex(f);
    REQUIRE(w);
    for (int trial = 0; trial < 4; ++trial) {
      Divisor d = random_divisor(f.num_rays(), rng);
      Divisor shifted = d + linear_divisor(f, random_functional(f.ambient_dim(), rng));
      ConvexityCertificate a = classify_convexity(f, d), b = classify_convexity(f, shifted);
      CHECK(a.verdict == b.verdict);
      CHECK(verify_convexity_certificate(f, d, a));
      CHECK(verify_convexity_certificate(f, shifted, b));

      Divisor x = sample_convex_divisor(f, *w, rng), y = sample_convex_divisor(f, *w, rng);
      CHECK(classify_convexity(f, x).verdict == ConvexityVerdict::strictly_convex);
      CHECK(classify_convexity(f, x + y).verdict == ConvexityVerdict::strictly_convex);
    }
  }
}

TEST_CASE("quasiprojectivity witnesses") {
  for (const auto& [name, tf] : fixtures::lorentzian_catalog()) {
    CAPTURE(name);
    auto w = find_strictly_convex(tf.fan);
    REQUIRE(w);
    CHECK(classify_convexity(tf.fan, *w).verdict == ConvexityVerdict::strictly_convex);
  }
  MarkedFan pinched = fixtures::two_triangles().fan;
  auto w = find_strictly_convex(pinched);
  REQUIRE(w);
  CHECK(classify_convexity(pinched, *w).verdict == ConvexityVerdict::strictly_convex);

  MarkedFan twisted = fixtures::twisted_fan();
  CHECK(validate(twisted).ok());
  CHECK_FALSE(find_strictly_convex(twisted));
}

TEST_CASE("property: two-sided convex divisors are linear on quasiprojective fans") {
  std::vector<fixtures::Named> fans = fixtures::lorentzian_catalog();
  fans.push_back({"two-triangles", fixtures::two_triangles()});
  fans.push_back({"spindle-5", fixtures::spindle(5, 1)});
  for (const auto& [name, tf] : fans) {
    if (tf.fan.num_rays() > 8) continue;
    CAPTURE(name);
    REQUIRE(find_strictly_convex(tf.fan));
    CHECK(largest_two_sided(tf.fan) == 0);
  }
}

TEST_CASE("property: subdivisions of quasiprojective fans stay quasiprojective") {
  SeededRng rng(33);
  for (const auto& [name, tf] : fixtures::lorentzian_catalog()) {
    CAPTURE(name);
    const MarkedFan& f = tf.fan;
    auto w = find_strictly_convex(f);
    REQUIRE(w);
    for (int trial = 0; trial < 2; ++trial) {
      const Cone& sigma = f.maximal_cones()[rng.uniform_int(0, f.maximal_cones().size() - 1)];
      RatVector v = zero_vector(f.ambient_dim());
      for (auto r : sigma)
        if (rng.uniform_int(0, 1) == 1 || r == sigma.back()) v = v + Rational(rng.uniform_int(1, 3)) * f.ray(r);
      StellarResult s = stellar_subdivide(f, v);
      if (!s.new_ray) continue;
      auto ws = subdivision_witness(s.fan, pullback_divisor(f, *w, s.fan), *s.new_ray);
      REQUIRE(ws);
      CHECK(classify_convexity(s.fan, *ws).verdict == ConvexityVerdict::strictly_convex);
      CHECK(find_strictly_convex(s.fan));
    }
  }
}
