#include <doctest.h>

#include "fixtures.hpp"
#include "tropfan/errors.hpp"
#include "tropfan/lorentzian.hpp"

using namespace tropfan;
using fixtures::div;
using fixtures::vec;

namespace {

Polynomial z(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

Polynomial form_poly(const RatMatrix& q) {
  Polynomial p(q.rows());
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j)
      if (sgn(q(i, j)) != 0) p.add_term(i <= j ? Monomial{i, j} : Monomial{j, i}, q(i, j));
  return p;
}

RatVector random_functional(std::size_t n, SeededRng& rng) {
  RatVector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(rng.uniform_rational(-2, 2, 3));
  return v;
}

}  // namespace

TEST_CASE("triangle fan volume form") {
  TropicalFan t = fixtures::triangle();
  QuadraticVolumeForm q = volume_poly_2d(t);
  CHECK(q.matrix == RatMatrix::from_rows({vec({1, 1, 1}), vec({1, 1, 1}), vec({1, 1, 1})}, 3));
  CHECK(inertia(q.matrix) == Inertia{1, 0, 2});
  Polynomial s = z(3, 0) + z(3, 1) + z(3, 2);
  CHECK(volume_polynomial(t) == s * s);
}

TEST_CASE("spindle volume forms have one positive and one negative eigenvalue") {
  for (std::size_t m = 3; m <= 5; ++m)
    for (long c : {0L, 2L}) {
      CAPTURE(m);
      CAPTURE(c);
      QuadraticVolumeForm q = volume_poly_2d(fixtures::spindle(m, c));
      CHECK(inertia(q.matrix) == Inertia{1, 1, m});
    }
}

TEST_CASE("coordinate 2-skeleton volume polynomial") {
  TropicalFan f3 = fixtures::coordinate_skeleton();
  const std::size_t n = 6;
  Polynomial z1 = z(n, 0) + z(n, 1), z2 = z(n, 2) + z(n, 3), z3 = z(n, 4) + z(n, 5);
  Polynomial expanded = Rational(2) * (z1 * z2) + Rational(2) * (z1 * z3) + Rational(2) * (z2 * z3);
  Polynomial a = z1 + z2 + Rational(2) * z3, b = z1 - z2;
  Polynomial squares = Rational(1, 2) * (a * a) - Rational(1, 2) * (b * b) - Rational(2) * (z3 * z3);
  CHECK(expanded == squares);
  Polynomial vol = volume_polynomial(f3);
  CHECK(vol == expanded);
  CHECK(form_poly(volume_poly_2d(f3).matrix) == vol);
  CHECK(inertia(volume_poly_2d(f3).matrix) == Inertia{1, 2, 3});
}

TEST_CASE("property: volume polynomial agrees with the quadratic form and vanishes on linear functions") {
  SeededRng rng(41);
  for (const auto& [name, tf] : fixtures::lorentzian_catalog()) {
    CAPTURE(name);
    Polynomial vol = volume_polynomial(tf);
    if (tf.fan.dim() == 2) CHECK(form_poly(volume_poly_2d(tf).matrix) == vol);
    for (int trial = 0; trial < 3; ++trial) {
      Divisor lin = linear_divisor(tf.fan, random_functional(tf.fan.ambient_dim(), rng));
      CHECK(vol.evaluate(lin.values) == 0);
      Divisor d;
      for (std::size_t i = 0; i < tf.fan.num_rays(); ++i) d.values.push_back(rng.uniform_rational(-2, 2, 2));
      CHECK(vol.evaluate(d.values) == mixed_degree(tf, std::vector<Divisor>(tf.fan.dim(), d)));
    }
  }
}

TEST_CASE("volume polynomial of a product factors") {
  TropicalFan p = fixtures::triangle_times_line();
  Polynomial tri = volume_polynomial(fixtures::triangle()).embed(5, {0, 1, 2});
  Polynomial lin = volume_polynomial(fixtures::line()).embed(5, {3, 4});
  // Only the terms with two triangle factors and one line factor survive: 3 = binom(3, 2).
  CHECK(volume_polynomial(p) == Rational(3) * (tri * lin));
  CHECK_THROWS_AS(volume_polynomial(product_tropical(p, fixtures::quadrants())), PreconditionError);
}

TEST_CASE("Lorentzian verdicts on the fixtures") {
  for (const auto& [name, tf] : fixtures::lorentzian_catalog()) {
    CAPTURE(name);
    LorentzianCertificate c = is_lorentzian(tf);
    CHECK(c.verdict);
    CHECK(c.reasons.empty());
    CHECK(c.witness);
    CHECK(c.unpinched.unpinched);
    CHECK(c.star_inertia.size() == tf.fan.cones(tf.fan.dim() - 2).size());
    for (const auto& [tau, in] : c.star_inertia) CHECK(in.positive == 1);
  }
  LorentzianCertificate f3 = is_lorentzian(fixtures::coordinate_skeleton());
  REQUIRE(f3.star_inertia.count({}) == 1);
  CHECK(f3.star_inertia.at({}) == Inertia{1, 2, 3});
  CHECK(is_lorentzian(fixtures::coordinate_skeleton(1, 2, 3)).verdict);
}

TEST_CASE("pinched fan is not Lorentzian") {
  LorentzianCertificate c = is_lorentzian(fixtures::two_triangles());
  CHECK_FALSE(c.verdict);
  CHECK(c.witness);
  CHECK_FALSE(c.unpinched.unpinched);
  CHECK(c.unpinched.pinches == std::vector<Cone>{Cone{}});
  CHECK(c.star_inertia.at({}).positive == 2);
  CHECK_FALSE(c.reasons.empty());
}

TEST_CASE("non-quasiprojective complete fan") {
  MarkedFan tw = fixtures::twisted_fan();
  TropicalFan tf = make_tropical_fan(tw, volume_weight(tw));
  LorentzianCertificate c = is_lorentzian(tf);
  CHECK_FALSE(c.verdict);
  CHECK_FALSE(c.witness);
  CHECK_THROWS_AS(definition_sample_check(tf, 2, 1), PreconditionError);
}

TEST_CASE("low-dimensional fans are Lorentzian when quasiprojective") {
  CHECK(is_lorentzian(fixtures::line()).verdict);
  MarkedFan point(2, {}, {Cone{}});
  CHECK(is_lorentzian(fixtures::with_unit_weight(point)).verdict);
}

TEST_CASE("parallel star checks agree with the sequential run") {
  TropicalFan k4 = fixtures::bergman(complete_graph_matroid(4));
  LorentzianCertificate a = is_lorentzian(k4), b = is_lorentzian(k4, {4});
  CHECK(a.verdict == b.verdict);
  CHECK(a.star_inertia == b.star_inertia);
  TropicalFan p3 = fixtures::projective_space(3);
  CHECK(is_lorentzian(p3, {3}).star_inertia == is_lorentzian(p3).star_inertia);
}

TEST_CASE("property: verdict does not depend on the marking") {
  SeededRng rng(42);
  std::vector<fixtures::Named> fans = fixtures::lorentzian_catalog();
  fans.push_back({"two-triangles", fixtures::two_triangles()});
  for (const auto& [name, tf] : fans) {
    CAPTURE(name);
    RatVector lambda;
    for (std::size_t i = 0; i < tf.fan.num_rays(); ++i) lambda.push_back(rng.uniform_rational(1, 5, 4));
    LorentzianCertificate a = is_lorentzian(tf), b = is_lorentzian(rescale_marking(tf, lambda));
    CHECK(a.verdict == b.verdict);
    for (const auto& [tau, in] : a.star_inertia) CHECK(b.star_inertia.at(tau).positive == in.positive);
  }
}

TEST_CASE("property: two-dimensional edge identity") {
  SeededRng rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    TropicalFan tf = fixtures::random_complete_2fan(rng);
    auto sigma = static_cast<std::size_t>(rng.uniform_int(0, tf.fan.maximal_cones().size() - 1));
    fixtures::EdgeCheck e = fixtures::edge_identity(tf, sigma, rng.uniform_rational(1, 4, 3), rng.uniform_rational(1, 4, 3));
    CHECK(e.identity);
    CHECK(e.before.positive == 1);
    CHECK(e.after.positive == e.before.positive);
  }
  fixtures::EdgeCheck s = fixtures::edge_identity(fixtures::spindle(4), 0, 1, 2);
  CHECK(s.identity);
  CHECK(s.after.positive == s.before.positive);
}

TEST_CASE("definition-level sampling") {
  for (const auto& [name, tf] : fixtures::lorentzian_catalog()) {
    CAPTURE(name);
    SampleCheckReport r = definition_sample_check(tf, 3, 7);
    CHECK(r.passed);
    CHECK(r.seed == 7);
    for (const auto& s : r.stars) {
      CHECK(s.one_positive_eigenvalue);
      CHECK(s.positive_degrees);
    }
  }
  SampleCheckReport a = definition_sample_check(fixtures::projective_space(3), 2, 99);
  SampleCheckReport b = definition_sample_check(fixtures::projective_space(3), 2, 99);
  CHECK(a.stars.size() == b.stars.size());
}

TEST_CASE("Alexandrov-Fenchel reports") {
  TropicalFan t = fixtures::triangle();
  AFReport r = af_report(t, div({1, 1, 1}), div({1, 1, 1}), {});
  CHECK(r.gap == 0);
  CHECK(r.sequence == std::vector<Rational>{9, 9, 9});
  CHECK(r.log_concave);
  CHECK(r.unimodal);

  AFReport p = af_report(fixtures::two_triangles(), div({1, 1, 1, 0, 0, 0}), div({0, 0, 0, 1, 1, 1}), {});
  CHECK(p.sequence == std::vector<Rational>{9, 0, 9});
  CHECK_FALSE(p.unimodal);
  CHECK_FALSE(p.log_concave);
  CHECK(p.gap < 0);

  CHECK_THROWS_AS(af_report(t, div({-1, 0, 0}), div({1, 1, 1}), {}), PreconditionError);
  CHECK_THROWS_AS(af_report(fixtures::line(), div({1, 1}), div({1, 1}), {}), PreconditionError);
  CHECK_THROWS_AS(af_report(t, div({1, 1, 1}), div({1, 1, 1}), {div({1, 1, 1})}), InputError);
}

TEST_CASE("property: Alexandrov-Fenchel on Lorentzian fixtures") {
  SeededRng rng(44);
  for (const auto& [name, tf] : fixtures::lorentzian_catalog()) {
    CAPTURE(name);
    auto w = find_strictly_convex(tf.fan);
    REQUIRE(w);
    for (int trial = 0; trial < 4; ++trial) {
      Divisor d1 = sample_convex_divisor(tf.fan, *w, rng), d2 = sample_convex_divisor(tf.fan, *w, rng);
      std::vector<Divisor> aux;
      for (std::size_t i = 2; i < tf.fan.dim(); ++i) aux.push_back(sample_convex_divisor(tf.fan, *w, rng));
      AFReport r = af_report(tf, d1, d2, aux);
      CHECK(r.gap >= 0);
      CHECK(r.log_concave);
      CHECK(r.unimodal);
    }
  }
}

TEST_CASE("log-concavity and unimodality flags") {
  auto seq = [](std::initializer_list<long> xs) {
    std::vector<Rational> v;
    for (long x : xs) v.emplace_back(x);
    return v;
  };
  CHECK(is_log_concave(seq({1, 3, 3, 1})));
  CHECK(is_unimodal(seq({1, 3, 3, 1})));
  CHECK_FALSE(is_log_concave(seq({1, 0, 1})));
  CHECK_FALSE(is_unimodal(seq({1, 0, 1})));
  CHECK_FALSE(is_unimodal(seq({1, 2, 1, 2})));
  CHECK(is_unimodal(seq({5, 4, 4, 1})));
  CHECK(is_log_concave(seq({})));
  CHECK(is_log_concave(seq({2})));
  CHECK_FALSE(is_log_concave(seq({1, 1, 4})));
}
