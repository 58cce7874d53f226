#include "fixtures.hpp"

#include <algorithm>
#include <cmath>

#include "tropfan/convexity.hpp"
#include "tropfan/errors.hpp"
#include "tropfan/lorentzian.hpp"
#include "tropfan/polynomial.hpp"

namespace fixtures {

RatVector vec(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Divisor div(std::initializer_list<long> xs) { return Divisor{vec(xs)}; }

Divisor constant_divisor(std::size_t n, long c) { return Divisor{RatVector(n, Rational(c))}; }

TropicalFan with_unit_weight(MarkedFan f) {
  MinkowskiWeight w = constant_weight(f, f.dim(), Rational(1));
  return make_tropical_fan(std::move(f), std::move(w));
}

TropicalFan triangle() {
  return with_unit_weight(MarkedFan(2, {vec({1, 0}), vec({0, 1}), vec({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}}));
}

TropicalFan line() { return with_unit_weight(MarkedFan(1, {vec({1}), vec({-1})}, {{0}, {1}})); }

TropicalFan coordinate_skeleton(long a, long b, long c) {
  std::vector<RatVector> rays = {vec({1, 0, 0}), vec({-1, 0, 0}), vec({0, 1, 0}),
                                 vec({0, -1, 0}), vec({0, 0, 1}), vec({0, 0, -1})};
  std::vector<Cone> cones;
  MinkowskiWeight w{2, {}};
  const long axis[3] = {a, b, c};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      for (std::size_t si = 0; si < 2; ++si)
        for (std::size_t sj = 0; sj < 2; ++sj) {
          Cone cone{2 * i + si, 2 * j + sj};
          cones.push_back(cone);
          w.values[cone] = axis[i] * axis[j];
        }
    }
  return make_tropical_fan(MarkedFan(3, std::move(rays), std::move(cones)), std::move(w));
}

TropicalFan triangle_times_line() { return product_tropical(triangle(), line()); }

TropicalFan quadrants() { return product_tropical(line(), line()); }

TropicalFan two_triangles() {
  std::vector<RatVector> rays = {vec({1, 0, 0, 0}), vec({0, 1, 0, 0}), vec({-1, -1, 0, 0}),
                                 vec({0, 0, 1, 0}), vec({0, 0, 0, 1}), vec({0, 0, -1, -1})};
  return with_unit_weight(MarkedFan(4, std::move(rays), {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}));
}

TropicalFan spindle(std::size_t m, long c) {
  std::vector<RatVector> legs;
  if (m == 3) legs = {vec({1, 0, 0}), vec({0, 1, 0}), vec({-1, -1, 0})};
  else if (m == 4) legs = {vec({1, 0, 0}), vec({0, 1, 0}), vec({-1, 0, 0}), vec({0, -1, 0})};
  else if (m == 5) legs = {vec({1, 0, 0}), vec({1, 1, 0}), vec({0, 1, 0}), vec({-1, 0, 0}), vec({-1, -2, 0})};
  else throw InputError("spindle fixture supports 3 to 5 legs");
  legs.back()[2] = c;
  std::vector<RatVector> rays = {vec({0, 0, 1}), vec({0, 0, -1})};
  rays.insert(rays.end(), legs.begin(), legs.end());
  std::vector<Cone> cones;
  for (std::size_t i = 0; i < m; ++i) {
    cones.push_back({0, 2 + i});
    cones.push_back({1, 2 + i});
  }
  return with_unit_weight(MarkedFan(3, std::move(rays), std::move(cones)));
}

TropicalFan projective_space(std::size_t n) {
  std::vector<RatVector> rays;
  for (std::size_t i = 0; i < n; ++i) rays.push_back(unit_vector(n, i));
  rays.push_back(RatVector(n, Rational(-1)));
  std::vector<Cone> cones;
  for (std::size_t skip = 0; skip <= n; ++skip) {
    Cone c;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) c.push_back(i);
    cones.push_back(c);
  }
  return with_unit_weight(MarkedFan(n, std::move(rays), std::move(cones)));
}

MarkedFan twisted_fan() {
  std::vector<RatVector> rays = {vec({3, 0, 1}), vec({0, 3, 1}), vec({-3, -3, 1}), vec({1, 0, 1}),
                                 vec({0, 1, 1}), vec({-1, -1, 1}), vec({0, 0, -1})};
  std::vector<Cone> cones = {{3, 4, 5}, {0, 1, 4}, {0, 3, 4}, {1, 2, 5}, {1, 4, 5},
                             {0, 2, 3}, {2, 3, 5}, {0, 1, 6}, {1, 2, 6}, {0, 2, 6}};
  return MarkedFan(3, std::move(rays), std::move(cones));
}

TropicalFan bergman(const Matroid& m) { return bergman_fan(m).tropical; }

std::vector<Named> lorentzian_catalog() {
  return {
      {"triangle", triangle()},
      {"coordinate-skeleton", coordinate_skeleton()},
      {"coordinate-skeleton-123", coordinate_skeleton(1, 2, 3)},
      {"triangle-x-line", triangle_times_line()},
      {"quadrants", quadrants()},
      {"spindle-3", spindle(3, 2)},
      {"spindle-4", spindle(4)},
      {"projective-3", projective_space(3)},
      {"bergman-U34", bergman(uniform_matroid(3, 4))},
      {"bergman-K4", bergman(complete_graph_matroid(4))},
  };
}

namespace {

// Counterclockwise angle order; exact tie-breaking is irrelevant after dedup.
double angle_of(const RatVector& u) { return std::atan2(u[1].get_d(), u[0].get_d()); }

}  // namespace

TropicalFan random_complete_2fan(SeededRng& rng) {
  for (;;) {
    const auto k = static_cast<std::size_t>(rng.uniform_int(3, 7));
    std::vector<RatVector> rays;
    while (rays.size() < k) {
      RatVector u{Rational(rng.uniform_int(-4, 4)), Rational(rng.uniform_int(-4, 4))};
      if (is_zero(u)) continue;
      u = rng.uniform_rational(1, 3, 2) * u;
      bool parallel = false;
      for (const auto& v : rays)
        if (sgn(u[0] * v[1] - u[1] * v[0]) == 0 && sgn(dot(u, v)) > 0) parallel = true;
      if (!parallel) rays.push_back(u);
    }
    std::sort(rays.begin(), rays.end(), [](const RatVector& a, const RatVector& b) { return angle_of(a) < angle_of(b); });
    bool ok = true;
    std::vector<Cone> cones;
    for (std::size_t i = 0; i < k; ++i) {
      const RatVector& a = rays[i];
      const RatVector& b = rays[(i + 1) % k];
      if (sgn(a[0] * b[1] - a[1] * b[0]) <= 0) ok = false;
      Cone c{i, (i + 1) % k};
      std::sort(c.begin(), c.end());
      cones.push_back(c);
    }
    if (!ok) continue;
    MarkedFan f(2, std::move(rays), std::move(cones));
    MinkowskiWeight w = volume_weight(f);
    Rational scale = rng.uniform_rational(1, 3, 3);
    for (auto& [c, v] : w.values) v *= scale;
    return make_tropical_fan(std::move(f), std::move(w));
  }
}

RatVector random_polygon(const MarkedFan& f, SeededRng& rng) {
  for (;;) {
    RatVector rhs(f.num_rays());
    for (auto& x : rhs) x = rng.uniform_rational(1, 5, 2);
    if (classify_convexity(f, Divisor{rhs}).verdict == ConvexityVerdict::strictly_convex) return rhs;
  }
}

Rational polygon_area(const MarkedFan& f, const RatVector& rhs) {
  // Rays are stored in counterclockwise order; vertex i solves the two edge
  // equations of rays i and i+1.
  const std::size_t k = f.num_rays();
  std::vector<RatVector> verts;
  for (std::size_t i = 0; i < k; ++i) {
    const RatVector& a = f.ray(i);
    const RatVector& b = f.ray((i + 1) % k);
    Rational det = a[0] * b[1] - a[1] * b[0];
    verts.push_back({(rhs[i] * b[1] - a[1] * rhs[(i + 1) % k]) / det, (a[0] * rhs[(i + 1) % k] - rhs[i] * b[0]) / det});
  }
  Rational twice = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const RatVector& p = verts[i];
    const RatVector& q = verts[(i + 1) % k];
    twice += p[0] * q[1] - p[1] * q[0];
  }
  return abs(twice) / 2;
}

EdgeCheck edge_identity(const TropicalFan& tf, std::size_t sigma, const Rational& a1, const Rational& a2) {
  const MarkedFan& f = tf.fan;
  const Cone& c = f.maximal_cones().at(sigma);
  const RatVector v = a1 * f.ray(c[0]) + a2 * f.ray(c[1]);
  StellarResult s = stellar_subdivide(f, v);
  if (!s.new_ray) throw InvariantError("edge identity needs an interior point");
  const std::size_t n = f.num_rays(), eta = *s.new_ray;
  TropicalFan fine{s.fan, transport_weight(tf, s.fan, s.containment)};
  QuadraticVolumeForm before = volume_poly_2d(tf), after = volume_poly_2d(fine);

  auto as_poly = [](const RatMatrix& q) {
    Polynomial p(q.rows());
    for (std::size_t i = 0; i < q.rows(); ++i)
      for (std::size_t j = 0; j < q.cols(); ++j)
        if (sgn(q(i, j)) != 0) p.add_term(i <= j ? Monomial{i, j} : Monomial{j, i}, q(i, j));
    return p;
  };
  std::vector<std::size_t> same(n);
  for (std::size_t i = 0; i < n; ++i) same[i] = i;
  Polynomial coarse = as_poly(before.matrix).embed(n + 1, same);
  RatVector lin(n + 1);
  lin[eta] = 1;
  lin[c[0]] = -a1;
  lin[c[1]] = -a2;
  Polynomial l = Polynomial::linear(lin);
  Polynomial expect = coarse - (tf.weight.at(c) / (a1 * a2)) * (l * l);
  return EdgeCheck{as_poly(after.matrix) == expect, inertia(before.matrix), inertia(after.matrix)};
}

}  // namespace fixtures
