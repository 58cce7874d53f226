#include "tropfan/minkowski.hpp"

#include <algorithm>

#include "tropfan/errors.hpp"

namespace tropfan {

const Rational& MinkowskiWeight::at(const Cone& c) const {
  auto it = values.find(c);
  if (it == values.end()) throw InputError("weight missing on cone {" + cone_key(c) + "}");
  return it->second;
}

Divisor operator+(const Divisor& a, const Divisor& b) { return Divisor{a.values + b.values}; }
Divisor operator-(const Divisor& a, const Divisor& b) { return Divisor{a.values - b.values}; }
Divisor operator*(const Rational& s, const Divisor& d) { return Divisor{s * d.values}; }

MinkowskiWeight constant_weight(const MarkedFan& f, std::size_t k, const Rational& c) {
  MinkowskiWeight w{k, {}};
  for (const auto& cone : f.cones(k)) w.values[cone] = c;
  return w;
}

namespace {

void require_complete(const MarkedFan& f, const MinkowskiWeight& w) {
  if (w.degree > f.dim()) throw InputError("weight degree exceeds fan dimension");
  for (const auto& c : f.cones(w.degree)) (void)w.at(c);
  for (const auto& [c, v] : w.values)
    if (c.size() != w.degree || !f.has_cone(c)) throw InputError("weight given on foreign cone {" + cone_key(c) + "}");
}

void require_divisor(const MarkedFan& f, const Divisor& d) {
  if (d.values.size() != f.num_rays())
    throw InputError("divisor has " + std::to_string(d.values.size()) + " values, fan has " +
                     std::to_string(f.num_rays()) + " rays");
}

struct Contraction {
  RatVector b;
  Rational zsum;
};

// For each (k-1)-cone tau: sum w(sigma) u_{sigma\tau} and sum w(sigma) z_{sigma\tau}.
std::map<Cone, Contraction> contract(const MarkedFan& f, const MinkowskiWeight& w, const Divisor* d) {
  std::map<Cone, Contraction> acc;
  for (const auto& tau : f.cones(w.degree - 1)) acc[tau] = Contraction{zero_vector(f.ambient_dim()), Rational(0)};
  for (const auto& sigma : f.cones(w.degree)) {
    const Rational& ws = w.at(sigma);
    if (sgn(ws) == 0) continue;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      Cone tau = sigma;
      tau.erase(tau.begin() + static_cast<std::ptrdiff_t>(i));
      Contraction& c = acc[tau];
      const RatVector& u = f.ray(sigma[i]);
      for (std::size_t j = 0; j < u.size(); ++j)
        if (sgn(u[j]) != 0) c.b[j] += ws * u[j];
      if (d) c.zsum += ws * d->values[sigma[i]];
    }
  }
  return acc;
}

}  // namespace

BalancingReport check_balancing(const MarkedFan& f, const MinkowskiWeight& w) {
  require_complete(f, w);
  BalancingReport rep;
  if (w.degree == 0) return rep;
  for (const auto& [tau, c] : contract(f, w, nullptr)) {
    if (!solve_linear(f.ray_matrix(tau), c.b)) {
      rep.balanced = false;
      rep.failures.push_back(tau);
    }
  }
  return rep;
}

TropicalFan make_tropical_fan(MarkedFan f, MinkowskiWeight w) {
  if (w.degree != f.dim()) throw InputError("weight degree must equal the fan dimension");
  require_complete(f, w);
  for (const auto& [c, v] : w.values)
    if (sgn(v) <= 0) throw InputError("weight on cone {" + cone_key(c) + "} is not positive");
  BalancingReport rep = check_balancing(f, w);
  if (!rep.balanced) throw InputError("weight is not balanced at cone {" + cone_key(rep.failures.front()) + "}");
  return TropicalFan{std::move(f), std::move(w)};
}

Divisor indicator_divisor(const MarkedFan& f, std::size_t ray) {
  if (ray >= f.num_rays()) throw InputError("indicator of a missing ray");
  return Divisor{unit_vector(f.num_rays(), ray)};
}

Divisor linear_divisor(const MarkedFan& f, const RatVector& functional) {
  Divisor d{RatVector(f.num_rays())};
  for (std::size_t i = 0; i < f.num_rays(); ++i) d.values[i] = dot(functional, f.ray(i));
  return d;
}

Rational evaluate(const MarkedFan& f, const Divisor& d, const RatVector& point) {
  require_divisor(f, d);
  auto loc = locate(f, point);
  if (!loc) throw PreconditionError("point lies outside the support");
  const Cone& sigma = f.maximal_cones()[loc->maximal_index];
  Rational v = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) v += loc->coords[i] * d.values[sigma[i]];
  return v;
}

MinkowskiWeight divisor_action(const MarkedFan& f, const Divisor& d, const MinkowskiWeight& w) {
  require_complete(f, w);
  require_divisor(f, d);
  if (w.degree == 0) throw PreconditionError("divisor action on a weight of degree 0");
  MinkowskiWeight out{w.degree - 1, {}};
  for (const auto& [tau, c] : contract(f, w, &d)) {
    auto coeffs = solve_linear(f.ray_matrix(tau), c.b);
    if (!coeffs) throw PreconditionError("weight is not balanced at cone {" + cone_key(tau) + "}");
    Rational v = c.zsum;
    for (std::size_t i = 0; i < tau.size(); ++i) v -= (*coeffs)[i] * d.values[tau[i]];
    out.values[tau] = v;
  }
  return out;
}

Rational mixed_degree(const MarkedFan& f, const MinkowskiWeight& w, const std::vector<Divisor>& ds) {
  if (ds.size() != w.degree)
    throw InputError("expected " + std::to_string(w.degree) + " divisors, got " + std::to_string(ds.size()));
  MinkowskiWeight cur = w;
  for (const auto& d : ds) cur = divisor_action(f, d, cur);
  return cur.at(Cone{});
}

Rational mixed_degree(const TropicalFan& tf, const std::vector<Divisor>& ds) {
  return mixed_degree(tf.fan, tf.weight, ds);
}

MinkowskiWeight star_weight(const Star& s, const MinkowskiWeight& w) {
  if (w.degree < s.apex.size()) throw InputError("weight degree below the apex dimension");
  MinkowskiWeight out{w.degree - s.apex.size(), {}};
  for (const auto& c : s.fan.cones(out.degree)) out.values[c] = w.at(s.lift(c));
  return out;
}

TropicalFan star_tropical(const TropicalFan& tf, const Cone& tau) {
  Star s = star(tf.fan, tau);
  MinkowskiWeight w = star_weight(s, tf.weight);
  return TropicalFan{std::move(s.fan), std::move(w)};
}

Divisor descend_divisor(const MarkedFan& f, const Star& s, const Divisor& d) {
  require_divisor(f, d);
  RatVector on_tau;
  for (auto r : s.apex) on_tau.push_back(d.values[r]);
  RatVector psi = matching_functional(f, s.apex, on_tau);
  Divisor out{RatVector(s.ray_lift.size())};
  for (std::size_t i = 0; i < s.ray_lift.size(); ++i) {
    std::size_t r = s.ray_lift[i];
    out.values[i] = d.values[r] - dot(psi, f.ray(r));
  }
  return out;
}

TropicalFan rescale_marking(const TropicalFan& tf, const RatVector& lambda) {
  const MarkedFan& f = tf.fan;
  if (lambda.size() != f.num_rays()) throw InputError("one scale factor per ray expected");
  for (const auto& l : lambda)
    if (sgn(l) <= 0) throw InputError("scale factors must be positive");
  std::vector<RatVector> rays;
  for (std::size_t i = 0; i < f.num_rays(); ++i) rays.push_back(lambda[i] * f.ray(i));
  MarkedFan g(f.ambient_dim(), std::move(rays), f.maximal_cones());
  MinkowskiWeight w{tf.weight.degree, {}};
  for (const auto& [c, v] : tf.weight.values) {
    Rational x = v;
    for (auto r : c) x /= lambda[r];
    w.values[c] = x;
  }
  return TropicalFan{std::move(g), std::move(w)};
}

Divisor rescale_divisor(const Divisor& d, const RatVector& lambda) {
  if (lambda.size() != d.values.size()) throw InputError("one scale factor per ray expected");
  Divisor out = d;
  for (std::size_t i = 0; i < lambda.size(); ++i) out.values[i] *= lambda[i];
  return out;
}

MinkowskiWeight transport_weight(const TropicalFan& coarse, const MarkedFan& fine,
                                 const std::optional<std::vector<std::size_t>>& containment) {
  const MarkedFan& c = coarse.fan;
  if (fine.ambient_dim() != c.ambient_dim() || fine.dim() != c.dim())
    throw PreconditionError("refinement must have the same ambient space and dimension");
  if (containment && containment->size() != fine.maximal_cones().size())
    throw InputError("containment map has wrong length");
  MinkowskiWeight out{fine.dim(), {}};
  for (std::size_t i = 0; i < fine.maximal_cones().size(); ++i) {
    const Cone& sf = fine.maximal_cones()[i];
    std::size_t parent;
    if (containment) {
      parent = (*containment)[i];
      if (parent >= c.maximal_cones().size()) throw InputError("containment map points to a missing cone");
    } else {
      RatVector bary = zero_vector(fine.ambient_dim());
      for (auto r : sf) bary = bary + fine.ray(r);
      auto loc = locate(c, bary);
      if (!loc) throw PreconditionError("fine cone {" + cone_key(sf) + "} leaves the coarse support");
      parent = loc->maximal_index;
    }
    const Cone& sc = c.maximal_cones()[parent];
    RatMatrix basis = c.ray_matrix(sc);
    RatMatrix m(sc.size(), sf.size());
    for (std::size_t j = 0; j < sf.size(); ++j) {
      auto col = solve_linear(basis, fine.ray(sf[j]));
      if (!col) throw PreconditionError("fine cone {" + cone_key(sf) + "} is not inside coarse cone {" + cone_key(sc) + "}");
      for (std::size_t k = 0; k < sc.size(); ++k) m(k, j) = (*col)[k];
    }
    Rational det = abs(determinant(m));
    if (sgn(det) == 0) throw PreconditionError("fine cone {" + cone_key(sf) + "} is degenerate");
    out.values[sf] = coarse.weight.at(sc) / det;
  }
  return out;
}

Divisor pullback_divisor(const MarkedFan& coarse, const Divisor& d, const MarkedFan& fine) {
  Divisor out{RatVector(fine.num_rays())};
  for (std::size_t i = 0; i < fine.num_rays(); ++i) out.values[i] = evaluate(coarse, d, fine.ray(i));
  return out;
}

}  // namespace tropfan
