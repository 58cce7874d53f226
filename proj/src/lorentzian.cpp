#include "tropfan/lorentzian.hpp"

#include <functional>

#include "tropfan/errors.hpp"
#include "tropfan/parallel.hpp"
#include "tropfan/random.hpp"

namespace tropfan {

QuadraticVolumeForm degree_two_form(const MarkedFan& f, const MinkowskiWeight& w) {
  if (w.degree != 2) throw InputError("degree_two_form needs a weight of degree 2");
  const std::size_t nr = f.num_rays();
  QuadraticVolumeForm q{RatMatrix(nr, nr), RatVector(nr, Rational(0))};
  std::vector<RatVector> around(nr, zero_vector(f.ambient_dim()));
  for (const auto& sigma : f.cones(2)) {
    const Rational& ws = w.at(sigma);
    q.matrix(sigma[0], sigma[1]) = ws;
    q.matrix(sigma[1], sigma[0]) = ws;
    around[sigma[0]] = around[sigma[0]] + ws * f.ray(sigma[1]);
    around[sigma[1]] = around[sigma[1]] + ws * f.ray(sigma[0]);
  }
  for (const auto& rho : f.cones(1)) {
    std::size_t r = rho[0];
    auto c = solve_linear(f.ray_matrix(rho), around[r]);
    if (!c) throw PreconditionError("weight is not balanced at ray " + std::to_string(r));
    q.a[r] = (*c)[0];
    q.matrix(r, r) = -q.a[r];
  }
  return q;
}

QuadraticVolumeForm volume_poly_2d(const TropicalFan& tf) {
  if (tf.fan.dim() != 2) throw PreconditionError("volume_poly_2d needs a 2-dimensional fan");
  return degree_two_form(tf.fan, tf.weight);
}

Polynomial volume_polynomial(const TropicalFan& tf) {
  const std::size_t d = tf.fan.dim();
  const std::size_t nr = tf.fan.num_rays();
  if (d > 4) throw PreconditionError("volume_polynomial supports d <= 4");
  Polynomial p(nr);
  std::vector<Divisor> ind;
  for (std::size_t r = 0; r < nr; ++r) ind.push_back(indicator_divisor(tf.fan, r));
  Monomial m;
  std::function<void(std::size_t, const MinkowskiWeight&)> walk = [&](std::size_t start, const MinkowskiWeight& w) {
    if (m.size() == d) {
      // multinomial d! / prod(mult!)
      Rational coeff = 1;
      for (std::size_t i = 2; i <= d; ++i) coeff *= static_cast<unsigned long>(i);
      for (std::size_t i = 0; i < m.size();) {
        std::size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        for (std::size_t k = 2; k <= j - i; ++k) coeff /= static_cast<unsigned long>(k);
        i = j;
      }
      p.add_term(m, coeff * w.at(Cone{}));
      return;
    }
    for (std::size_t r = start; r < nr; ++r) {
      m.push_back(r);
      walk(r, divisor_action(tf.fan, ind[r], w));
      m.pop_back();
    }
  };
  walk(0, tf.weight);
  return p;
}

LorentzianCertificate is_lorentzian(const TropicalFan& tf, const LorentzianOptions& opts) {
  const MarkedFan& f = tf.fan;
  LorentzianCertificate cert;
  cert.witness = find_strictly_convex(f);
  if (!cert.witness) cert.reasons.push_back("no strictly convex divisor exists");
  cert.unpinched = is_unpinched(f);
  for (const auto& tau : cert.unpinched.pinches)
    cert.reasons.push_back("pinched at cone {" + cone_key(tau) + "}");
  if (f.dim() >= 2) {
    const auto& taus = f.cones(f.dim() - 2);
    std::vector<Inertia> found(taus.size());
    parallel_for(taus.size(), opts.jobs, [&](std::size_t i) {
      TropicalFan s = star_tropical(tf, taus[i]);
      found[i] = inertia(volume_poly_2d(s).matrix);
    });
    for (std::size_t i = 0; i < taus.size(); ++i) {
      cert.star_inertia[taus[i]] = found[i];
      if (found[i].positive != 1)
        cert.reasons.push_back("star at cone {" + cone_key(taus[i]) + "} has inertia " + to_string(found[i]));
    }
  }
  cert.verdict = cert.reasons.empty();
  return cert;
}

SampleCheckReport definition_sample_check(const TropicalFan& tf, std::size_t samples, std::uint64_t seed) {
  const MarkedFan& f = tf.fan;
  auto witness = find_strictly_convex(f);
  if (!witness) throw PreconditionError("fan is not quasiprojective");
  SampleCheckReport rep;
  rep.seed = seed;
  rep.samples = samples;
  SeededRng rng(seed);
  for (std::size_t k = 0; k + 2 <= f.dim(); ++k)
    for (const auto& tau : f.cones(k)) {
      Star s = star(f, tau);
      MinkowskiWeight ws = star_weight(s, tf.weight);
      Divisor wbar = descend_divisor(f, s, *witness);
      if (classify_convexity(s.fan, wbar).verdict != ConvexityVerdict::strictly_convex)
        throw InvariantError("descended witness is not strictly convex at cone {" + cone_key(tau) + "}");
      StarSampleResult res{tau, s.fan.dim(), samples, true, true};
      for (std::size_t i = 0; i < samples; ++i) {
        std::vector<Divisor> ds;
        for (std::size_t j = 0; j < s.fan.dim(); ++j) ds.push_back(sample_convex_divisor(s.fan, wbar, rng));
        MinkowskiWeight gamma = ws;
        for (std::size_t j = 2; j < ds.size(); ++j) gamma = divisor_action(s.fan, ds[j], gamma);
        QuadraticVolumeForm q = degree_two_form(s.fan, gamma);
        if (inertia(q.matrix).positive != 1) res.one_positive_eigenvalue = false;
        Rational top = dot(ds[0].values, q.matrix.apply(ds[1].values));
        if (sgn(top) <= 0) res.positive_degrees = false;
      }
      if (!res.one_positive_eigenvalue || !res.positive_degrees) rep.passed = false;
      rep.stars.push_back(std::move(res));
    }
  return rep;
}

bool is_log_concave(const std::vector<Rational>& seq) {
  for (std::size_t k = 1; k + 1 < seq.size(); ++k)
    if (seq[k] * seq[k] < seq[k - 1] * seq[k + 1]) return false;
  return true;
}

bool is_unimodal(const std::vector<Rational>& seq) {
  bool descending = false;
  for (std::size_t k = 1; k < seq.size(); ++k) {
    if (seq[k] < seq[k - 1]) descending = true;
    else if (seq[k] > seq[k - 1] && descending) return false;
  }
  return true;
}

AFReport af_report(const TropicalFan& tf, const Divisor& d1, const Divisor& d2, const std::vector<Divisor>& aux) {
  const MarkedFan& f = tf.fan;
  const std::size_t d = f.dim();
  if (d < 2) throw PreconditionError("Alexandrov-Fenchel report needs dimension at least 2");
  if (aux.size() != d - 2)
    throw InputError("expected " + std::to_string(d - 2) + " auxiliary divisors, got " + std::to_string(aux.size()));
  auto require_convex = [&](const Divisor& x, const std::string& name) {
    ConvexityCertificate c = classify_convexity(f, x, false);
    if (c.verdict == ConvexityVerdict::none)
      throw PreconditionError(name + " is not convex: local condition fails at cone {" + cone_key(*c.failing_cone) + "}");
  };
  require_convex(d1, "D1");
  require_convex(d2, "D2");
  for (std::size_t i = 0; i < aux.size(); ++i) require_convex(aux[i], "auxiliary divisor " + std::to_string(i));

  MinkowskiWeight gamma = tf.weight;
  for (const auto& x : aux) gamma = divisor_action(f, x, gamma);
  QuadraticVolumeForm q = degree_two_form(f, gamma);
  auto b = [&](const Divisor& x, const Divisor& y) { return dot(x.values, q.matrix.apply(y.values)); };
  AFReport rep;
  Rational m12 = b(d1, d2);
  rep.gap = m12 * m12 - b(d1, d1) * b(d2, d2);
  for (std::size_t k = 0; k <= d; ++k) {
    std::vector<Divisor> ds(k, d1);
    ds.insert(ds.end(), d - k, d2);
    rep.sequence.push_back(mixed_degree(tf, ds));
  }
  rep.log_concave = is_log_concave(rep.sequence);
  rep.unimodal = is_unimodal(rep.sequence);
  return rep;
}

}  // namespace tropfan
