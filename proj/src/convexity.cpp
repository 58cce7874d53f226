#include "tropfan/convexity.hpp"

#include "tropfan/errors.hpp"
#include "tropfan/lp.hpp"

namespace tropfan {

std::string to_string(ConvexityVerdict v) {
  switch (v) {
    case ConvexityVerdict::none: return "none";
    case ConvexityVerdict::convex: return "convex";
    case ConvexityVerdict::strictly_convex: return "strictly-convex";
  }
  return "none";
}

namespace {

ConeCertificate local_witness(const MarkedFan& f, const Divisor& d, const Cone& tau) {
  const std::size_t n = f.ambient_dim();
  std::vector<RatVector> eq_rows;
  RatVector eq_rhs;
  for (auto r : tau) {
    eq_rows.push_back(f.ray(r));
    eq_rhs.push_back(d.values[r]);
  }
  std::vector<RatVector> rows;
  RatVector rhs;
  for (auto r : f.neighborhood_rays(tau)) {
    rows.push_back(f.ray(r));
    rhs.push_back(d.values[r]);
  }
  MaxSlackResult res = max_slack(RatMatrix::from_rows(eq_rows, n), eq_rhs, RatMatrix::from_rows(rows, n), rhs);
  if (!res.feasible) throw PreconditionError("cone {" + cone_key(tau) + "} is not simplicial");
  return ConeCertificate{tau, res.slack, res.x};
}

}  // namespace

ConvexityCertificate classify_convexity(const MarkedFan& f, const Divisor& d, bool strict) {
  if (d.values.size() != f.num_rays()) throw InputError("divisor length does not match the number of rays");
  ConvexityCertificate cert;
  bool all_strict = true;
  // Maximal cones have no neighbors beyond themselves and always pass.
  for (std::size_t k = 0; k <= f.dim(); ++k)
    for (const auto& tau : f.cones(k)) {
      ConeCertificate c = local_witness(f, d, tau);
      int s = sgn(c.slack);
      cert.cones.push_back(std::move(c));
      if (s < 0) {
        cert.verdict = ConvexityVerdict::none;
        cert.failing_cone = tau;
        return cert;
      }
      if (s == 0 && all_strict) {
        all_strict = false;
        cert.failing_cone = tau;
      }
    }
  cert.verdict = (strict && all_strict) ? ConvexityVerdict::strictly_convex : ConvexityVerdict::convex;
  if (cert.verdict == ConvexityVerdict::strictly_convex) cert.failing_cone.reset();
  return cert;
}

bool verify_convexity_certificate(const MarkedFan& f, const Divisor& d, const ConvexityCertificate& cert) {
  if (cert.verdict == ConvexityVerdict::none) return cert.failing_cone.has_value();
  std::size_t expected = 0;
  for (std::size_t k = 0; k <= f.dim(); ++k) expected += f.cones(k).size();
  if (cert.cones.size() != expected) return false;
  const bool strict = cert.verdict == ConvexityVerdict::strictly_convex;
  for (const auto& c : cert.cones) {
    if (!f.has_cone(c.cone) || c.functional.size() != f.ambient_dim()) return false;
    if (strict ? sgn(c.slack) <= 0 : sgn(c.slack) < 0) return false;
    for (auto r : c.cone)
      if (dot(c.functional, f.ray(r)) != d.values[r]) return false;
    for (auto r : f.neighborhood_rays(c.cone)) {
      Rational gap = d.values[r] - dot(c.functional, f.ray(r));
      if (gap < c.slack) return false;
    }
  }
  return true;
}

std::optional<Divisor> find_strictly_convex(const MarkedFan& f) {
  const std::size_t nr = f.num_rays();
  const std::size_t n = f.ambient_dim();
  if (f.dim() == 0) return Divisor{RatVector(nr, Rational(0))};

  // Pin z to zero on rays whose marks form a basis of the span of all marks.
  std::vector<bool> pinned(nr, false);
  {
    std::vector<RatVector> chosen;
    for (std::size_t r = 0; r < nr; ++r) {
      chosen.push_back(f.ray(r));
      if (rank(RatMatrix::from_rows(chosen, n)) == chosen.size()) pinned[r] = true;
      else chosen.pop_back();
    }
  }
  std::vector<std::size_t> zcol(nr, static_cast<std::size_t>(-1));
  std::size_t cols = 0;
  for (std::size_t r = 0; r < nr; ++r)
    if (!pinned[r]) zcol[r] = cols++;

  struct Block {
    Cone tau;
    Cone nbr;
    std::vector<RatVector> coupling;  // per neighbor: psi_tau(u_eta) as a combination of z on tau
    std::vector<RatVector> projected;  // per neighbor: image in V / V_tau
    std::size_t offset;
    std::size_t width;
  };
  std::vector<Block> blocks;
  for (std::size_t k = 0; k < f.dim(); ++k)
    for (const auto& tau : f.cones(k)) {
      Star s = star(f, tau);
      Block b{tau, s.ray_lift, {}, {}, cols, s.projection.rows()};
      cols += b.width;
      // Pivot columns of tau's marks.
      std::vector<RatVector> rows;
      for (auto r : tau) rows.push_back(f.ray(r));
      RowEchelon e = rref(RatMatrix::from_rows(rows, n));
      RatMatrix ap(tau.size(), tau.size());
      for (std::size_t i = 0; i < tau.size(); ++i)
        for (std::size_t j = 0; j < tau.size(); ++j) ap(i, j) = f.ray(tau[i])[e.pivots[j]];
      RatMatrix apt = ap.transpose();
      for (auto eta : b.nbr) {
        RatVector up(tau.size());
        for (std::size_t j = 0; j < tau.size(); ++j) up[j] = f.ray(eta)[e.pivots[j]];
        auto m = solve_linear(apt, up);
        if (!m) throw PreconditionError("cone {" + cone_key(tau) + "} is not simplicial");
        b.coupling.push_back(*m);
        b.projected.push_back(s.projection.apply(f.ray(eta)));
      }
      blocks.push_back(std::move(b));
    }

  // Rows: -z_eta + psi_tau(z)(u_eta) + chi_tau(proj u_eta) + t <= 0.
  std::vector<RatVector> rows;
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < b.nbr.size(); ++i) {
      RatVector row(cols, Rational(0));
      if (!pinned[b.nbr[i]]) row[zcol[b.nbr[i]]] -= 1;
      for (std::size_t j = 0; j < b.tau.size(); ++j)
        if (!pinned[b.tau[j]]) row[zcol[b.tau[j]]] += b.coupling[i][j];
      for (std::size_t j = 0; j < b.width; ++j) row[b.offset + j] = b.projected[i][j];
      rows.push_back(std::move(row));
    }
  RatVector rhs(rows.size(), Rational(0));
  auto sol = strict_feasible(RatMatrix(0, cols), RatVector{}, RatMatrix::from_rows(rows, cols), rhs);
  if (!sol) return std::nullopt;
  Divisor z{RatVector(nr, Rational(0))};
  for (std::size_t r = 0; r < nr; ++r)
    if (!pinned[r]) z.values[r] = (*sol)[zcol[r]];
  if (classify_convexity(f, z).verdict != ConvexityVerdict::strictly_convex)
    throw InvariantError("joint convexity program returned an uncertified divisor");
  return z;
}

std::optional<Divisor> subdivision_witness(const MarkedFan& fine, const Divisor& pulled, std::size_t new_ray) {
  Divisor ind = indicator_divisor(fine, new_ray);
  Rational eps = 1;
  for (int i = 0; i < 64; ++i, eps /= 2) {
    Divisor cand = pulled - eps * ind;
    if (classify_convexity(fine, cand).verdict == ConvexityVerdict::strictly_convex) return cand;
  }
  return std::nullopt;
}

Divisor sample_convex_divisor(const MarkedFan& f, const Divisor& witness, SeededRng& rng) {
  Divisor base = rng.uniform_rational(1, 3, 4) * witness;
  RatVector pert(f.num_rays(), Rational(0));
  for (auto& p : pert)
    if (rng.uniform_int(0, 2) == 0) p = rng.uniform_rational(0, 2, 3);
  RatVector functional(f.ambient_dim());
  for (auto& x : functional) x = rng.uniform_rational(-2, 2, 2);
  Divisor lin = linear_divisor(f, functional);
  Divisor p{pert};
  for (int i = 0; i < 40; ++i) {
    Divisor cand = base + p + lin;
    if (classify_convexity(f, cand).verdict == ConvexityVerdict::strictly_convex) return cand;
    p = Rational(1, 2) * p;
  }
  return base + lin;
}

}  // namespace tropfan
