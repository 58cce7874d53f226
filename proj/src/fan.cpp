#include "tropfan/fan.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tropfan/errors.hpp"
#include "tropfan/lp.hpp"

namespace tropfan {

std::string cone_key(const Cone& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s;
}

Cone parse_cone_key(std::string_view key) {
  Cone c;
  if (key.empty()) return c;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = key.find(',', start);
    std::string_view part = key.substr(start, comma == std::string_view::npos ? key.size() - start : comma - start);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string_view::npos)
      throw InputError("malformed cone key '" + std::string(key) + "'");
    c.push_back(std::stoul(std::string(part)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  std::sort(c.begin(), c.end());
  if (std::adjacent_find(c.begin(), c.end()) != c.end())
    throw InputError("repeated ray in cone key '" + std::string(key) + "'");
  return c;
}

bool is_face(const Cone& small, const Cone& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Cone cone_union(const Cone& a, const Cone& b) {
  Cone out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Cone cone_difference(const Cone& a, const Cone& b) {
  Cone out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

MarkedFan::MarkedFan(std::size_t ambient_dim, std::vector<RatVector> rays, std::vector<Cone> maximal_cones)
    : ambient_dim_(ambient_dim), rays_(std::move(rays)), maximal_(std::move(maximal_cones)) {
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (rays_[i].size() != ambient_dim_)
      throw InputError("ray " + std::to_string(i) + " has " + std::to_string(rays_[i].size()) +
                       " coordinates, expected " + std::to_string(ambient_dim_));
  if (maximal_.empty()) throw InputError("fan has no maximal cones");
  for (auto& c : maximal_) {
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) throw InputError("repeated ray in cone {" + cone_key(c) + "}");
    for (auto i : c)
      if (i >= rays_.size()) throw InputError("cone {" + cone_key(c) + "} references missing ray " + std::to_string(i));
    dim_ = std::max(dim_, c.size());
  }
  std::sort(maximal_.begin(), maximal_.end());
  if (std::adjacent_find(maximal_.begin(), maximal_.end()) != maximal_.end())
    throw InputError("duplicate maximal cone");

  std::vector<std::set<Cone>> faces(dim_ + 1);
  for (const auto& c : maximal_) {
    const std::size_t k = c.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      Cone sub;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (std::size_t{1} << i)) sub.push_back(c[i]);
      faces[sub.size()].insert(std::move(sub));
    }
  }
  by_dim_.resize(dim_ + 1);
  for (std::size_t k = 0; k <= dim_; ++k) by_dim_[k].assign(faces[k].begin(), faces[k].end());
}

const std::vector<Cone>& MarkedFan::cones(std::size_t k) const {
  if (k > dim_) throw InputError("no cones of dimension " + std::to_string(k) + " in a fan of dimension " + std::to_string(dim_));
  return by_dim_[k];
}

bool MarkedFan::has_cone(const Cone& c) const {
  if (c.size() > dim_) return false;
  return std::binary_search(by_dim_[c.size()].begin(), by_dim_[c.size()].end(), c);
}

std::optional<std::size_t> MarkedFan::maximal_index(const Cone& c) const {
  auto it = std::lower_bound(maximal_.begin(), maximal_.end(), c);
  if (it == maximal_.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - maximal_.begin());
}

std::vector<std::size_t> MarkedFan::maximal_containing(const Cone& tau) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < maximal_.size(); ++i)
    if (is_face(tau, maximal_[i])) out.push_back(i);
  return out;
}

Cone MarkedFan::neighborhood_rays(const Cone& tau) const {
  std::set<std::size_t> s;
  for (auto i : maximal_containing(tau))
    for (auto r : maximal_[i]) s.insert(r);
  for (auto r : tau) s.erase(r);
  return Cone(s.begin(), s.end());
}

RatMatrix MarkedFan::ray_matrix(const Cone& c) const {
  std::vector<RatVector> cols;
  for (auto i : c) cols.push_back(rays_.at(i));
  return RatMatrix::from_columns(cols, ambient_dim_);
}

bool operator==(const MarkedFan& a, const MarkedFan& b) {
  return a.ambient_dim_ == b.ambient_dim_ && a.rays_ == b.rays_ && a.maximal_ == b.maximal_;
}

namespace {

// True when the two simplicial cones meet exactly in the cone on their shared rays.
bool meets_in_common_face(const MarkedFan& f, const Cone& a, const Cone& b) {
  const Cone shared = [&] {
    Cone s;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(s));
    return s;
  }();
  const std::size_t n = f.ambient_dim();
  LinearProgram lp;
  lp.num_vars = a.size() + b.size();
  lp.nonneg.assign(lp.num_vars, true);
  lp.objective.assign(lp.num_vars, Rational(0));
  for (std::size_t k = 0; k < n; ++k) {
    LinearConstraint c{RatVector(lp.num_vars), Relation::eq, Rational(0)};
    for (std::size_t i = 0; i < a.size(); ++i) c.coeffs[i] = f.ray(a[i])[k];
    for (std::size_t j = 0; j < b.size(); ++j) c.coeffs[a.size() + j] = -f.ray(b[j])[k];
    lp.constraints.push_back(std::move(c));
  }
  LinearConstraint mass{RatVector(lp.num_vars, Rational(0)), Relation::eq, Rational(1)};
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!std::binary_search(shared.begin(), shared.end(), a[i])) mass.coeffs[i] = 1;
  for (std::size_t j = 0; j < b.size(); ++j)
    if (!std::binary_search(shared.begin(), shared.end(), b[j])) mass.coeffs[a.size() + j] = 1;
  lp.constraints.push_back(std::move(mass));
  return maximize(lp).status == LpStatus::infeasible;
}

}  // namespace

ValidationReport validate(const MarkedFan& f, bool check_fan_condition) {
  ValidationReport rep;
  for (std::size_t i = 0; i < f.num_rays(); ++i)
    if (is_zero(f.ray(i))) {
      rep.simplicial = false;
      rep.failures.push_back("ray " + std::to_string(i) + " has a zero mark");
    }
  for (const auto& c : f.maximal_cones()) {
    if (c.size() != f.dim()) {
      rep.pure = false;
      rep.failures.push_back("cone {" + cone_key(c) + "} has dimension " + std::to_string(c.size()) +
                             ", fan dimension is " + std::to_string(f.dim()));
    }
    if (rank(f.ray_matrix(c)) != c.size()) {
      rep.simplicial = false;
      rep.failures.push_back("cone {" + cone_key(c) + "} is not simplicial: marks are linearly dependent");
    }
  }
  std::vector<bool> used(f.num_rays(), false);
  for (const auto& c : f.maximal_cones())
    for (auto r : c) used[r] = true;
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) {
      rep.rays_used = false;
      rep.failures.push_back("ray " + std::to_string(i) + " lies in no maximal cone");
    }
  if (check_fan_condition && rep.simplicial) {
    rep.fan_condition_checked = true;
    const auto& mc = f.maximal_cones();
    for (std::size_t i = 0; i < mc.size(); ++i)
      for (std::size_t j = i + 1; j < mc.size(); ++j)
        if (!meets_in_common_face(f, mc[i], mc[j])) {
          rep.fan_condition = false;
          rep.failures.push_back("cones {" + cone_key(mc[i]) + "} and {" + cone_key(mc[j]) +
                                 "} overlap beyond their common face");
        }
  }
  return rep;
}

const std::vector<Cone>& enumerate_cones(const MarkedFan& f, std::size_t k) { return f.cones(k); }

std::optional<Location> locate(const MarkedFan& f, const RatVector& v) {
  if (v.size() != f.ambient_dim()) throw InputError("point has wrong dimension");
  const auto& mc = f.maximal_cones();
  for (std::size_t i = 0; i < mc.size(); ++i) {
    auto sol = solve_linear(f.ray_matrix(mc[i]), v);
    if (!sol) continue;
    bool nonneg = std::all_of(sol->begin(), sol->end(), [](const Rational& x) { return sgn(x) >= 0; });
    if (!nonneg) continue;
    Location loc{i, *sol, {}};
    for (std::size_t k = 0; k < mc[i].size(); ++k)
      if (sgn((*sol)[k]) > 0) loc.support.push_back(mc[i][k]);
    return loc;
  }
  return std::nullopt;
}

RatVector matching_functional(const MarkedFan& f, const Cone& tau, const RatVector& values) {
  if (values.size() != tau.size()) throw InputError("matching_functional: value count mismatch");
  std::vector<RatVector> rows;
  for (auto r : tau) rows.push_back(f.ray(r));
  auto psi = solve_linear(RatMatrix::from_rows(rows, f.ambient_dim()), values);
  if (!psi) throw PreconditionError("cone {" + cone_key(tau) + "} is not simplicial");
  return *psi;
}

Cone Star::lift(const Cone& star_cone) const {
  Cone c = apex;
  for (auto i : star_cone) c.push_back(ray_lift.at(i));
  std::sort(c.begin(), c.end());
  return c;
}

Star star(const MarkedFan& f, const Cone& tau) {
  if (!f.has_cone(tau)) throw InputError("cone {" + cone_key(tau) + "} is not in the fan");
  const std::size_t n = f.ambient_dim();
  std::vector<RatVector> rows;
  for (auto r : tau) rows.push_back(f.ray(r));
  RowEchelon e = rref(RatMatrix::from_rows(rows, n));
  if (e.pivots.size() != tau.size()) throw PreconditionError("cone {" + cone_key(tau) + "} is not simplicial");
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_coords;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free_coords.push_back(j);

  RatMatrix proj(free_coords.size(), n);
  for (std::size_t a = 0; a < free_coords.size(); ++a) {
    proj(a, free_coords[a]) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) proj(a, e.pivots[i]) -= e.reduced(i, free_coords[a]);
  }

  std::vector<std::size_t> parents = f.maximal_containing(tau);
  Cone nbr = f.neighborhood_rays(tau);
  std::vector<RatVector> marks;
  for (auto r : nbr) marks.push_back(proj.apply(f.ray(r)));
  auto local = [&](std::size_t parent_ray) {
    return static_cast<std::size_t>(std::lower_bound(nbr.begin(), nbr.end(), parent_ray) - nbr.begin());
  };
  std::vector<Cone> cones;
  for (auto p : parents) {
    Cone c;
    for (auto r : cone_difference(f.maximal_cones()[p], tau)) c.push_back(local(r));
    cones.push_back(std::move(c));
  }
  MarkedFan sf(free_coords.size(), std::move(marks), cones);
  std::vector<std::size_t> cone_lift(sf.maximal_cones().size());
  for (std::size_t i = 0; i < cones.size(); ++i) {
    Cone sorted = cones[i];
    std::sort(sorted.begin(), sorted.end());
    cone_lift[*sf.maximal_index(sorted)] = parents[i];
  }
  return Star{std::move(sf), tau, nbr, std::move(cone_lift), std::move(proj)};
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

UnpinchedReport is_unpinched(const MarkedFan& f) {
  UnpinchedReport rep;
  if (f.dim() < 2) return rep;
  for (std::size_t k = 0; k + 2 <= f.dim(); ++k) {
    for (const auto& tau : f.cones(k)) {
      std::vector<std::size_t> around = f.maximal_containing(tau);
      DisjointSets ds(around.size());
      // Two maximal cones are joined when they share a ray outside tau.
      std::vector<std::size_t> first_with_ray(f.num_rays(), static_cast<std::size_t>(-1));
      for (std::size_t i = 0; i < around.size(); ++i)
        for (auto r : cone_difference(f.maximal_cones()[around[i]], tau)) {
          if (first_with_ray[r] == static_cast<std::size_t>(-1)) first_with_ray[r] = i;
          else ds.join(i, first_with_ray[r]);
        }
      std::set<std::size_t> roots;
      for (std::size_t i = 0; i < around.size(); ++i) roots.insert(ds.find(i));
      if (roots.size() > 1) {
        rep.unpinched = false;
        rep.pinches.push_back(tau);
      }
    }
  }
  return rep;
}

StellarResult stellar_subdivide(const MarkedFan& f, const RatVector& v) {
  if (v.size() != f.ambient_dim()) throw InputError("subdivision point has wrong dimension");
  if (is_zero(v)) throw PreconditionError("cannot subdivide at the origin");
  auto loc = locate(f, v);
  if (!loc) throw PreconditionError("subdivision point lies outside the support");
  const Cone& pi = loc->support;
  if (pi.size() == 1) {
    std::vector<std::size_t> ident(f.maximal_cones().size());
    std::iota(ident.begin(), ident.end(), 0);
    return StellarResult{f, std::nullopt, pi, std::move(ident)};
  }
  const std::size_t nr = f.num_rays();
  std::vector<RatVector> marks = f.rays();
  marks.push_back(v);
  std::vector<Cone> cones;
  std::vector<std::size_t> origin;
  const auto& mc = f.maximal_cones();
  for (std::size_t s = 0; s < mc.size(); ++s) {
    if (!is_face(pi, mc[s])) {
      cones.push_back(mc[s]);
      origin.push_back(s);
      continue;
    }
    for (auto rho : pi) {
      Cone c = cone_difference(mc[s], Cone{rho});
      c.push_back(nr);
      cones.push_back(std::move(c));
      origin.push_back(s);
    }
  }
  MarkedFan fine(f.ambient_dim(), std::move(marks), cones);
  std::vector<std::size_t> containment(fine.maximal_cones().size());
  for (std::size_t i = 0; i < cones.size(); ++i) containment[*fine.maximal_index(cones[i])] = origin[i];
  return StellarResult{std::move(fine), nr, pi, std::move(containment)};
}

MarkedFan product_fan(const MarkedFan& a, const MarkedFan& b) {
  const std::size_t n1 = a.ambient_dim();
  const std::size_t n2 = b.ambient_dim();
  std::vector<RatVector> rays;
  for (const auto& u : a.rays()) {
    RatVector w = u;
    w.resize(n1 + n2, Rational(0));
    rays.push_back(std::move(w));
  }
  for (const auto& u : b.rays()) {
    RatVector w(n1, Rational(0));
    w.insert(w.end(), u.begin(), u.end());
    rays.push_back(std::move(w));
  }
  std::vector<Cone> cones;
  for (const auto& s1 : a.maximal_cones())
    for (const auto& s2 : b.maximal_cones()) {
      Cone c = s1;
      for (auto r : s2) c.push_back(r + a.num_rays());
      cones.push_back(std::move(c));
    }
  return MarkedFan(n1 + n2, std::move(rays), std::move(cones));
}

}  // namespace tropfan
