#include "tropfan/fan_ops.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tropfan/convexity.hpp"
#include "tropfan/errors.hpp"

namespace tropfan {

TropicalFan product_tropical(const TropicalFan& a, const TropicalFan& b) {
  MarkedFan f = product_fan(a.fan, b.fan);
  MinkowskiWeight w{f.dim(), {}};
  for (const auto& s1 : a.fan.maximal_cones())
    for (const auto& s2 : b.fan.maximal_cones()) {
      Cone c = s1;
      for (auto r : s2) c.push_back(r + a.fan.num_rays());
      w.values[c] = a.weight.at(s1) * b.weight.at(s2);
    }
  return make_tropical_fan(std::move(f), std::move(w));
}

namespace {

void require_strictly_convex(const MarkedFan& f, const Divisor& d) {
  ConvexityCertificate c = classify_convexity(f, d);
  if (c.verdict != ConvexityVerdict::strictly_convex)
    throw PreconditionError("divisor is not strictly convex: fails at cone {" + cone_key(*c.failing_cone) + "}");
}

}  // namespace

TropicalFan act_divisor_fan(const TropicalFan& tf, const Divisor& d) {
  const MarkedFan& f = tf.fan;
  if (f.dim() == 0) throw PreconditionError("cannot act on a 0-dimensional fan");
  require_strictly_convex(f, d);
  MinkowskiWeight acted = divisor_action(f, d, tf.weight);
  const auto& cones = f.cones(f.dim() - 1);
  Cone used;
  for (const auto& c : cones) used.insert(used.end(), c.begin(), c.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<std::size_t> relabel(f.num_rays(), 0);
  std::vector<RatVector> rays;
  for (std::size_t i = 0; i < used.size(); ++i) {
    relabel[used[i]] = i;
    rays.push_back(f.ray(used[i]));
  }
  std::vector<Cone> out_cones;
  MinkowskiWeight w{f.dim() - 1, {}};
  for (const auto& c : cones) {
    Cone r;
    for (auto x : c) r.push_back(relabel[x]);
    const Rational& v = acted.at(c);
    if (sgn(v) <= 0) throw InvariantError("strictly convex action produced a nonpositive weight");
    w.values[r] = v;
    out_cones.push_back(std::move(r));
  }
  return make_tropical_fan(MarkedFan(f.ambient_dim(), std::move(rays), std::move(out_cones)), std::move(w));
}

Modification tropical_modification(const TropicalFan& tf, const Divisor& d) {
  const MarkedFan& f = tf.fan;
  if (f.dim() == 0) throw PreconditionError("cannot modify a 0-dimensional fan");
  require_strictly_convex(f, d);
  MinkowskiWeight acted = divisor_action(f, d, tf.weight);
  const std::size_t n = f.ambient_dim();
  std::vector<RatVector> rays;
  for (std::size_t i = 0; i < f.num_rays(); ++i) {
    RatVector u = f.ray(i);
    u.push_back(d.values[i]);
    rays.push_back(std::move(u));
  }
  const std::size_t down = f.num_rays();
  RatVector dn = zero_vector(n + 1);
  dn[n] = -1;
  rays.push_back(std::move(dn));
  std::vector<Cone> cones;
  MinkowskiWeight w{f.dim(), {}};
  for (const auto& s : f.maximal_cones()) {
    cones.push_back(s);
    w.values[s] = tf.weight.at(s);
  }
  for (const auto& t : f.cones(f.dim() - 1)) {
    Cone c = t;
    c.push_back(down);
    w.values[c] = acted.at(t);
    cones.push_back(std::move(c));
  }
  return Modification{make_tropical_fan(MarkedFan(n + 1, std::move(rays), std::move(cones)), std::move(w)), down};
}

bool is_complete(const MarkedFan& f) {
  const std::size_t d = f.dim();
  if (d != f.ambient_dim() || d == 0) return false;
  for (const auto& c : f.maximal_cones())
    if (c.size() != d || rank(f.ray_matrix(c)) != d) return false;
  const auto& mc = f.maximal_cones();
  std::vector<std::size_t> parent(mc.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& tau : f.cones(d - 1)) {
    auto around = f.maximal_containing(tau);
    if (around.size() != 2) return false;
    // Normal of the wall: kernel of tau's marks.
    std::vector<RatVector> rows;
    for (auto r : tau) rows.push_back(f.ray(r));
    auto normal = nullspace(RatMatrix::from_rows(rows, d));
    if (normal.size() != 1) return false;
    std::size_t a = cone_difference(mc[around[0]], tau).front();
    std::size_t b = cone_difference(mc[around[1]], tau).front();
    if (sgn(dot(normal[0], f.ray(a))) * sgn(dot(normal[0], f.ray(b))) >= 0) return false;
    parent[find(around[0])] = find(around[1]);
  }
  for (std::size_t i = 0; i < mc.size(); ++i)
    if (find(i) != find(0)) return false;
  return true;
}

MinkowskiWeight volume_weight(const MarkedFan& f) {
  MinkowskiWeight w{f.dim(), {}};
  for (const auto& c : f.maximal_cones()) {
    RatMatrix m = f.ray_matrix(c);
    if (m.rows() != m.cols()) throw PreconditionError("volume weight needs full-dimensional cones");
    Rational det = abs(determinant(m));
    if (sgn(det) == 0) throw PreconditionError("cone {" + cone_key(c) + "} is degenerate");
    w.values[c] = 1 / det;
  }
  return w;
}

PolytopeBridge polytope_bridge(const MarkedFan& f, const std::vector<RatVector>& rhs) {
  if (!is_complete(f)) throw PreconditionError("polytope bridge needs a complete simplicial fan");
  const std::size_t n = f.ambient_dim();
  if (rhs.size() != n)
    throw InputError("expected " + std::to_string(n) + " polytopes, got " + std::to_string(rhs.size()));
  TropicalFan tf = make_tropical_fan(f, volume_weight(f));
  std::vector<Divisor> ds;
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    if (rhs[i].size() != f.num_rays()) throw InputError("polytope " + std::to_string(i) + " needs one value per ray");
    Divisor dp{rhs[i]};
    ConvexityCertificate c = classify_convexity(f, dp, false);
    if (c.verdict == ConvexityVerdict::none)
      throw PreconditionError("polytope " + std::to_string(i) + " is not compatible with the fan at cone {" +
                              cone_key(*c.failing_cone) + "}");
    ds.push_back(std::move(dp));
  }
  PolytopeBridge out;
  out.normalization = 1;
  for (std::size_t k = 2; k <= n; ++k) out.normalization *= static_cast<unsigned long>(k);
  out.mixed_degree = mixed_degree(tf, ds);
  out.mixed_volume = out.mixed_degree / out.normalization;
  return out;
}

}  // namespace tropfan
