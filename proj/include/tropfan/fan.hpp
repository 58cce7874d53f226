#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tropfan/linalg.hpp"
#include "tropfan/rational.hpp"

namespace tropfan {

// Sorted ray indices. The empty cone is the origin.
using Cone = std::vector<std::size_t>;

std::string cone_key(const Cone& c);  // "0,2"; "" for the origin
Cone parse_cone_key(std::string_view key);
bool is_face(const Cone& small, const Cone& big);
Cone cone_union(const Cone& a, const Cone& b);
Cone cone_difference(const Cone& a, const Cone& b);

// Simplicial fan given by marked rays and maximal cones. Cones are stored
// sorted; maximal cones are kept in lexicographic order.
class MarkedFan {
 public:
  MarkedFan(std::size_t ambient_dim, std::vector<RatVector> rays, std::vector<Cone> maximal_cones);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return dim_; }
  std::size_t num_rays() const { return rays_.size(); }
  const RatVector& ray(std::size_t i) const { return rays_.at(i); }
  const std::vector<RatVector>& rays() const { return rays_; }
  const std::vector<Cone>& maximal_cones() const { return maximal_; }

  // All cones with k rays (faces of maximal cones), sorted.
  const std::vector<Cone>& cones(std::size_t k) const;
  bool has_cone(const Cone& c) const;
  std::optional<std::size_t> maximal_index(const Cone& c) const;
  std::vector<std::size_t> maximal_containing(const Cone& tau) const;
  // Rays of cones containing tau, minus the rays of tau.
  Cone neighborhood_rays(const Cone& tau) const;
  // Columns are the marks of the cone's rays.
  RatMatrix ray_matrix(const Cone& c) const;

  friend bool operator==(const MarkedFan&, const MarkedFan&);

 private:
  std::size_t ambient_dim_;
  std::size_t dim_ = 0;
  std::vector<RatVector> rays_;
  std::vector<Cone> maximal_;
  std::vector<std::vector<Cone>> by_dim_;
};

struct ValidationReport {
  bool simplicial = true;
  bool pure = true;
  bool rays_used = true;
  bool fan_condition_checked = false;
  bool fan_condition = true;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

ValidationReport validate(const MarkedFan& f, bool check_fan_condition = true);

const std::vector<Cone>& enumerate_cones(const MarkedFan& f, std::size_t k);

// Maximal cone containing v together with the coordinates of v in its marks.
struct Location {
  std::size_t maximal_index;
  RatVector coords;
  Cone support;  // rays with positive coordinate
};
std::optional<Location> locate(const MarkedFan& f, const RatVector& v);

// Functional psi with psi(u_rho) = values[i] for the i-th ray of tau,
// vanishing on the non-pivot coordinates of tau's marks.
RatVector matching_functional(const MarkedFan& f, const Cone& tau, const RatVector& values);

struct Star {
  MarkedFan fan;
  Cone apex;
  std::vector<std::size_t> ray_lift;   // star ray -> parent ray
  std::vector<std::size_t> cone_lift;  // star maximal cone -> parent maximal cone
  RatMatrix projection;                // V -> V / V_tau in non-pivot coordinates

  Cone lift(const Cone& star_cone) const;
};

Star star(const MarkedFan& f, const Cone& tau);

struct UnpinchedReport {
  bool unpinched = true;
  std::vector<Cone> pinches;
};

UnpinchedReport is_unpinched(const MarkedFan& f);

struct StellarResult {
  MarkedFan fan;
  std::optional<std::size_t> new_ray;  // empty when v lies on an existing ray
  Cone support;                        // cone whose relative interior holds v
  std::vector<std::size_t> containment;  // fine maximal cone -> coarse maximal cone
};

StellarResult stellar_subdivide(const MarkedFan& f, const RatVector& v);

MarkedFan product_fan(const MarkedFan& a, const MarkedFan& b);

}  // namespace tropfan
