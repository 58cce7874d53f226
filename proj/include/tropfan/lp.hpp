#pragma once

#include <optional>
#include <vector>

#include "tropfan/linalg.hpp"
#include "tropfan/rational.hpp"

namespace tropfan {

enum class Relation { le, eq, ge };

struct LinearConstraint {
  RatVector coeffs;
  Relation rel = Relation::le;
  Rational rhs;
};

struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<bool> nonneg;  // per variable; false means free
  std::vector<LinearConstraint> constraints;
  RatVector objective;  // maximized
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  RatVector x;
  Rational value;
};

// Exact two-phase tableau simplex, Bland's rule.
LpResult maximize(const LinearProgram& lp);

struct MaxSlackResult {
  bool feasible = false;  // equalities consistent
  Rational slack;         // optimal t, capped at 1
  RatVector x;
};

// maximize t  s.t.  eq x = eq_rhs,  ineq x + t <= ineq_rhs,  t <= 1,  x free.
MaxSlackResult max_slack(const RatMatrix& eq, const RatVector& eq_rhs, const RatMatrix& ineq,
                         const RatVector& ineq_rhs);

// A point with eq x = eq_rhs and strict x < strict_rhs, or nullopt.
std::optional<RatVector> strict_feasible(const RatMatrix& eq, const RatVector& eq_rhs,
                                         const RatMatrix& strict, const RatVector& strict_rhs);

// Multipliers y >= 0 (strict rows) and z (equality rows) with
// y.strict + z.eq = 0 and either y.b + z.f < 0, or y != 0 and y.b + z.f <= 0.
struct FarkasCertificate {
  RatVector strict_multipliers;
  RatVector eq_multipliers;
};

std::optional<FarkasCertificate> infeasibility_certificate(const RatMatrix& eq, const RatVector& eq_rhs,
                                                           const RatMatrix& strict,
                                                           const RatVector& strict_rhs);

bool verify_infeasibility_certificate(const RatMatrix& eq, const RatVector& eq_rhs, const RatMatrix& strict,
                                      const RatVector& strict_rhs, const FarkasCertificate& cert);

}  // namespace tropfan
