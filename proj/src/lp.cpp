#include "tropfan/lp.hpp"

#include <algorithm>
#include <utility>

#include "tropfan/errors.hpp"

namespace tropfan {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct Tableau {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<Rational> a;
  RatVector rhs;
  std::vector<std::size_t> basis;
  std::vector<bool> free_col;
  std::vector<bool> allowed;
  std::vector<bool> is_basic;
  RatVector d;  // reduced costs of the maximized objective
  Rational value;

  Tableau(std::size_t rows, std::size_t cols)
      : m(rows), n(cols), a(rows * cols, Rational(0)), rhs(rows, Rational(0)), basis(rows, kNone),
        free_col(cols, false), allowed(cols, true), is_basic(cols, false), d(cols, Rational(0)) {}

  Rational& at(std::size_t i, std::size_t j) { return a[i * n + j]; }

  void set_basis(std::size_t r, std::size_t c) {
    basis[r] = c;
    is_basic[c] = true;
  }

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / at(r, c);
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(at(r, j)) != 0) at(r, j) *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || sgn(at(i, c)) == 0) continue;
      Rational f = at(i, c);
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(at(r, j)) != 0) at(i, j) -= f * at(r, j);
      rhs[i] -= f * rhs[r];
    }
    if (sgn(d[c]) != 0) {
      Rational f = d[c];
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(at(r, j)) != 0) d[j] -= f * at(r, j);
      value += f * rhs[r];
    }
    is_basic[basis[r]] = false;
    set_basis(r, c);
  }

  void set_objective(const RatVector& c) {
    d = c;
    value = 0;
    for (std::size_t r = 0; r < m; ++r) {
      const Rational& cb = c[basis[r]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) d[j] -= cb * at(r, j);
      value += cb * rhs[r];
    }
  }

  // Bland's rule. Free basic variables never leave. Returns false if unbounded.
  bool optimize() {
    for (;;) {
      std::size_t enter = kNone;
      int dir = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (is_basic[j] || !allowed[j]) continue;
        int s = sgn(d[j]);
        if (s > 0 || (s < 0 && free_col[j])) {
          enter = j;
          dir = s;
          break;
        }
      }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t r = 0; r < m; ++r) {
        if (free_col[basis[r]]) continue;
        Rational alpha = at(r, enter);
        if (dir < 0) alpha = -alpha;
        if (sgn(alpha) <= 0) continue;
        Rational ratio = rhs[r] / alpha;
        if (leave == kNone || ratio < best || (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }

  void drop_row(std::size_t r) {
    is_basic[basis[r]] = false;
    a.erase(a.begin() + static_cast<std::ptrdiff_t>(r * n), a.begin() + static_cast<std::ptrdiff_t>((r + 1) * n));
    rhs.erase(rhs.begin() + static_cast<std::ptrdiff_t>(r));
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(r));
    --m;
  }

  RatVector values() const {
    RatVector x(n, Rational(0));
    for (std::size_t r = 0; r < m; ++r) x[basis[r]] = rhs[r];
    return x;
  }
};

}  // namespace

LpResult maximize(const LinearProgram& lp) {
  const std::size_t nv = lp.num_vars;
  if (lp.nonneg.size() != nv || lp.objective.size() != nv) throw InputError("linear program arity mismatch");
  for (const auto& c : lp.constraints)
    if (c.coeffs.size() != nv) throw InputError("linear program constraint arity mismatch");

  // Column layout: split free variables, then slacks, then artificials.
  std::vector<std::size_t> pos_col(nv), neg_col(nv, kNone);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < nv; ++j) {
    pos_col[j] = cols++;
    if (!lp.nonneg[j]) neg_col[j] = cols++;
  }
  const std::size_t rows = lp.constraints.size();
  std::vector<std::size_t> slack_col(rows, kNone);
  for (std::size_t i = 0; i < rows; ++i)
    if (lp.constraints[i].rel != Relation::eq) slack_col[i] = cols++;
  const std::size_t first_art = cols;
  cols += rows;

  Tableau t(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& c = lp.constraints[i];
    for (std::size_t j = 0; j < nv; ++j) {
      t.at(i, pos_col[j]) = c.coeffs[j];
      if (neg_col[j] != kNone) t.at(i, neg_col[j]) = -c.coeffs[j];
    }
    if (c.rel == Relation::le) t.at(i, slack_col[i]) = 1;
    if (c.rel == Relation::ge) t.at(i, slack_col[i]) = -1;
    t.rhs[i] = c.rhs;
    if (sgn(t.rhs[i]) < 0) {
      for (std::size_t j = 0; j < first_art; ++j) t.at(i, j) = -t.at(i, j);
      t.rhs[i] = -t.rhs[i];
    }
    t.at(i, first_art + i) = 1;
    t.set_basis(i, first_art + i);
  }

  RatVector phase1(cols, Rational(0));
  for (std::size_t i = 0; i < rows; ++i) phase1[first_art + i] = -1;
  t.set_objective(phase1);
  if (!t.optimize()) throw InvariantError("phase one reported unbounded");
  LpResult result;
  if (sgn(t.value) < 0) {
    result.status = LpStatus::infeasible;
    return result;
  }
  for (std::size_t r = 0; r < t.m;) {
    if (t.basis[r] < first_art) {
      ++r;
      continue;
    }
    std::size_t c = kNone;
    for (std::size_t j = 0; j < first_art; ++j)
      if (!t.is_basic[j] && sgn(t.at(r, j)) != 0) {
        c = j;
        break;
      }
    if (c == kNone) {
      t.drop_row(r);
    } else {
      t.pivot(r, c);
      ++r;
    }
  }
  for (std::size_t j = first_art; j < cols; ++j) t.allowed[j] = false;

  RatVector obj(cols, Rational(0));
  for (std::size_t j = 0; j < nv; ++j) {
    obj[pos_col[j]] = lp.objective[j];
    if (neg_col[j] != kNone) obj[neg_col[j]] = -lp.objective[j];
  }
  t.set_objective(obj);
  if (!t.optimize()) {
    result.status = LpStatus::unbounded;
    return result;
  }
  RatVector v = t.values();
  result.status = LpStatus::optimal;
  result.x.assign(nv, Rational(0));
  for (std::size_t j = 0; j < nv; ++j) {
    result.x[j] = v[pos_col[j]];
    if (neg_col[j] != kNone) result.x[j] -= v[neg_col[j]];
  }
  result.value = t.value;
  return result;
}

MaxSlackResult max_slack(const RatMatrix& eq, const RatVector& eq_rhs, const RatMatrix& ineq,
                         const RatVector& ineq_rhs) {
  const std::size_t nv = eq.cols();
  if (ineq.cols() != nv) throw InputError("max_slack: column count mismatch");
  if (eq_rhs.size() != eq.rows() || ineq_rhs.size() != ineq.rows())
    throw InputError("max_slack: right-hand side length mismatch");

  MaxSlackResult out;
  auto x0 = solve_linear(eq, eq_rhs);
  if (!x0) return out;
  out.feasible = true;
  std::vector<RatVector> basis = nullspace(eq);
  const std::size_t m = basis.size();
  const std::size_t rows = ineq.rows();
  if (rows == 0) {
    out.slack = 1;
    out.x = *x0;
    return out;
  }

  // Columns: w (free), t (free), slacks for each row and the cap row.
  const std::size_t tcol = m;
  const std::size_t cols = m + 1 + rows + 1;
  Tableau t(rows + 1, cols);
  for (std::size_t j = 0; j <= m; ++j) t.free_col[j] = true;
  RatVector base = ineq.apply(*x0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < nv; ++k)
        if (sgn(basis[j][k]) != 0 && sgn(ineq(i, k)) != 0) s += ineq(i, k) * basis[j][k];
      t.at(i, j) = s;
    }
    t.at(i, tcol) = 1;
    t.at(i, m + 1 + i) = 1;
    t.rhs[i] = ineq_rhs[i] - base[i];
    t.set_basis(i, m + 1 + i);
  }
  t.at(rows, tcol) = 1;
  t.at(rows, m + 1 + rows) = 1;
  t.rhs[rows] = 1;
  t.set_basis(rows, m + 1 + rows);

  RatVector obj(cols, Rational(0));
  obj[tcol] = 1;
  t.set_objective(obj);

  std::size_t worst = 0;
  for (std::size_t i = 1; i < rows; ++i)
    if (t.rhs[i] < t.rhs[worst]) worst = i;
  if (sgn(t.rhs[worst]) < 0) t.pivot(worst, tcol);

  if (!t.optimize()) throw InvariantError("max_slack: capped problem reported unbounded");
  RatVector v = t.values();
  out.slack = v[tcol];
  out.x = *x0;
  for (std::size_t j = 0; j < m; ++j)
    if (sgn(v[j]) != 0) out.x = out.x + v[j] * basis[j];
  return out;
}

std::optional<RatVector> strict_feasible(const RatMatrix& eq, const RatVector& eq_rhs,
                                         const RatMatrix& strict, const RatVector& strict_rhs) {
  MaxSlackResult r = max_slack(eq, eq_rhs, strict, strict_rhs);
  if (!r.feasible || sgn(r.slack) <= 0) return std::nullopt;
  return r.x;
}

namespace {

std::optional<FarkasCertificate> certificate_attempt(const RatMatrix& eq, const RatVector& eq_rhs,
                                                     const RatMatrix& strict, const RatVector& strict_rhs,
                                                     bool normalize_strict) {
  const std::size_t s = strict.rows();
  const std::size_t e = eq.rows();
  const std::size_t n = strict.cols();
  LinearProgram lp;
  lp.num_vars = s + e;
  lp.nonneg.assign(s + e, false);
  for (std::size_t i = 0; i < s; ++i) lp.nonneg[i] = true;
  // value = y.b + z.f; we maximize -value, capped at 1.
  RatVector value(s + e);
  for (std::size_t i = 0; i < s; ++i) value[i] = strict_rhs[i];
  for (std::size_t j = 0; j < e; ++j) value[s + j] = eq_rhs[j];
  lp.objective = Rational(-1) * value;
  for (std::size_t k = 0; k < n; ++k) {
    LinearConstraint c{RatVector(s + e), Relation::eq, Rational(0)};
    for (std::size_t i = 0; i < s; ++i) c.coeffs[i] = strict(i, k);
    for (std::size_t j = 0; j < e; ++j) c.coeffs[s + j] = eq(j, k);
    lp.constraints.push_back(std::move(c));
  }
  LinearConstraint mass{RatVector(s + e, Rational(0)), normalize_strict ? Relation::eq : Relation::le, Rational(1)};
  for (std::size_t i = 0; i < s; ++i) mass.coeffs[i] = 1;
  lp.constraints.push_back(std::move(mass));
  lp.constraints.push_back({Rational(-1) * value, Relation::le, Rational(1)});

  LpResult r = maximize(lp);
  if (r.status != LpStatus::optimal) return std::nullopt;
  if (normalize_strict ? sgn(r.value) < 0 : sgn(r.value) <= 0) return std::nullopt;
  FarkasCertificate cert;
  cert.strict_multipliers.assign(r.x.begin(), r.x.begin() + static_cast<std::ptrdiff_t>(s));
  cert.eq_multipliers.assign(r.x.begin() + static_cast<std::ptrdiff_t>(s), r.x.end());
  return cert;
}

}  // namespace

std::optional<FarkasCertificate> infeasibility_certificate(const RatMatrix& eq, const RatVector& eq_rhs,
                                                           const RatMatrix& strict,
                                                           const RatVector& strict_rhs) {
  if (auto c = certificate_attempt(eq, eq_rhs, strict, strict_rhs, false)) return c;
  if (strict.rows() == 0) return std::nullopt;
  return certificate_attempt(eq, eq_rhs, strict, strict_rhs, true);
}

bool verify_infeasibility_certificate(const RatMatrix& eq, const RatVector& eq_rhs, const RatMatrix& strict,
                                      const RatVector& strict_rhs, const FarkasCertificate& cert) {
  if (cert.strict_multipliers.size() != strict.rows() || cert.eq_multipliers.size() != eq.rows()) return false;
  for (const auto& y : cert.strict_multipliers)
    if (sgn(y) < 0) return false;
  RatVector combo = strict.transpose().apply(cert.strict_multipliers) + eq.transpose().apply(cert.eq_multipliers);
  if (!is_zero(combo)) return false;
  Rational value = dot(cert.strict_multipliers, strict_rhs) + dot(cert.eq_multipliers, eq_rhs);
  if (sgn(value) < 0) return true;
  return sgn(value) == 0 && !is_zero(cert.strict_multipliers);
}

}  // namespace tropfan
