#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tropfan/linalg.hpp"
#include "tropfan/rational.hpp"

namespace tropfan {

// Sorted multiset of variable indices; {0,0,2} is z0^2 z2.
using Monomial = std::vector<std::size_t>;

class Polynomial {
 public:
  explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static Polynomial variable(std::size_t num_vars, std::size_t i);
  static Polynomial constant(std::size_t num_vars, const Rational& c);
  // Linear form sum_i coeffs[i] z_i.
  static Polynomial linear(const RatVector& coeffs);

  std::size_t num_vars() const { return num_vars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  void add_term(Monomial m, const Rational& c);
  Rational coefficient(const Monomial& m) const;

  Rational evaluate(const RatVector& z) const;
  // Symmetric Q with p(z) = z^T Q z; requires p homogeneous of degree 2.
  RatMatrix quadratic_form() const;
  // Reindex variables: variable i becomes map[i] in a ring with n variables.
  Polynomial embed(std::size_t n, const std::vector<std::size_t>& map) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t num_vars_;
  std::map<Monomial, Rational> terms_;  // no zero coefficients
};

std::string to_string(const Polynomial& p);

}  // namespace tropfan
