#include "tropfan/polynomial.hpp"

#include <algorithm>

#include "tropfan/errors.hpp"

namespace tropfan {

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t i) {
  Polynomial p(num_vars);
  p.add_term({i}, 1);
  return p;
}

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term({}, c);
  return p;
}

Polynomial Polynomial::linear(const RatVector& coeffs) {
  Polynomial p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term({i}, coeffs[i]);
  return p;
}

void Polynomial::add_term(Monomial m, const Rational& c) {
  if (sgn(c) == 0) return;
  std::sort(m.begin(), m.end());
  for (auto v : m)
    if (v >= num_vars_) throw InputError("monomial references a missing variable");
  auto [it, inserted] = terms_.emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::evaluate(const RatVector& z) const {
  if (z.size() != num_vars_) throw InputError("evaluation point has wrong length");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (auto v : m) t *= z[v];
    total += t;
  }
  return total;
}

RatMatrix Polynomial::quadratic_form() const {
  RatMatrix q(num_vars_, num_vars_);
  for (const auto& [m, c] : terms_) {
    if (m.size() != 2) throw InputError("quadratic_form: polynomial is not a quadratic form");
    if (m[0] == m[1]) {
      q(m[0], m[0]) += c;
    } else {
      q(m[0], m[1]) += c / 2;
      q(m[1], m[0]) += c / 2;
    }
  }
  return q;
}

Polynomial Polynomial::embed(std::size_t n, const std::vector<std::size_t>& map) const {
  if (map.size() != num_vars_) throw InputError("embed: variable map has wrong length");
  Polynomial out(n);
  for (const auto& [m, c] : terms_) {
    Monomial mm;
    for (auto v : m) mm.push_back(map[v]);
    out.add_term(std::move(mm), c);
  }
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_) throw InputError("polynomial rings differ");
  Polynomial out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Rational(-1) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_) throw InputError("polynomial rings differ");
  Polynomial out(a.num_vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add_term(std::move(m), ca * cb);
    }
  return out;
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
  Polynomial out(a.num_vars_);
  for (const auto& [m, c] : a.terms_) out.add_term(m, s * c);
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.terms().empty()) return "0";
  std::string s;
  for (const auto& [m, c] : p.terms()) {
    if (!s.empty()) s += " + ";
    s += to_string(c);
    for (auto v : m) s += "*z" + std::to_string(v);
  }
  return s;
}

}  // namespace tropfan
