#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tropfan {

using Rational = mpq_class;
using RatVector = std::vector<Rational>;

// Accepts "p/q", "p" or "-p/q". Throws InputError on anything else or q = 0.
Rational parse_rational(std::string_view text);

// Canonical form: "p/q" with q > 1, or "p" when the value is an integer.
std::string to_string(const Rational& value);

int sign(const Rational& value);

RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator*(const Rational& s, const RatVector& v);
Rational dot(const RatVector& a, const RatVector& b);
bool is_zero(const RatVector& v);
RatVector zero_vector(std::size_t n);
RatVector unit_vector(std::size_t n, std::size_t i);

}  // namespace tropfan
