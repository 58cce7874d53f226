#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tropfan/rational.hpp"

namespace tropfan {

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
  static RatMatrix from_columns(const std::vector<RatVector>& columns, std::size_t rows);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatVector row(std::size_t i) const;
  RatVector column(std::size_t j) const;
  RatMatrix transpose() const;
  RatVector apply(const RatVector& v) const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& s, const RatMatrix& a);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(const RatMatrix& a);
std::size_t rank(const RatMatrix& a);
Rational determinant(const RatMatrix& a);

// Some solution of A x = b (free variables set to zero), or nullopt if inconsistent.
std::optional<RatVector> solve_linear(const RatMatrix& a, const RatVector& b);

std::vector<RatVector> nullspace(const RatMatrix& a);

bool is_symmetric(const RatMatrix& a);

// Coefficients c_0..c_n of det(x I - S); c_n = 1.
RatVector char_poly(const RatMatrix& s);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

std::string to_string(const Inertia& in);

// Sign counts of the eigenvalues of a symmetric matrix, read off the
// characteristic polynomial by sign variations.
Inertia inertia(const RatMatrix& s);

// Same count for a real-rooted monic polynomial given by c_0..c_n.
Inertia inertia_from_char_poly(const RatVector& coeffs);

}  // namespace tropfan
