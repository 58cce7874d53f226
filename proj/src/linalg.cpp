#include "tropfan/linalg.hpp"

#include <utility>

#include "tropfan/errors.hpp"

namespace tropfan {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& columns, std::size_t rows) {
  RatMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw InputError("ragged matrix columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVector RatMatrix::row(std::size_t i) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RatVector RatMatrix::column(std::size_t j) const {
  RatVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatVector RatMatrix::apply(const RatVector& v) const {
  if (v.size() != cols_) throw InputError("matrix-vector dimension mismatch");
  RatVector out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product dimension mismatch");
  RatMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix sum dimension mismatch");
  RatMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix difference dimension mismatch");
  RatMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
  RatMatrix c = a;
  for (auto& x : c.data_) x *= s;
  return c;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RowEchelon rref(const RatMatrix& a) {
  RowEchelon out{a, {}};
  RatMatrix& m = out.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

std::size_t rank(const RatMatrix& a) { return rref(a).pivots.size(); }

Rational determinant(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw InputError("determinant of a non-square matrix");
  RatMatrix m = a;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::optional<RatVector> solve_linear(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw InputError("right-hand side length mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  RowEchelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  RatVector x(a.cols(), Rational(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  return x;
}

std::vector<RatVector> nullspace(const RatMatrix& a) {
  RowEchelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(a.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_symmetric(const RatMatrix& a) {
  if (a.rows() != a.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != a(j, i)) return false;
  return true;
}

namespace {

// p(x) * (x - c)
RatVector mul_linear(const RatVector& p, const Rational& c) {
  RatVector out(p.size() + 1, Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + 1] += p[i];
    out[i] -= c * p[i];
  }
  return out;
}

}  // namespace

RatVector char_poly(const RatMatrix& s) {
  if (s.rows() != s.cols()) throw InputError("characteristic polynomial of a non-square matrix");
  const std::size_t n = s.rows();
  RatMatrix h = s;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && sgn(h(i, m - 1)) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    for (std::size_t k = m + 1; k < n; ++k) {
      if (sgn(h(k, m - 1)) == 0) continue;
      Rational t = h(k, m - 1) / h(m, m - 1);
      for (std::size_t j = 0; j < n; ++j) h(k, j) -= t * h(m, j);
      for (std::size_t j = 0; j < n; ++j) h(j, m) += t * h(j, k);
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_i h_{k-i,k} (prod subdiag) p_{k-i-1}
  std::vector<RatVector> p;
  p.push_back(RatVector{Rational(1)});
  for (std::size_t k = 0; k < n; ++k) {
    RatVector next = mul_linear(p[k], h(k, k));
    Rational prod = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      prod *= h(k - i + 1, k - i);
      if (sgn(prod) == 0) break;
      Rational coef = h(k - i, k) * prod;
      if (sgn(coef) == 0) continue;
      const RatVector& q = p[k - i];
      for (std::size_t j = 0; j < q.size(); ++j) next[j] -= coef * q[j];
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

std::string to_string(const Inertia& in) {
  return "(" + std::to_string(in.positive) + "," + std::to_string(in.negative) + "," +
         std::to_string(in.zero) + ")";
}

namespace {

std::size_t sign_variations(const RatVector& c, bool alternate) {
  std::size_t changes = 0;
  int last = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    int s = sgn(c[i]);
    if (alternate && (i % 2 == 1)) s = -s;
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

Inertia inertia_from_char_poly(const RatVector& coeffs) {
  if (coeffs.empty() || sgn(coeffs.back()) == 0) throw InputError("polynomial has no leading coefficient");
  const std::size_t n = coeffs.size() - 1;
  std::size_t r = 0;
  while (r < n && sgn(coeffs[r]) == 0) ++r;
  RatVector rest(coeffs.begin() + static_cast<std::ptrdiff_t>(r), coeffs.end());
  Inertia in;
  in.zero = r;
  in.positive = sign_variations(rest, false);
  in.negative = n - r - in.positive;
  if (sign_variations(rest, true) != in.negative) {
    throw InvariantError("characteristic polynomial is not real-rooted");
  }
  return in;
}

Inertia inertia(const RatMatrix& s) {
  if (!is_symmetric(s)) throw InputError("inertia requires a symmetric matrix");
  return inertia_from_char_poly(char_poly(s));
}

}  // namespace tropfan
