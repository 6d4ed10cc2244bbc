#include "eqsig/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace eqsig {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t size) {
  IntMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<std::vector<Integer>> IntMatrix::to_rows() const {
  std::vector<std::vector<Integer>> out(rows_, std::vector<Integer>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

IntMatrix operator+(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    throw std::invalid_argument("matrix sum: shape mismatch");
  IntMatrix out(lhs.rows(), lhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j) out(i, j) = lhs(i, j) + rhs(i, j);
  return out;
}

IntMatrix operator-(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    throw std::invalid_argument("matrix difference: shape mismatch");
  IntMatrix out(lhs.rows(), lhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j) out(i, j) = lhs(i, j) - rhs(i, j);
  return out;
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  IntMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      if (lhs(i, k) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += lhs(i, k) * rhs(k, j);
    }
  return out;
}

IntMatrix operator*(const Integer& scalar, const IntMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = scalar * m(i, j);
  return out;
}

std::vector<Integer> operator*(const IntMatrix& m, std::span<const Integer> v) {
  if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  std::vector<Integer> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

Integer det(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int parity = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      parity = -parity;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return parity * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.rows() && a(pivot, c) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(pivot, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Integer factor = a(i, c);
      Integer g = 0;
      for (std::size_t j = c; j < a.cols(); ++j) {
        a(i, j) = a(i, j) * a(r, c) - factor * a(r, j);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a(i, j).get_mpz_t());
      }
      if (g > 1)
        for (std::size_t j = c; j < a.cols(); ++j)
          mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), g.get_mpz_t());
    }
    ++r;
  }
  return r;
}

std::vector<Rational> solve(const IntMatrix& m, std::span<const Integer> b) {
  if (!m.is_square() || m.rows() != b.size())
    throw std::invalid_argument("solve: shape mismatch");
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n] = b[i];
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) throw std::domain_error("solve: singular matrix");
    std::swap(a[k], a[pivot]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

SymIntMatrix::SymIntMatrix(std::size_t size) : m_(size, size) {}

SymIntMatrix::SymIntMatrix(IntMatrix m) : m_(std::move(m)) {
  if (!m_.is_symmetric()) throw std::invalid_argument("matrix is not symmetric");
}

SymIntMatrix::SymIntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : SymIntMatrix(IntMatrix(rows)) {}

SymIntMatrix SymIntMatrix::identity(std::size_t size) {
  return SymIntMatrix(IntMatrix::identity(size));
}

void SymIntMatrix::set(std::size_t i, std::size_t j, const Integer& value) {
  m_(i, j) = value;
  m_(j, i) = value;
}

void SymIntMatrix::add(std::size_t i, std::size_t j, const Integer& delta) {
  m_(i, j) += delta;
  if (i != j) m_(j, i) += delta;
}

SymIntMatrix SymIntMatrix::principal(std::span<const std::size_t> indices) const {
  SymIntMatrix out(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = 0; j < indices.size(); ++j)
      out.m_(i, j) = m_(indices[i], indices[j]);
  return out;
}

SymIntMatrix congruent(const SymIntMatrix& m, const IntMatrix& c) {
  return SymIntMatrix(c.transpose() * m.matrix() * c);
}

}  // namespace eqsig
