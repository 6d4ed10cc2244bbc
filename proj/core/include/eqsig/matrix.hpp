#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "eqsig/integer.hpp"

namespace eqsig {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t size);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  std::vector<std::vector<Integer>> to_rows() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator+(const IntMatrix& lhs, const IntMatrix& rhs);
IntMatrix operator-(const IntMatrix& lhs, const IntMatrix& rhs);
IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
IntMatrix operator*(const Integer& scalar, const IntMatrix& m);
std::vector<Integer> operator*(const IntMatrix& m, std::span<const Integer> v);

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
/// The empty matrix has determinant 1.
Integer det(const IntMatrix& m);

/// Rank by fraction-free row reduction; works for rectangular input.
std::size_t rank(const IntMatrix& m);

/// Solves m x = b over the rationals. Throws std::domain_error if m is singular.
std::vector<Rational> solve(const IntMatrix& m, std::span<const Integer> b);

/// Symmetric square matrix; symmetry is checked on construction and kept by
/// every mutator.
class SymIntMatrix {
 public:
  SymIntMatrix() = default;
  explicit SymIntMatrix(std::size_t size);
  /// Throws std::invalid_argument if `m` is not square and symmetric.
  explicit SymIntMatrix(IntMatrix m);
  SymIntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static SymIntMatrix identity(std::size_t size);

  std::size_t size() const { return m_.rows(); }
  const Integer& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  /// Sets entries (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, const Integer& value);
  /// Adds `delta` to (i,j) and, when i != j, to (j,i).
  void add(std::size_t i, std::size_t j, const Integer& delta);

  /// Principal submatrix on the given (ordered) indices.
  SymIntMatrix principal(std::span<const std::size_t> indices) const;

  const IntMatrix& matrix() const { return m_; }

  friend bool operator==(const SymIntMatrix&, const SymIntMatrix&) = default;

 private:
  IntMatrix m_;
};

inline Integer det(const SymIntMatrix& m) { return det(m.matrix()); }
inline std::size_t rank(const SymIntMatrix& m) { return rank(m.matrix()); }

/// C^T M C.
SymIntMatrix congruent(const SymIntMatrix& m, const IntMatrix& c);

}  // namespace eqsig
