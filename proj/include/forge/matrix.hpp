#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "forge/scalar.hpp"

namespace forge {

using Vec = std::vector<Scalar>;

// Dense row-major matrix over a fixed field. A Matrix doubles as the linear
// map it represents on column vectors: rows = codomain dim, cols = domain dim.
//
// Tensor convention used throughout: the basis of U (x) V is ordered with the
// left factor major, index(i,j) = i * dim(V) + j. kron() follows it.
class Matrix {
 public:
  Matrix() : field_(Field::rationals()), rows_(0), cols_(0) {}
  Matrix(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar(0)) {}

  static Matrix identity(Field f, std::size_t n);
  static Matrix zero(Field f, std::size_t rows, std::size_t cols) { return Matrix(f, rows, cols); }
  // Row-major entries given as integers (tests and fixtures).
  static Matrix from_int_rows(Field f, std::size_t rows, std::size_t cols,
                              std::initializer_list<long> entries);
  static Matrix column(Field f, const Vec& v);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const Scalar& v) { a_[i * cols_ + j] = field_.reduce(v); }

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  bool operator==(const Matrix& rhs) const;
  bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }
  bool is_zero() const;

  Vec apply(const Vec& v) const;      // matrix * column vector
  Vec row_vec(std::size_t i) const;
  Vec col_vec(std::size_t j) const;
  void set_col(std::size_t j, const Vec& v);

  // Kronecker product: (A kron B)(u (x) v) = Au (x) Bv in the left-major order.
  Matrix kron(const Matrix& rhs) const;

  Matrix hstack(const Matrix& rhs) const;  // [this | rhs]
  Matrix vstack(const Matrix& rhs) const;  // [this ; rhs]

  std::string to_string() const;  // row-per-line debug form

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

std::size_t tensor_index(std::size_t i, std::size_t j, std::size_t dim2);

// The swap V (x) W -> W (x) V as a permutation matrix, d1 = dim V, d2 = dim W.
Matrix flip(const Field& f, std::size_t d1, std::size_t d2);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
// u (x) v as a coordinate vector of length |u|*|v|, left factor major.
Vec tensor_vec(const Field& f, const Vec& u, const Vec& v);
Vec add_vec(const Field& f, const Vec& u, const Vec& v);
Vec sub_vec(const Field& f, const Vec& u, const Vec& v);
Vec scale_vec(const Field& f, const Scalar& c, const Vec& v);
bool is_zero_vec(const Field& f, const Vec& v);
bool eq_vec(const Field& f, const Vec& u, const Vec& v);

}  // namespace forge
