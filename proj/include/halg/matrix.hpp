#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "halg/field.hpp"

namespace halg {

// Dense row-major matrix over an exact field. Entries are always kept in
// the field's canonical form, so equality is plain entry comparison.
//
// The multiply and elimination kernels exist twice: a serial reference
// and an OpenMP version parallelized over rows. Both produce identical
// entries (per-row arithmetic does not depend on scheduling), which the
// test suite checks; the public entry points dispatch on problem size.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  static Matrix zero(Field field, std::size_t rows, std::size_t cols) {
    return Matrix(field, rows, cols);
  }
  static Matrix from_int_rows(Field field,
                              std::initializer_list<std::initializer_list<long>> rows);
  static Matrix from_str_rows(Field field,
                              const std::vector<std::vector<std::string>>& rows);
  static Matrix column(Field field, const std::vector<Scalar>& entries);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const Scalar& v) {
    e_[i * cols_ + j] = field_.reduce(v);
  }
  void set_reduced(std::size_t i, std::size_t j, Scalar v) {
    e_[i * cols_ + j] = std::move(v);
  }

  bool operator==(const Matrix& other) const;
  bool operator!=(const Matrix& other) const { return !(*this == other); }
  bool is_zero() const;
  bool is_identity() const;

  Matrix add(const Matrix& other) const;
  Matrix sub(const Matrix& other) const;
  Matrix negated() const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;

  Matrix mul(const Matrix& other) const;
  Matrix mul_serial(const Matrix& other) const;
  Matrix mul_parallel(const Matrix& other) const;

  Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
  Matrix col(std::size_t j) const;
  Matrix row(std::size_t i) const;
  Matrix hstack(const Matrix& other) const;
  Matrix vstack(const Matrix& other) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& block);

  // vec in row-major order (row i of an r x c matrix occupies [i*c, (i+1)*c)).
  Matrix vec() const;
  static Matrix unvec(Field field, const Matrix& column, std::size_t rows, std::size_t cols);

  Scalar trace() const;
  std::string str() const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> e_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank;
};

// Canonical reduced row echelon form (leading entries 1, pivot columns
// cleared); unique per row space.
RrefResult rref(const Matrix& m);
RrefResult rref_serial(const Matrix& m);
RrefResult rref_parallel(const Matrix& m);

// Columns form a basis of the right null space; cols() == nullity.
Matrix kernel_basis(const Matrix& m);

struct LinearSolution {
  Matrix particular;  // one exact solution of a x = b
  Matrix kernel;      // columns span the homogeneous solution space
};

// Solves a x = b (b may have several columns). Empty optional: no solution.
std::optional<LinearSolution> solve_linear(const Matrix& a, const Matrix& b);

Matrix kronecker(const Matrix& a, const Matrix& b);

// trace(a * b) without forming the product.
Scalar trace_of_product(const Matrix& a, const Matrix& b);

// Left inverse of a full-column-rank matrix: li * m == identity.
Matrix left_inverse(const Matrix& m);

// Square-matrix inverse; throws NotInvertible.
Matrix inverse(const Matrix& m);

std::size_t rank(const Matrix& m);

}  // namespace halg
