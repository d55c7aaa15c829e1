#pragma once

#include <vector>

#include "halg/matrix.hpp"

namespace halg {

// A subspace of F^n held in canonical form: the RREF of any spanning set,
// one basis vector per row. Two subspaces are equal iff the stored
// matrices are equal.
class Subspace {
 public:
  static Subspace zero(Field field, std::size_t ambient);
  static Subspace full(Field field, std::size_t ambient);
  // rows of `m` span the subspace
  static Subspace span_rows(const Matrix& m);
  // columns of `m` span the subspace
  static Subspace span_cols(const Matrix& m) { return span_rows(m.transpose()); }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis_rows() const { return basis_; }
  Matrix basis_cols() const { return basis_.transpose(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  // ambient coordinates not used as pivots; they index a complement
  std::vector<std::size_t> free_coords() const;

  bool contains(const Matrix& column_vector) const;
  bool contains(const Subspace& other) const;
  // canonical representative of v modulo the subspace (pivot coords cleared)
  Matrix reduce(const Matrix& column_vector) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  bool operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
  }
  bool operator!=(const Subspace& other) const { return !(*this == other); }

 private:
  Subspace(Field field, std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {
    (void)field;
  }

  std::size_t ambient_;
  Matrix basis_;  // dim x ambient, canonical RREF
  std::vector<std::size_t> pivots_;
};

// Incrementally built echelon span: add vectors one at a time, with full
// back-elimination so the final basis agrees with Subspace's canonical RREF.
class EchelonBuilder {
 public:
  EchelonBuilder(Field field, std::size_t ambient)
      : field_(field), ambient_(ambient) {}

  // true iff the vector enlarged the span
  bool add(const Matrix& column_vector);
  bool contains(const Matrix& column_vector) const;
  // residue of v after eliminating against the current basis
  Matrix reduce(const Matrix& column_vector) const;

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  Subspace to_subspace() const;
  Matrix basis_rows() const;

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<std::size_t> pivots_;             // sorted
  std::vector<std::vector<Scalar>> rows_;       // aligned with pivots_
};

}  // namespace halg
