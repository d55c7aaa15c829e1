#include "halg/subspace.hpp"

#include <algorithm>

namespace halg {

Subspace Subspace::zero(Field field, std::size_t ambient) {
  return Subspace(field, ambient, Matrix(field, 0, ambient), {});
}

Subspace Subspace::full(Field field, std::size_t ambient) {
  std::vector<std::size_t> pivots(ambient);
  for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
  return Subspace(field, ambient, Matrix::identity(field, ambient), std::move(pivots));
}

Subspace Subspace::span_rows(const Matrix& m) {
  RrefResult r = rref(m);
  Matrix basis = r.reduced.submatrix(0, 0, r.rank, m.cols());
  return Subspace(m.field(), m.cols(), std::move(basis), std::move(r.pivots));
}

std::vector<std::size_t> Subspace::free_coords() const {
  std::vector<std::size_t> out;
  std::size_t pi = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (pi < pivots_.size() && pivots_[pi] == c) {
      ++pi;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

Matrix Subspace::reduce(const Matrix& v) const {
  if (v.rows() != ambient_ || v.cols() != 1) {
    throw Error(ErrorCode::DimensionMismatch, "Subspace::reduce expects an ambient column vector");
  }
  const Field& f = basis_.field();
  Matrix out = v;
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const Scalar& coef = out.at(pivots_[r], 0);
    if (Field::is_zero(coef)) continue;
    Scalar c = coef;
    for (std::size_t j = 0; j < ambient_; ++j) {
      const Scalar& b = basis_.at(r, j);
      if (Field::is_zero(b)) continue;
      out.set_reduced(j, 0, f.sub(out.at(j, 0), f.mul(c, b)));
    }
  }
  return out;
}

bool Subspace::contains(const Matrix& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t r = 0; r < other.basis_.rows(); ++r) {
    if (!contains(other.basis_.row(r).transpose())) return false;
  }
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) {
    throw Error(ErrorCode::DimensionMismatch, "Subspace::sum ambient mismatch");
  }
  return span_rows(basis_.vstack(other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) {
    throw Error(ErrorCode::DimensionMismatch, "Subspace::intersect ambient mismatch");
  }
  // x = u^T A = w^T B; solve [A^T | -B^T] k = 0, read off u from the top block.
  if (dim() == 0 || other.dim() == 0) return zero(basis_.field(), ambient_);
  Matrix stacked = basis_.transpose().hstack(other.basis_.transpose().negated());
  Matrix ker = kernel_basis(stacked);
  Matrix vecs(basis_.field(), ker.cols(), ambient_);
  for (std::size_t k = 0; k < ker.cols(); ++k) {
    Matrix u = ker.submatrix(0, k, dim(), 1);
    Matrix x = basis_.transpose().mul(u);
    for (std::size_t j = 0; j < ambient_; ++j) vecs.set_reduced(k, j, x.at(j, 0));
  }
  return span_rows(vecs);
}

Matrix EchelonBuilder::reduce(const Matrix& v) const {
  if (v.rows() != ambient_ || v.cols() != 1) {
    throw Error(ErrorCode::DimensionMismatch, "EchelonBuilder expects an ambient column vector");
  }
  Matrix out = v;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& coef = out.at(pivots_[r], 0);
    if (Field::is_zero(coef)) continue;
    Scalar c = coef;
    for (std::size_t j = 0; j < ambient_; ++j) {
      const Scalar& b = rows_[r][j];
      if (Field::is_zero(b)) continue;
      out.set_reduced(j, 0, field_.sub(out.at(j, 0), field_.mul(c, b)));
    }
  }
  return out;
}

bool EchelonBuilder::contains(const Matrix& v) const { return reduce(v).is_zero(); }

bool EchelonBuilder::add(const Matrix& v) {
  Matrix red = reduce(v);
  std::size_t pivot = ambient_;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (!Field::is_zero(red.at(j, 0))) {
      pivot = j;
      break;
    }
  }
  if (pivot == ambient_) return false;
  Scalar inv = field_.inv(red.at(pivot, 0));
  std::vector<Scalar> row(ambient_, Scalar(0));
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (!Field::is_zero(red.at(j, 0))) row[j] = field_.mul(red.at(j, 0), inv);
  }
  // back-eliminate the new pivot from existing rows
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& coef = rows_[r][pivot];
    if (Field::is_zero(coef)) continue;
    Scalar c = coef;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (Field::is_zero(row[j])) continue;
      rows_[r][j] = field_.sub(rows_[r][j], field_.mul(c, row[j]));
    }
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pivot);
  rows_.insert(rows_.begin() + pos, std::move(row));
  return true;
}

Matrix EchelonBuilder::basis_rows() const {
  Matrix m(field_, rows_.size(), ambient_);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t j = 0; j < ambient_; ++j) m.set_reduced(r, j, rows_[r][j]);
  return m;
}

Subspace EchelonBuilder::to_subspace() const { return Subspace::span_rows(basis_rows()); }

}  // namespace halg
