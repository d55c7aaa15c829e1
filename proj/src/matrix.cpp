#include "halg/matrix.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <sstream>
#include <utility>

namespace halg {

namespace {

// Rough work threshold above which the OpenMP kernels kick in.
constexpr std::size_t kParallelWork = 16384;

bool want_parallel(std::size_t work) {
#ifdef _OPENMP
  return work >= kParallelWork && omp_get_max_threads() > 1;
#else
  (void)work;
  return false;
#endif
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), e_(rows * cols, Scalar(0)) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.e_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_int_rows(Field field,
                             std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(field, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    std::size_t j = 0;
    for (long v : row) m.set(i, j++, Scalar(v));
    ++i;
  }
  return m;
}

Matrix Matrix::from_str_rows(Field field, const std::vector<std::vector<std::string>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  Matrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.set_reduced(i, j, field.parse(rows[i][j]));
  }
  return m;
}

Matrix Matrix::column(Field field, const std::vector<Scalar>& entries) {
  Matrix m(field, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
  return m;
}

bool Matrix::operator==(const Matrix& other) const {
  if (field_ != other.field_ || rows_ != other.rows_ || cols_ != other.cols_) return false;
  for (std::size_t k = 0; k < e_.size(); ++k) {
    if (e_[k] != other.e_[k]) return false;
  }
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& v : e_) {
    if (sgn(v) != 0) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(field_, rows_);
}

Matrix Matrix::add(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_ || field_ != other.field_) {
    throw Error(ErrorCode::DimensionMismatch, "add: shape or field mismatch");
  }
  Matrix r(field_, rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = field_.add(e_[k], other.e_[k]);
  return r;
}

Matrix Matrix::sub(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_ || field_ != other.field_) {
    throw Error(ErrorCode::DimensionMismatch, "sub: shape or field mismatch");
  }
  Matrix r(field_, rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = field_.sub(e_[k], other.e_[k]);
  return r;
}

Matrix Matrix::negated() const {
  Matrix r(field_, rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = field_.neg(e_[k]);
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r(field_, rows_, cols_);
  Scalar cc = field_.reduce(c);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = field_.mul(e_[k], cc);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.e_[j * rows_ + i] = e_[i * cols_ + j];
  return r;
}

Matrix Matrix::mul_serial(const Matrix& other) const {
  if (cols_ != other.rows_ || field_ != other.field_) {
    throw Error(ErrorCode::DimensionMismatch, "mul: inner dimensions or field mismatch");
  }
  Matrix r(field_, rows_, other.cols_);
  const std::size_t n = other.cols_;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = e_[i * cols_ + k];
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& bkj = other.e_[k * n + j];
        if (sgn(bkj) == 0) continue;
        r.e_[i * n + j] = field_.add(r.e_[i * n + j], field_.mul(aik, bkj));
      }
    }
  }
  return r;
}

Matrix Matrix::mul_parallel(const Matrix& other) const {
  if (cols_ != other.rows_ || field_ != other.field_) {
    throw Error(ErrorCode::DimensionMismatch, "mul: inner dimensions or field mismatch");
  }
  Matrix r(field_, rows_, other.cols_);
  const std::size_t n = other.cols_;
  const long nrows = static_cast<long>(rows_);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long li = 0; li < nrows; ++li) {
    const std::size_t i = static_cast<std::size_t>(li);
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = e_[i * cols_ + k];
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& bkj = other.e_[k * n + j];
        if (sgn(bkj) == 0) continue;
        r.e_[i * n + j] = field_.add(r.e_[i * n + j], field_.mul(aik, bkj));
      }
    }
  }
  return r;
}

Matrix Matrix::mul(const Matrix& other) const {
  if (want_parallel(rows_ * cols_ * other.cols())) return mul_parallel(other);
  return mul_serial(other);
}

Matrix Matrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nrows,
                         std::size_t ncols) const {
  Matrix r(field_, nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) r.e_[i * ncols + j] = at(r0 + i, c0 + j);
  return r;
}

Matrix Matrix::col(std::size_t j) const { return submatrix(0, j, rows_, 1); }

Matrix Matrix::row(std::size_t i) const { return submatrix(i, 0, 1, cols_); }

Matrix Matrix::hstack(const Matrix& other) const {
  if (rows_ != other.rows_ || field_ != other.field_) {
    throw Error(ErrorCode::DimensionMismatch, "hstack: row count mismatch");
  }
  Matrix r(field_, rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.e_[i * r.cols_ + j] = at(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) r.e_[i * r.cols_ + cols_ + j] = other.at(i, j);
  }
  return r;
}

Matrix Matrix::vstack(const Matrix& other) const {
  if (cols_ != other.cols_ || field_ != other.field_) {
    throw Error(ErrorCode::DimensionMismatch, "vstack: column count mismatch");
  }
  Matrix r(field_, rows_ + other.rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k];
  for (std::size_t k = 0; k < other.e_.size(); ++k) r.e_[e_.size() + k] = other.e_[k];
  return r;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& block) {
  for (std::size_t i = 0; i < block.rows_; ++i)
    for (std::size_t j = 0; j < block.cols_; ++j) e_[(r0 + i) * cols_ + c0 + j] = block.at(i, j);
}

Matrix Matrix::vec() const {
  Matrix r(field_, rows_ * cols_, 1);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k];
  return r;
}

Matrix Matrix::unvec(Field field, const Matrix& column, std::size_t rows, std::size_t cols) {
  if (column.rows() != rows * cols || column.cols() != 1) {
    throw Error(ErrorCode::DimensionMismatch, "unvec: size mismatch");
  }
  Matrix r(field, rows, cols);
  for (std::size_t k = 0; k < rows * cols; ++k) r.e_[k] = column.at(k, 0);
  return r;
}

Scalar Matrix::trace() const {
  Scalar t = 0;
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t = field_.add(t, at(i, i));
  return t;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << Field::str(at(i, j));
  }
  os << "]";
  return os.str();
}

namespace {

// Gauss-Jordan elimination in place; the row update loop is the
// parallel hot spot. Rows are independent within one pivot step.
RrefResult rref_impl(const Matrix& m, bool parallel) {
  const Field& f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && Field::is_zero(a.at(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) {
        Scalar t = a.at(r, j);
        a.set_reduced(r, j, a.at(p, j));
        a.set_reduced(p, j, std::move(t));
      }
    }
    Scalar piv_inv = f.inv(a.at(r, c));
    for (std::size_t j = c; j < cols; ++j) {
      if (!Field::is_zero(a.at(r, j))) a.set_reduced(r, j, f.mul(a.at(r, j), piv_inv));
    }
    auto eliminate_row = [&](std::size_t i) {
      if (i == r) return;
      const Scalar& factor = a.at(i, c);
      if (Field::is_zero(factor)) return;
      Scalar fcopy = factor;
      for (std::size_t j = c; j < cols; ++j) {
        if (Field::is_zero(a.at(r, j))) continue;
        a.set_reduced(i, j, f.sub(a.at(i, j), f.mul(fcopy, a.at(r, j))));
      }
    };
    if (parallel) {
#ifdef _OPENMP
      const long n = static_cast<long>(rows);
#pragma omp parallel for schedule(dynamic)
      for (long i = 0; i < n; ++i) eliminate_row(static_cast<std::size_t>(i));
#else
      for (std::size_t i = 0; i < rows; ++i) eliminate_row(i);
#endif
    } else {
      for (std::size_t i = 0; i < rows; ++i) eliminate_row(i);
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{std::move(a), std::move(pivots), r};
}

}  // namespace

RrefResult rref_serial(const Matrix& m) { return rref_impl(m, false); }

RrefResult rref_parallel(const Matrix& m) { return rref_impl(m, true); }

RrefResult rref(const Matrix& m) {
  return rref_impl(m, want_parallel(m.rows() * m.cols()));
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
  RrefResult r = rref(m);
  const Field& f = m.field();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> free_cols;
  {
    std::size_t pi = 0;
    for (std::size_t c = 0; c < cols; ++c) {
      if (pi < r.pivots.size() && r.pivots[pi] == c) {
        ++pi;
      } else {
        free_cols.push_back(c);
      }
    }
  }
  Matrix basis(f, cols, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    basis.set_reduced(fc, k, f.one());
    for (std::size_t row_i = 0; row_i < r.pivots.size(); ++row_i) {
      const Scalar& v = r.reduced.at(row_i, fc);
      if (!Field::is_zero(v)) basis.set_reduced(r.pivots[row_i], k, f.neg(v));
    }
  }
  return basis;
}

std::optional<LinearSolution> solve_linear(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.field() != b.field()) {
    throw Error(ErrorCode::DimensionMismatch, "solve_linear: row count or field mismatch");
  }
  const Field& f = a.field();
  RrefResult r = rref(a.hstack(b));
  for (std::size_t pc : r.pivots) {
    if (pc >= a.cols()) return std::nullopt;
  }
  Matrix x(f, a.cols(), b.cols());
  for (std::size_t row_i = 0; row_i < r.pivots.size(); ++row_i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      x.set_reduced(r.pivots[row_i], j, r.reduced.at(row_i, a.cols() + j));
    }
  }
  return LinearSolution{std::move(x), kernel_basis(a)};
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw Error(ErrorCode::DimensionMismatch, "kronecker: field mismatch");
  const Field& f = a.field();
  Matrix r(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a.at(i, j);
      if (Field::is_zero(aij)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Scalar& bkl = b.at(k, l);
          if (Field::is_zero(bkl)) continue;
          r.set_reduced(i * b.rows() + k, j * b.cols() + l, f.mul(aij, bkl));
        }
      }
    }
  }
  return r;
}

Scalar trace_of_product(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols() || a.field() != b.field()) {
    throw Error(ErrorCode::DimensionMismatch, "trace_of_product: shape mismatch");
  }
  const Field& f = a.field();
  Scalar t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a.at(i, j);
      if (Field::is_zero(x)) continue;
      const Scalar& y = b.at(j, i);
      if (Field::is_zero(y)) continue;
      t = f.add(t, f.mul(x, y));
    }
  }
  return t;
}

Matrix left_inverse(const Matrix& m) {
  // li * m = I  <=>  m^T * li^T = I.
  auto sol = solve_linear(m.transpose(), Matrix::identity(m.field(), m.cols()));
  if (!sol) {
    throw Error(ErrorCode::NotInvertible, "matrix does not have full column rank");
  }
  return sol->particular.transpose();
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NotInvertible, "inverse of non-square matrix");
  auto sol = solve_linear(m, Matrix::identity(m.field(), m.rows()));
  if (!sol || sol->kernel.cols() != 0) {
    throw Error(ErrorCode::NotInvertible, "singular matrix");
  }
  return sol->particular;
}

}  // namespace halg
