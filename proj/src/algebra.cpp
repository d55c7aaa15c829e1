#include "halg/algebra.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace halg {

std::size_t max_algebra_dim() {
  if (const char* env = std::getenv("HALG_MAX_DIM")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 512;
}

Algebra::Algebra(Field field, std::vector<std::string> labels, std::vector<Scalar> mul,
                 Matrix unit, std::string name)
    : field_(field),
      n_(labels.size()),
      labels_(std::move(labels)),
      mul_(std::move(mul)),
      unit_(std::move(unit)),
      name_(std::move(name)) {}

AlgebraPtr Algebra::make(Field field, std::vector<std::string> labels, std::vector<Scalar> mul,
                         std::vector<Scalar> unit, std::string name) {
  return make_impl(field, std::move(labels), std::move(mul), std::move(unit), std::move(name),
                   std::nullopt);
}

AlgebraPtr Algebra::make_impl(Field field, std::vector<std::string> labels,
                              std::vector<Scalar> mul, std::vector<Scalar> unit,
                              std::string name, std::optional<SkewProvenance> skew) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "algebra must have positive dimension");
  if (n > max_algebra_dim()) {
    throw Error(ErrorCode::DimCapExceeded,
                "algebra dimension " + std::to_string(n) + " exceeds HALG_MAX_DIM = " +
                    std::to_string(max_algebra_dim()));
  }
  if (mul.size() != n * n * n) {
    throw Error(ErrorCode::DimensionMismatch, "structure constant table has wrong size");
  }
  if (unit.size() != n) throw Error(ErrorCode::DimensionMismatch, "unit vector has wrong size");
  {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != n) throw Error(ErrorCode::ParseError, "basis labels must be distinct");
  }
  for (auto& v : mul) v = field.reduce(v);
  Matrix u(field, n, 1);
  for (std::size_t i = 0; i < n; ++i) u.set(i, 0, unit[i]);
  auto alg = std::shared_ptr<Algebra>(
      new Algebra(field, std::move(labels), std::move(mul), std::move(u), std::move(name)));
  alg->skew_ = std::move(skew);
  alg->validate();
  alg->compute_generators();
  return alg;
}

Matrix Algebra::basis_product(std::size_t i, std::size_t j) const {
  Matrix v(field_, n_, 1);
  for (std::size_t k = 0; k < n_; ++k) v.set_reduced(k, 0, c(i, j, k));
  return v;
}

Matrix Algebra::multiply(const Matrix& x, const Matrix& y) const {
  if (x.rows() != n_ || y.rows() != n_ || x.cols() != 1 || y.cols() != 1) {
    throw Error(ErrorCode::DimensionMismatch, "multiply expects coefficient columns");
  }
  Matrix out(field_, n_, 1);
  for (std::size_t i = 0; i < n_; ++i) {
    const Scalar& xi = x.at(i, 0);
    if (Field::is_zero(xi)) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      const Scalar& yj = y.at(j, 0);
      if (Field::is_zero(yj)) continue;
      Scalar xy = field_.mul(xi, yj);
      for (std::size_t k = 0; k < n_; ++k) {
        const Scalar& ck = c(i, j, k);
        if (Field::is_zero(ck)) continue;
        out.set_reduced(k, 0, field_.add(out.at(k, 0), field_.mul(xy, ck)));
      }
    }
  }
  return out;
}

Matrix Algebra::left_mul_matrix(std::size_t i) const {
  Matrix m(field_, n_, n_);
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t k = 0; k < n_; ++k) m.set_reduced(k, j, c(i, j, k));
  return m;
}

Matrix Algebra::right_mul_matrix(std::size_t i) const {
  Matrix m(field_, n_, n_);
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t k = 0; k < n_; ++k) m.set_reduced(k, j, c(j, i, k));
  return m;
}

Matrix Algebra::left_action(const Matrix& x) const {
  Matrix m(field_, n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    const Scalar& xi = x.at(i, 0);
    if (Field::is_zero(xi)) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k) {
        const Scalar& ck = c(i, j, k);
        if (Field::is_zero(ck)) continue;
        m.set_reduced(k, j, field_.add(m.at(k, j), field_.mul(xi, ck)));
      }
    }
  }
  return m;
}

Matrix Algebra::right_action(const Matrix& x) const {
  Matrix m(field_, n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    const Scalar& xi = x.at(i, 0);
    if (Field::is_zero(xi)) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k) {
        const Scalar& ck = c(j, i, k);
        if (Field::is_zero(ck)) continue;
        m.set_reduced(k, j, field_.add(m.at(k, j), field_.mul(xi, ck)));
      }
    }
  }
  return m;
}

void Algebra::validate() const {
  const long n = static_cast<long>(n_);
  // two-sided unit
  for (std::size_t j = 0; j < n_; ++j) {
    Matrix ej(field_, n_, 1);
    ej.set_reduced(j, 0, field_.one());
    if (multiply(unit_, ej) != ej || multiply(ej, unit_) != ej) {
      throw Error(ErrorCode::NotUnital, "unit law fails on basis element " + std::to_string(j) +
                                            " ('" + labels_[j] + "')");
    }
  }
  // associativity on all basis triples
  long bad = -1;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long ij = 0; ij < n * n; ++ij) {
    const std::size_t i = static_cast<std::size_t>(ij) / n_;
    const std::size_t j = static_cast<std::size_t>(ij) % n_;
    Matrix bij = basis_product(i, j);
    for (std::size_t k = 0; k < n_; ++k) {
      Matrix bjk = basis_product(j, k);
      Matrix ek(field_, n_, 1);
      ek.set_reduced(k, 0, field_.one());
      Matrix lhs = multiply(bij, ek);
      Matrix ei(field_, n_, 1);
      ei.set_reduced(i, 0, field_.one());
      Matrix rhs = multiply(ei, bjk);
      if (lhs != rhs) {
#ifdef _OPENMP
#pragma omp critical
#endif
        {
          if (bad < 0 || ij * n + long(k) < bad) bad = ij * n + long(k);
        }
        break;
      }
    }
  }
  if (bad >= 0) {
    std::size_t k = bad % n_;
    std::size_t j = (bad / n_) % n_;
    std::size_t i = bad / (n_ * n_);
    throw Error(ErrorCode::NotAssociative,
                "associativity fails at basis triple (" + std::to_string(i) + "," +
                    std::to_string(j) + "," + std::to_string(k) + ")");
  }
}

void Algebra::compute_generators() {
  EchelonBuilder span(field_, n_);
  std::vector<Matrix> members;
  auto insert = [&](const Matrix& v) -> bool {
    if (!span.add(v)) return false;
    members.push_back(v);
    return true;
  };
  insert(unit_);
  for (std::size_t i = 0; i < n_ && span.dim() < n_; ++i) {
    Matrix ei(field_, n_, 1);
    ei.set_reduced(i, 0, field_.one());
    if (span.contains(ei)) continue;
    generators_.push_back(i);
    // close under products with everything present
    std::vector<Matrix> fresh{ei};
    insert(ei);
    while (!fresh.empty() && span.dim() < n_) {
      std::vector<Matrix> next;
      for (const Matrix& v : fresh) {
        for (std::size_t w = 0; w < members.size(); ++w) {
          Matrix p = multiply(v, members[w]);
          if (insert(p)) next.push_back(members.back());
          if (span.dim() == n_) break;
          Matrix q = multiply(members[w], v);
          if (insert(q)) next.push_back(members.back());
          if (span.dim() == n_) break;
        }
        if (span.dim() == n_) break;
      }
      fresh = std::move(next);
    }
  }
}

bool Algebra::same_constants(const Algebra& other) const {
  return field_ == other.field_ && n_ == other.n_ && mul_ == other.mul_ &&
         unit_ == other.unit_;
}

void Quiver::validate() const {
  std::set<std::string> vs(vertices.begin(), vertices.end());
  if (vs.size() != vertices.size()) throw Error(ErrorCode::ParseError, "duplicate vertex labels");
  std::set<std::string> as;
  for (const auto& a : arrows) {
    if (!as.insert(a.name).second) throw Error(ErrorCode::ParseError, "duplicate arrow name " + a.name);
    if (a.from >= vertices.size() || a.to >= vertices.size()) {
      throw Error(ErrorCode::ParseError, "arrow endpoint out of range for " + a.name);
    }
  }
}

bool Quiver::is_acyclic() const {
  // Kahn's algorithm on vertices
  std::vector<std::size_t> indeg(vertices.size(), 0);
  for (const auto& a : arrows) ++indeg[a.to];
  std::vector<std::size_t> queue;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (indeg[v] == 0) queue.push_back(v);
  std::size_t seen = 0;
  while (!queue.empty()) {
    std::size_t v = queue.back();
    queue.pop_back();
    ++seen;
    for (const auto& a : arrows) {
      if (a.from == v && --indeg[a.to] == 0) queue.push_back(a.to);
    }
  }
  return seen == vertices.size();
}

AlgebraPtr path_algebra(Field field, const Quiver& q) {
  q.validate();
  if (!q.is_acyclic()) {
    throw Error(ErrorCode::CyclicQuiver, "path algebra requires an acyclic quiver");
  }
  struct Path {
    std::size_t source, target;
    std::vector<std::size_t> arrows;  // traversal order
  };
  std::vector<Path> paths;
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    index[{v, {}}] = paths.size();
    paths.push_back({v, v, {}});
  }
  // extend by length
  std::size_t level_begin = 0, level_end = paths.size();
  while (level_begin < level_end) {
    for (std::size_t p = level_begin; p < level_end; ++p) {
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].from != paths[p].target) continue;
        Path ext = paths[p];
        ext.arrows.push_back(a);
        ext.target = q.arrows[a].to;
        index[{ext.source, ext.arrows}] = paths.size();
        paths.push_back(std::move(ext));
      }
    }
    level_begin = level_end;
    level_end = paths.size();
  }
  const std::size_t n = paths.size();
  std::vector<std::string> labels(n);
  for (std::size_t p = 0; p < n; ++p) {
    if (paths[p].arrows.empty()) {
      labels[p] = "e_" + q.vertices[paths[p].source];
    } else {
      // product-order label, rightmost factor acts first
      std::string s;
      for (std::size_t t = paths[p].arrows.size(); t-- > 0;) {
        if (!s.empty()) s += "*";
        s += q.arrows[paths[p].arrows[t]].name;
      }
      labels[p] = s;
    }
  }
  std::vector<Scalar> mul(n * n * n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // p_i * p_j: traverse p_j first
      if (paths[j].target != paths[i].source) continue;
      std::vector<std::size_t> cat = paths[j].arrows;
      cat.insert(cat.end(), paths[i].arrows.begin(), paths[i].arrows.end());
      auto it = index.find({paths[j].source, cat});
      if (it == index.end()) continue;  // cannot happen in an acyclic quiver
      mul[(i * n + j) * n + it->second] = 1;
    }
  }
  std::vector<Scalar> unit(n, Scalar(0));
  for (std::size_t v = 0; v < q.vertices.size(); ++v) unit[v] = 1;
  return Algebra::make(field, std::move(labels), std::move(mul), std::move(unit),
                       "path algebra");
}

AlgebraPtr matrix_algebra(const AlgebraPtr& a, std::size_t m) {
  if (m < 1) throw Error(ErrorCode::DimensionMismatch, "matrix extension needs n >= 1");
  const std::size_t d = a->dim();
  const std::size_t n = m * m * d;
  const Field& f = a->field();
  auto idx = [&](std::size_t r, std::size_t c, std::size_t t) { return (r * m + c) * d + t; };
  std::vector<std::string> labels(n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t t = 0; t < d; ++t)
        labels[idx(r, c, t)] = "E" + std::to_string(r + 1) + std::to_string(c + 1) + ":" + a->labels()[t];
  std::vector<Scalar> mul(n * n * n, Scalar(0));
  for (std::size_t r1 = 0; r1 < m; ++r1) {
    for (std::size_t c1 = 0; c1 < m; ++c1) {
      for (std::size_t c2 = 0; c2 < m; ++c2) {
        for (std::size_t t1 = 0; t1 < d; ++t1) {
          for (std::size_t t2 = 0; t2 < d; ++t2) {
            // (E_{r1 c1} b_{t1})(E_{c1 c2} b_{t2}) = E_{r1 c2} (b_{t1} b_{t2})
            std::size_t i = idx(r1, c1, t1);
            std::size_t j = idx(c1, c2, t2);
            for (std::size_t k = 0; k < d; ++k) {
              const Scalar& ck = a->c(t1, t2, k);
              if (Field::is_zero(ck)) continue;
              mul[(i * n + j) * n + idx(r1, c2, k)] = ck;
            }
          }
        }
      }
    }
  }
  std::vector<Scalar> unit(n, Scalar(0));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t t = 0; t < d; ++t) unit[idx(r, r, t)] = a->unit().at(t, 0);
  return Algebra::make(f, std::move(labels), std::move(mul), std::move(unit),
                       "M" + std::to_string(m) + "(" + (a->name().empty() ? "A" : a->name()) + ")");
}

AlgebraPtr opposite(const AlgebraPtr& a) {
  const std::size_t n = a->dim();
  std::vector<Scalar> mul(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) mul[(i * n + j) * n + k] = a->c(j, i, k);
  std::vector<Scalar> unit(n);
  for (std::size_t k = 0; k < n; ++k) unit[k] = a->unit().at(k, 0);
  return Algebra::make(a->field(), a->labels(), std::move(mul), std::move(unit),
                       (a->name().empty() ? "A" : a->name()) + "^op");
}

Subspace jacobson_radical(const Algebra& a) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  if (f.is_prime_field() && f.characteristic() <= n) {
    throw Error(ErrorCode::UnsupportedField,
                "trace-form radical needs characteristic 0 or p > dim");
  }
  // Gram matrix of (x, y) -> trace(L_x L_y) on the basis:
  // tr(L_i L_j) = sum_{k,l} c(i,l,k) c(j,k,l).
  Matrix gram(f, n, n);
  const long nn = static_cast<long>(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long li = 0; li < nn; ++li) {
    const std::size_t i = static_cast<std::size_t>(li);
    for (std::size_t j = 0; j < n; ++j) {
      Scalar t = 0;
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          const Scalar& x = a.c(i, l, k);
          if (Field::is_zero(x)) continue;
          const Scalar& y = a.c(j, k, l);
          if (Field::is_zero(y)) continue;
          t = f.add(t, f.mul(x, y));
        }
      }
      gram.set_reduced(i, j, std::move(t));
    }
  }
  return Subspace::span_cols(kernel_basis(gram));
}

std::vector<Subspace> radical_power_chain(const Algebra& a, const Subspace& rad) {
  std::vector<Subspace> chain;
  if (rad.dim() == 0) return chain;
  chain.push_back(rad);
  while (true) {
    const Subspace& prev = chain.back();
    EchelonBuilder next(a.field(), a.dim());
    Matrix radb = rad.basis_cols();
    Matrix prevb = prev.basis_cols();
    for (std::size_t i = 0; i < radb.cols(); ++i) {
      for (std::size_t j = 0; j < prevb.cols(); ++j) {
        next.add(a.multiply(radb.col(i), prevb.col(j)));
      }
    }
    if (next.dim() == 0) break;
    chain.push_back(next.to_subspace());
    if (chain.size() > a.dim() + 1) {
      throw Error(ErrorCode::NotAssociative, "radical is not nilpotent (internal inconsistency)");
    }
  }
  return chain;
}

QuotientAlgebra quotient_by_ideal(const AlgebraPtr& a, const Subspace& ideal) {
  const Field& f = a->field();
  const std::size_t n = a->dim();
  std::vector<std::size_t> free = ideal.free_coords();
  const std::size_t k = free.size();
  Matrix section(f, n, k);
  for (std::size_t c = 0; c < k; ++c) section.set_reduced(free[c], c, f.one());
  Matrix projection(f, k, n);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix ej(f, n, 1);
    ej.set_reduced(j, 0, f.one());
    Matrix red = ideal.reduce(ej);
    for (std::size_t c = 0; c < k; ++c) projection.set_reduced(c, j, red.at(free[c], 0));
  }
  std::vector<Scalar> mul(k * k * k, Scalar(0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Matrix prod = projection.mul(a->multiply(section.col(i), section.col(j)));
      for (std::size_t t = 0; t < k; ++t) mul[(i * k + j) * k + t] = prod.at(t, 0);
    }
  }
  Matrix pu = projection.mul(a->unit());
  std::vector<Scalar> unit(k);
  for (std::size_t t = 0; t < k; ++t) unit[t] = pu.at(t, 0);
  std::vector<std::string> labels(k);
  for (std::size_t c = 0; c < k; ++c) labels[c] = "[" + a->labels()[free[c]] + "]";
  AlgebraPtr q = Algebra::make(f, std::move(labels), std::move(mul), std::move(unit),
                               (a->name().empty() ? "A" : a->name()) + "/I");
  return QuotientAlgebra{std::move(q), std::move(projection), std::move(section)};
}

SubAlgebra subalgebra_on_basis(const AlgebraPtr& a, const Matrix& basis_cols, const Matrix& unit) {
  const Field& f = a->field();
  const std::size_t k = basis_cols.cols();
  if (k == 0) throw Error(ErrorCode::DimensionMismatch, "subalgebra needs a nonzero basis");
  Matrix coords = left_inverse(basis_cols);
  Subspace span = Subspace::span_cols(basis_cols);
  std::vector<Scalar> mul(k * k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Matrix prod = a->multiply(basis_cols.col(i), basis_cols.col(j));
      if (!span.contains(prod)) {
        throw Error(ErrorCode::DimensionMismatch, "subalgebra basis is not closed under products");
      }
      Matrix pc = coords.mul(prod);
      for (std::size_t t = 0; t < k; ++t) mul[(i * k + j) * k + t] = pc.at(t, 0);
    }
  }
  Matrix uc = coords.mul(unit);
  std::vector<Scalar> uvec(k);
  for (std::size_t t = 0; t < k; ++t) uvec[t] = uc.at(t, 0);
  std::vector<std::string> labels(k);
  for (std::size_t t = 0; t < k; ++t) labels[t] = "s" + std::to_string(t);
  AlgebraPtr s = Algebra::make(f, std::move(labels), std::move(mul), std::move(uvec), "corner");
  return SubAlgebra{std::move(s), basis_cols, std::move(coords)};
}

Matrix center_basis(const Algebra& a) {
  const std::size_t n = a.dim();
  const Field& f = a.field();
  Matrix stacked(f, 0, n);
  for (std::size_t i = 0; i < n; ++i) {
    stacked = stacked.vstack(a.left_mul_matrix(i).sub(a.right_mul_matrix(i)));
  }
  return kernel_basis(stacked);
}

}  // namespace halg
