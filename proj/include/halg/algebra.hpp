#pragma once

#include <memory>
#include <string>
#include <vector>

#include "halg/subspace.hpp"

namespace halg {

class Algebra;
class GroupAction;
using AlgebraPtr = std::shared_ptr<const Algebra>;
using GroupActionPtr = std::shared_ptr<const GroupAction>;

// Carried by skew group algebras so modules over them can be restricted
// along the canonical embedding of the base algebra.
struct SkewProvenance {
  AlgebraPtr base;
  GroupActionPtr action;
};

// Finite-dimensional associative unital algebra over an exact field, given
// by structure constants on a fixed basis. Construction validates
// associativity on all basis triples and the two-sided unit law; instances
// are immutable afterwards.
class Algebra {
 public:
  // mul is flat, entry ((i*n + j)*n + k) = coefficient of basis k in b_i b_j.
  static AlgebraPtr make(Field field, std::vector<std::string> labels,
                         std::vector<Scalar> mul, std::vector<Scalar> unit,
                         std::string name = "");

  const Field& field() const { return field_; }
  std::size_t dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }

  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return mul_[(i * n_ + j) * n_ + k];
  }
  const Matrix& unit() const { return unit_; }

  // product of two coefficient vectors (n x 1 columns)
  Matrix multiply(const Matrix& x, const Matrix& y) const;
  // b_i b_j as a coefficient vector
  Matrix basis_product(std::size_t i, std::size_t j) const;
  // matrix of left multiplication by basis element i
  Matrix left_mul_matrix(std::size_t i) const;
  Matrix right_mul_matrix(std::size_t i) const;
  // matrix of left/right multiplication by an arbitrary element
  Matrix left_action(const Matrix& x) const;
  Matrix right_action(const Matrix& x) const;

  // small set of basis indices generating the algebra with 1 (greedy)
  const std::vector<std::size_t>& generators() const { return generators_; }

  const SkewProvenance* skew_provenance() const {
    return skew_ ? &*skew_ : nullptr;
  }

  bool same_constants(const Algebra& other) const;

 private:
  friend AlgebraPtr skew_group_algebra(const AlgebraPtr&, const GroupActionPtr&);

  Algebra(Field field, std::vector<std::string> labels, std::vector<Scalar> mul,
          Matrix unit, std::string name);

  static AlgebraPtr make_impl(Field field, std::vector<std::string> labels,
                              std::vector<Scalar> mul, std::vector<Scalar> unit,
                              std::string name, std::optional<SkewProvenance> skew);

  void validate() const;
  void compute_generators();

  Field field_;
  std::size_t n_;
  std::vector<std::string> labels_;
  std::vector<Scalar> mul_;
  Matrix unit_;
  std::string name_;
  std::vector<std::size_t> generators_;
  std::optional<SkewProvenance> skew_;
};

struct Arrow {
  std::string name;
  std::size_t from;
  std::size_t to;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  void validate() const;
  bool is_acyclic() const;
};

// Path algebra of an acyclic quiver. Basis: all paths, trivial paths first,
// then by length in discovery order. Products compose right to left:
// p*q traverses q first. Left modules are therefore representations with
// arrows acting forwards.
AlgebraPtr path_algebra(Field field, const Quiver& q);

// n x n matrices over a; basis (row, col, base element), position-major.
AlgebraPtr matrix_algebra(const AlgebraPtr& a, std::size_t n);

AlgebraPtr opposite(const AlgebraPtr& a);

// Dickson trace-form criterion; requires char 0 or p > dim.
Subspace jacobson_radical(const Algebra& a);

// rad ⊇ rad^2 ⊇ ... down to (and excluding) zero.
std::vector<Subspace> radical_power_chain(const Algebra& a, const Subspace& rad);

struct QuotientAlgebra {
  AlgebraPtr algebra;
  Matrix projection;  // k x n
  Matrix section;     // n x k, projection * section = identity
};
QuotientAlgebra quotient_by_ideal(const AlgebraPtr& a, const Subspace& ideal);

struct SubAlgebra {
  AlgebraPtr algebra;
  Matrix inclusion;   // n x k, columns are basis vectors in the ambient algebra
  Matrix coordinates; // k x n, coordinates * inclusion = identity
};
// Unital subalgebra on an explicit basis (must be closed under products and
// contain its own unit `unit`).
SubAlgebra subalgebra_on_basis(const AlgebraPtr& a, const Matrix& basis_cols,
                               const Matrix& unit);

// basis of the centralizer {z : zx = xz for all x}
Matrix center_basis(const Algebra& a);

std::size_t max_algebra_dim();  // HALG_MAX_DIM, default 512

}  // namespace halg
