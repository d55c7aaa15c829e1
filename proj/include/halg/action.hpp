#pragma once

#include "halg/algebra.hpp"

namespace halg {

// Algebra automorphism given by the matrix of basis-element images
// (column j = image of basis element j). Validated at construction:
// invertible, fixes the unit, multiplicative on all basis pairs.
class AlgebraAutomorphism {
 public:
  static AlgebraAutomorphism validate(AlgebraPtr algebra, Matrix images);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Matrix& matrix() const { return m_; }
  const Matrix& inverse_matrix() const { return minv_; }

  Matrix apply(const Matrix& x) const { return m_.mul(x); }
  Matrix apply_inverse(const Matrix& x) const { return minv_.mul(x); }

  bool is_identity() const { return m_.is_identity(); }
  // composition (this after other); inputs are already validated
  AlgebraAutomorphism compose(const AlgebraAutomorphism& other) const;
  AlgebraAutomorphism inverse() const;

 private:
  AlgebraAutomorphism(AlgebraPtr algebra, Matrix m, Matrix minv)
      : algebra_(std::move(algebra)), m_(std::move(m)), minv_(std::move(minv)) {}

  AlgebraPtr algebra_;
  Matrix m_;
  Matrix minv_;
};

// Finite group given by a multiplication table, acting on an algebra by
// validated automorphisms. Construction checks the group axioms, that the
// assignment is a homomorphism sending the identity to the identity map,
// and that |G| is invertible in the base field.
class GroupAction {
 public:
  static GroupActionPtr make(AlgebraPtr algebra, std::vector<std::string> labels,
                             std::vector<std::vector<std::size_t>> table,
                             std::size_t identity, std::vector<AlgebraAutomorphism> images);

  static GroupActionPtr trivial(const AlgebraPtr& algebra);
  // cyclic group of order m generated by sigma (requires sigma^m = id)
  static GroupActionPtr cyclic(const AlgebraPtr& algebra, const AlgebraAutomorphism& sigma,
                               std::size_t m, const std::string& generator_label = "g");

  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t mul(std::size_t s, std::size_t t) const { return table_[s][t]; }
  std::size_t inverse(std::size_t s) const { return inverse_[s]; }
  std::size_t identity_index() const { return identity_; }
  const AlgebraAutomorphism& image(std::size_t s) const { return images_[s]; }

 private:
  GroupAction(AlgebraPtr algebra, std::vector<std::string> labels,
              std::vector<std::vector<std::size_t>> table, std::size_t identity,
              std::vector<std::size_t> inverse, std::vector<AlgebraAutomorphism> images)
      : algebra_(std::move(algebra)),
        labels_(std::move(labels)),
        table_(std::move(table)),
        identity_(identity),
        inverse_(std::move(inverse)),
        images_(std::move(images)) {}

  AlgebraPtr algebra_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_;
  std::vector<std::size_t> inverse_;
  std::vector<AlgebraAutomorphism> images_;
};

// Skew group algebra: free left module over the base with G as basis and
// (x sigma)(y tau) = (x sigma(y)) (sigma tau). Basis pairs (sigma, base
// element), group-major, so the base algebra sits in the identity block.
AlgebraPtr skew_group_algebra(const AlgebraPtr& a, const GroupActionPtr& g);

}  // namespace halg
