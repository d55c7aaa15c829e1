#pragma once

#include <vector>

#include "halg/field.hpp"

namespace halg {

// Dense univariate polynomial; coeffs()[i] is the coefficient of t^i.
class Polynomial {
 public:
  Polynomial(Field field, std::vector<Scalar> coeffs);
  static Polynomial zero(Field field) { return Polynomial(field, {}); }
  static Polynomial constant(Field field, const Scalar& c) { return Polynomial(field, {c}); }

  const Field& field() const { return field_; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is reported as 0
  std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
  const Scalar& leading() const;

  Scalar eval(const Scalar& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;
  Polynomial negated() const;

  Polynomial add(const Polynomial& o) const;
  Polynomial sub(const Polynomial& o) const;
  Polynomial mul(const Polynomial& o) const;
  // euclidean division; o must be nonzero
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& o) const;
  Polynomial gcd(const Polynomial& o) const;  // monic gcd

  bool operator==(const Polynomial& o) const { return c_ == o.c_; }
  std::string str() const;

 private:
  Field field_;
  std::vector<Scalar> c_;
};

struct RootReport {
  std::vector<Scalar> roots;               // distinct roots found in the field
  std::vector<std::size_t> multiplicities; // aligned with roots
  bool splits_completely;                  // true iff p is a product of linear factors
};

// Exact root extraction. Over Q: scale to a monic integer polynomial (whose
// rational roots are integers) and isolate them with Sturm bisection; nothing
// is ever rounded. Over a prime field: scan the residues.
RootReport field_roots(const Polynomial& p);

}  // namespace halg
