#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "halg/error.hpp"

namespace halg {

// All scalars are exact. Rationals are GMP rationals in canonical form
// (gcd 1, positive denominator). Prime-field elements are stored as the
// residue 0..p-1 with denominator 1.
using Scalar = mpq_class;

class Field {
 public:
  enum class Kind { Rationals, Prime };

  static Field rationals() { return Field(Kind::Rationals, 0); }
  static Field prime(unsigned long p);

  Kind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == Kind::Prime; }
  unsigned long characteristic() const { return p_; }  // 0 for rationals

  bool operator==(const Field& other) const {
    return kind_ == other.kind_ && p_ == other.p_;
  }
  bool operator!=(const Field& other) const { return !(*this == other); }

  // Canonical member of the field from an arbitrary rational. For prime
  // fields the denominator is inverted mod p (it must be a unit).
  Scalar reduce(const Scalar& x) const;

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_long(long v) const { return reduce(Scalar(v)); }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  static bool is_zero(const Scalar& a) { return sgn(a) == 0; }

  // Canonical text form: "n" or "n/d" with d > 1, gcd(n,d) = 1.
  static std::string str(const Scalar& a) { return a.get_str(); }

  // Accepts "n", "-n", "n/d". Never floats.
  Scalar parse(const std::string& text) const;

  std::string describe() const;

 private:
  Field(Kind kind, unsigned long p) : kind_(kind), p_(p) {}

  Kind kind_;
  unsigned long p_;
};

bool is_prime_number(unsigned long n);

}  // namespace halg
