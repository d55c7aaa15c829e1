#include "halg/field.hpp"

namespace halg {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotUnital: return "NotUnital";
    case ErrorCode::CyclicQuiver: return "CyclicQuiver";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotMultiplicative: return "NotMultiplicative";
    case ErrorCode::UnitNotFixed: return "UnitNotFixed";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::OrderNotInvertible: return "OrderNotInvertible";
    case ErrorCode::NonSplit: return "NonSplit";
    case ErrorCode::LiftingFailed: return "LiftingFailed";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::NotASkewAlgebra: return "NotASkewAlgebra";
    case ErrorCode::DimCapExceeded: return "DimCapExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

bool is_prime_number(unsigned long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (unsigned long d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(unsigned long p) {
  if (!is_prime_number(p)) {
    throw Error(ErrorCode::UnsupportedField,
                "prime field modulus " + std::to_string(p) + " is not prime");
  }
  return Field(Kind::Prime, p);
}

Scalar Field::reduce(const Scalar& x) const {
  Scalar v = x;
  v.canonicalize();
  if (kind_ == Kind::Rationals) return v;
  mpz_class p(p_);
  mpz_class den_inv;
  if (mpz_invert(den_inv.get_mpz_t(), v.get_den().get_mpz_t(), p.get_mpz_t()) == 0) {
    throw Error(ErrorCode::UnsupportedField,
                "denominator not invertible mod " + std::to_string(p_));
  }
  mpz_class r = (v.get_num() * den_inv) % p;
  if (r < 0) r += p;
  return Scalar(r);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Rationals) return a + b;
  Scalar r = a + b;
  if (r.get_num() >= long(p_) || r.get_num() < 0) return reduce(r);
  return r;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Rationals) return a - b;
  return reduce(a - b);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Rationals) return a * b;
  return reduce(a * b);
}

Scalar Field::neg(const Scalar& a) const {
  if (kind_ == Kind::Rationals) return -a;
  return reduce(-a);
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) {
    throw Error(ErrorCode::NotInvertible, "division by zero");
  }
  if (kind_ == Kind::Rationals) return 1 / a;
  mpz_class p(p_);
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), p.get_mpz_t()) == 0) {
    throw Error(ErrorCode::NotInvertible, "element not invertible mod " + std::to_string(p_));
  }
  return Scalar(r);
}

Scalar Field::parse(const std::string& text) const {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty scalar");
  for (char c : text) {
    bool ok = (c >= '0' && c <= '9') || c == '-' || c == '+' || c == '/';
    if (!ok) {
      throw Error(ErrorCode::ParseError,
                  "invalid character in exact scalar '" + text + "' (floats are rejected)");
    }
  }
  Scalar v;
  if (mpq_set_str(v.get_mpq_t(), text.c_str(), 10) != 0) {
    throw Error(ErrorCode::ParseError, "cannot parse exact scalar '" + text + "'");
  }
  if (sgn(Scalar(v.get_den())) == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
  }
  return reduce(v);
}

std::string Field::describe() const {
  if (kind_ == Kind::Rationals) return "Q";
  return "F" + std::to_string(p_);
}

}  // namespace halg
