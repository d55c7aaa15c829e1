#include "halg/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace halg {

Polynomial::Polynomial(Field field, std::vector<Scalar> coeffs)
    : field_(field), c_(std::move(coeffs)) {
  for (auto& v : c_) v = field_.reduce(v);
  while (!c_.empty() && Field::is_zero(c_.back())) c_.pop_back();
}

const Scalar& Polynomial::leading() const {
  if (c_.empty()) throw Error(ErrorCode::DimensionMismatch, "leading coefficient of zero polynomial");
  return c_.back();
}

Scalar Polynomial::eval(const Scalar& x) const {
  Scalar acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = field_.add(field_.mul(acc, x), c_[i]);
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return zero(field_);
  std::vector<Scalar> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = field_.mul(c_[i], Scalar(long(i)));
  return Polynomial(field_, std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Scalar li = field_.inv(leading());
  std::vector<Scalar> d(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) d[i] = field_.mul(c_[i], li);
  return Polynomial(field_, std::move(d));
}

Polynomial Polynomial::negated() const {
  std::vector<Scalar> d(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) d[i] = field_.neg(c_[i]);
  return Polynomial(field_, std::move(d));
}

Polynomial Polynomial::add(const Polynomial& o) const {
  std::vector<Scalar> d(std::max(c_.size(), o.c_.size()), Scalar(0));
  for (std::size_t i = 0; i < d.size(); ++i) {
    Scalar a = i < c_.size() ? c_[i] : Scalar(0);
    Scalar b = i < o.c_.size() ? o.c_[i] : Scalar(0);
    d[i] = field_.add(a, b);
  }
  return Polynomial(field_, std::move(d));
}

Polynomial Polynomial::sub(const Polynomial& o) const { return add(o.negated()); }

Polynomial Polynomial::mul(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return zero(field_);
  std::vector<Scalar> d(c_.size() + o.c_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (Field::is_zero(c_[i])) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      d[i + j] = field_.add(d[i + j], field_.mul(c_[i], o.c_[j]));
    }
  }
  return Polynomial(field_, std::move(d));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& o) const {
  if (o.is_zero()) throw Error(ErrorCode::DimensionMismatch, "polynomial division by zero");
  std::vector<Scalar> rem = c_;
  std::vector<Scalar> quo(rem.size() >= o.c_.size() ? rem.size() - o.c_.size() + 1 : 0, Scalar(0));
  Scalar lead_inv = field_.inv(o.leading());
  while (rem.size() >= o.c_.size()) {
    while (!rem.empty() && Field::is_zero(rem.back())) rem.pop_back();
    if (rem.size() < o.c_.size()) break;
    std::size_t shift = rem.size() - o.c_.size();
    Scalar q = field_.mul(rem.back(), lead_inv);
    quo[shift] = q;
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
      rem[shift + i] = field_.sub(rem[shift + i], field_.mul(q, o.c_[i]));
    }
  }
  return {Polynomial(field_, std::move(quo)), Polynomial(field_, std::move(rem))};
}

Polynomial Polynomial::gcd(const Polynomial& o) const {
  Polynomial a = *this, b = o;
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = b;
    b = r;
  }
  return a.is_zero() ? a : a.monic();
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (Field::is_zero(c_[i])) continue;
    if (os.tellp() > 0) os << " + ";
    os << Field::str(c_[i]);
    if (i > 0) os << "*t^" << i;
  }
  return os.str();
}

namespace {

// Sign variation count of the Sturm chain at x.
int sturm_variations(const std::vector<Polynomial>& chain, const Scalar& x) {
  int vars = 0, prev = 0;
  for (const auto& p : chain) {
    int s = sgn(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++vars;
    prev = s;
  }
  return vars;
}

// Distinct integer roots of a squarefree monic integer polynomial, found by
// Sturm bisection down to unit intervals plus exact verification.
void integer_roots_sturm(const Polynomial& p, std::vector<mpz_class>* out) {
  Polynomial sf = p;
  Polynomial g = p.gcd(p.derivative());
  if (g.degree() > 0) sf = p.divmod(g).first.monic();

  std::vector<Polynomial> chain;
  chain.push_back(sf);
  chain.push_back(sf.derivative());
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    Polynomial r = chain[chain.size() - 2].divmod(chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(r.negated());
  }

  // Cauchy bound: all real roots lie in [-B, B].
  mpq_class maxabs = 0;
  for (const auto& c : sf.coeffs()) {
    mpq_class a = abs(c);
    if (a > maxabs) maxabs = a;
  }
  mpz_class bound = mpz_class(maxabs.get_num() / maxabs.get_den()) + 2;

  struct Range { mpz_class lo, hi; };
  std::vector<Range> work;
  work.push_back({-bound, bound});
  while (!work.empty()) {
    Range r = work.back();
    work.pop_back();
    int count = sturm_variations(chain, Scalar(r.lo)) - sturm_variations(chain, Scalar(r.hi));
    if (count <= 0) continue;
    if (r.hi - r.lo == 1) {
      // only integer candidate in (lo, hi] is hi; an irrational root in the
      // open interval simply fails the exact check
      if (Field::is_zero(sf.eval(Scalar(r.hi)))) out->push_back(r.hi);
      continue;
    }
    mpz_class mid = (r.lo + r.hi) / 2;
    work.push_back({r.lo, mid});
    work.push_back({mid, r.hi});
  }
  std::sort(out->begin(), out->end());
}

RootReport roots_over_rationals(const Polynomial& p) {
  // Monic p with rational coefficients: substitute t = u/D and scale so all
  // rational roots become integer roots of a monic integer polynomial.
  Polynomial m = p.monic();
  mpz_class den_lcm = 1;
  for (const auto& c : m.coeffs()) {
    mpz_class d = c.get_den();
    den_lcm = lcm(den_lcm, d);
  }
  std::size_t deg = m.degree();
  std::vector<Scalar> scaled(deg + 1);
  mpq_class power = 1;
  for (std::size_t k = 0; k <= deg; ++k) {
    // coefficient of u^(deg-k) is a_{deg-k} * D^k
    scaled[deg - k] = m.coeffs()[deg - k] * power;
    power *= den_lcm;
  }
  Polynomial pint(Field::rationals(), std::move(scaled));

  std::vector<mpz_class> int_roots;
  integer_roots_sturm(pint, &int_roots);

  RootReport rep;
  Polynomial rest = m;
  for (const auto& u : int_roots) {
    Scalar root = Scalar(u) / Scalar(den_lcm);
    std::size_t mult = 0;
    Polynomial lin(Field::rationals(), {Scalar(-root), Scalar(1)});
    while (true) {
      auto [q, r] = rest.divmod(lin);
      if (!r.is_zero()) break;
      rest = q;
      ++mult;
    }
    if (mult > 0) {
      rep.roots.push_back(root);
      rep.multiplicities.push_back(mult);
    }
  }
  rep.splits_completely = rest.degree() == 0;
  return rep;
}

RootReport roots_over_prime_field(const Polynomial& p) {
  const Field& f = p.field();
  unsigned long q = f.characteristic();
  if (q > 1000000) {
    throw Error(ErrorCode::UnsupportedField, "prime-field root scan capped at p <= 10^6");
  }
  RootReport rep;
  Polynomial rest = p.monic();
  for (unsigned long r = 0; r < q && rest.degree() > 0; ++r) {
    Scalar root{long(r)};
    if (!Field::is_zero(rest.eval(root))) continue;
    std::size_t mult = 0;
    Polynomial lin(f, {f.neg(root), f.one()});
    while (true) {
      auto [quo, rem] = rest.divmod(lin);
      if (!rem.is_zero()) break;
      rest = quo;
      ++mult;
    }
    rep.roots.push_back(root);
    rep.multiplicities.push_back(mult);
  }
  rep.splits_completely = rest.degree() == 0;
  return rep;
}

}  // namespace

RootReport field_roots(const Polynomial& p) {
  if (p.is_zero() || p.degree() == 0) {
    return RootReport{{}, {}, true};
  }
  if (p.field().kind() == Field::Kind::Rationals) return roots_over_rationals(p);
  return roots_over_prime_field(p);
}

}  // namespace halg
