#include "halg/idempotents.hpp"

#include <random>

namespace halg {

namespace {

constexpr int kMaxRetries = 32;

Matrix basis_vector(const Field& f, std::size_t n, std::size_t i) {
  Matrix v(f, n, 1);
  v.set_reduced(i, 0, f.one());
  return v;
}

// small random coefficient in [-3, 3]; plain modulo keeps runs bit-stable
// across platforms, unlike uniform_int_distribution
long small_coeff(std::mt19937_64& rng) { return long(rng() % 7) - 3; }

bool is_scalar_multiple_of_unit(const Algebra& a, const Matrix& x) {
  const Matrix& u = a.unit();
  // find a coordinate where the unit is nonzero and compare ratios
  std::size_t pivot = a.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!Field::is_zero(u.at(i, 0))) {
      pivot = i;
      break;
    }
  }
  if (pivot == a.dim()) return false;
  Scalar ratio = a.field().div(x.at(pivot, 0), u.at(pivot, 0));
  return x == u.scaled(ratio);
}

// idempotent of Q[t]/mu projecting onto the (t - root)^mult primary
// component, evaluated at x
Matrix primary_idempotent(const Algebra& a, const Polynomial& mu, const Matrix& x,
                          const Scalar& root, std::size_t mult) {
  const Field& f = a.field();
  Polynomial lin(f, {f.neg(root), f.one()});
  Polynomial f1 = Polynomial::constant(f, f.one());
  for (std::size_t k = 0; k < mult; ++k) f1 = f1.mul(lin);
  Polynomial f2 = mu.divmod(f1).first;
  if (mult == 1) {
    // e = f2(x) / f2(root)
    Scalar denom = f2.eval(root);
    Matrix e = eval_in_algebra(a, f2, x);
    return e.scaled(f.inv(denom));
  }
  // xgcd: u f1 + v f2 = 1; the component idempotent is (v f2)(x)
  Polynomial r0 = f1, r1 = f2;
  Polynomial v0 = Polynomial::zero(f), v1 = Polynomial::constant(f, f.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    Polynomial v2 = v0.sub(q.mul(v1));
    r0 = r1;
    r1 = r;
    v0 = v1;
    v1 = v2;
  }
  // r0 = gcd = nonzero constant (f1, f2 coprime); normalize
  Scalar lead = r0.coeffs()[0];
  Polynomial v = v0.mul(Polynomial::constant(f, f.inv(lead)));
  return eval_in_algebra(a, v.mul(f2), x);
}

// All primitive idempotents of a split semisimple commutative algebra.
// Elements of such an algebra have squarefree minimal polynomials that
// split over the field; non-split minimal polynomials are the NonSplit
// signal.
void decompose_commutative(const AlgebraPtr& z, std::mt19937_64& rng,
                           std::vector<Matrix>* out) {
  const Field& f = z->field();
  const std::size_t n = z->dim();
  if (n == 1) {
    out->push_back(z->unit());
    return;
  }
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    Matrix x(f, n, 1);
    if (std::size_t(attempt) < n) {
      x = basis_vector(f, n, attempt);
    } else {
      for (std::size_t i = 0; i < n; ++i) x.set(i, 0, Scalar(small_coeff(rng)));
    }
    if (is_scalar_multiple_of_unit(*z, x)) continue;
    Polynomial mu = minimal_polynomial(*z, x);
    if (mu.degree() < 2) continue;
    RootReport roots = field_roots(mu);
    if (!roots.splits_completely) {
      throw Error(ErrorCode::NonSplit,
                  "center element has minimal polynomial that does not split over " +
                      f.describe() + " (" + mu.str() + ")");
    }
    for (std::size_t r = 0; r < roots.roots.size(); ++r) {
      if (roots.multiplicities[r] != 1) {
        throw Error(ErrorCode::NonSplit,
                    "minimal polynomial not squarefree in commutative semisimple algebra");
      }
    }
    // Lagrange projections, one per eigenvalue; recurse into each piece
    for (const Scalar& root : roots.roots) {
      Matrix e = primary_idempotent(*z, mu, x, root, 1);
      EchelonBuilder span(f, n);
      for (std::size_t i = 0; i < n; ++i) {
        span.add(z->multiply(e, basis_vector(f, n, i)));
      }
      if (span.dim() == 1) {
        out->push_back(e);
        continue;
      }
      Matrix basis = span.basis_rows().transpose();
      SubAlgebra corner = subalgebra_on_basis(z, basis, e);
      std::vector<Matrix> sub;
      decompose_commutative(corner.algebra, rng, &sub);
      for (const Matrix& s : sub) out->push_back(corner.inclusion.mul(s));
    }
    return;
  }
  throw Error(ErrorCode::NonSplit, "no splitting element found in commutative algebra");
}

// Basis columns of the corner e*A*e.
Matrix corner_basis(const Algebra& a, const Matrix& e) {
  const Field& f = a.field();
  EchelonBuilder span(f, a.dim());
  std::vector<Matrix> kept;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Matrix v = a.multiply(e, a.multiply(basis_vector(f, a.dim(), i), e));
    if (span.add(v)) kept.push_back(std::move(v));
  }
  Matrix basis(f, a.dim(), kept.size());
  for (std::size_t c = 0; c < kept.size(); ++c) basis.set_block(0, c, kept[c]);
  return basis;
}

// Full set of orthogonal primitive idempotents of a split simple algebra
// (one Wedderburn block), summing to the unit.
void split_block(const AlgebraPtr& b, std::mt19937_64& rng, std::vector<Matrix>* out) {
  const Field& f = b->field();
  const std::size_t n = b->dim();
  if (n == 1) {
    out->push_back(b->unit());
    return;
  }
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    Matrix x(f, n, 1);
    if (std::size_t(attempt) < n) {
      x = basis_vector(f, n, attempt);
    } else {
      for (std::size_t i = 0; i < n; ++i) x.set(i, 0, Scalar(small_coeff(rng)));
    }
    if (is_scalar_multiple_of_unit(*b, x)) continue;
    Polynomial mu = minimal_polynomial(*b, x);
    if (mu.degree() < 2) continue;
    RootReport roots = field_roots(mu);
    if (roots.roots.empty()) continue;  // no rational eigenvalue; try another element
    Matrix e = primary_idempotent(*b, mu, x, roots.roots[0], roots.multiplicities[0]);
    if (e.is_zero() || e == b->unit()) continue;
    if (b->multiply(e, e) != e) {
      throw Error(ErrorCode::LiftingFailed, "primary component projection is not idempotent");
    }
    Matrix complement = b->unit().sub(e);
    for (const Matrix& half : {e, complement}) {
      Matrix basis = corner_basis(*b, half);
      if (basis.cols() == 1) {
        out->push_back(half);
        continue;
      }
      SubAlgebra corner = subalgebra_on_basis(b, basis, half);
      std::vector<Matrix> sub;
      split_block(corner.algebra, rng, &sub);
      for (const Matrix& s : sub) out->push_back(corner.inclusion.mul(s));
    }
    return;
  }
  throw Error(ErrorCode::NonSplit,
              "no rational splitting element found in a block of dimension " +
                  std::to_string(n) + " after " + std::to_string(kMaxRetries) +
                  " attempts; the block is a division ring larger than the field, "
                  "or retry with another seed");
}

}  // namespace

Polynomial minimal_polynomial(const Algebra& a, const Matrix& x) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  EchelonBuilder span(f, n);
  std::vector<Matrix> powers;
  Matrix p = a.unit();
  while (true) {
    if (!span.add(p)) {
      // dependence: solve powers * c = p
      Matrix mat(f, n, powers.size());
      for (std::size_t c = 0; c < powers.size(); ++c) mat.set_block(0, c, powers[c]);
      auto sol = solve_linear(mat, p);
      if (!sol) throw Error(ErrorCode::LiftingFailed, "minimal polynomial solve failed");
      std::vector<Scalar> coeffs(powers.size() + 1);
      for (std::size_t k = 0; k < powers.size(); ++k) coeffs[k] = f.neg(sol->particular.at(k, 0));
      coeffs[powers.size()] = f.one();
      return Polynomial(f, std::move(coeffs));
    }
    powers.push_back(p);
    p = a.multiply(x, p);
  }
}

Matrix eval_in_algebra(const Algebra& a, const Polynomial& p, const Matrix& x) {
  const Field& f = a.field();
  Matrix acc(f, a.dim(), 1);
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    acc = a.multiply(x, acc);
    if (!Field::is_zero(p.coeffs()[i])) {
      acc = acc.add(a.unit().scaled(p.coeffs()[i]));
    }
  }
  return acc;
}

IdempotentData primitive_idempotents(const AlgebraPtr& a, const Subspace& radical,
                                     std::uint64_t seed) {
  const Field& f = a->field();
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);

  QuotientAlgebra q = quotient_by_ideal(a, radical);
  const AlgebraPtr& s = q.algebra;
  const std::size_t sn = s->dim();

  // 1. primitive idempotents of the center: the block projections
  std::vector<Matrix> central;
  {
    Matrix zbasis = center_basis(*s);
    if (zbasis.cols() == 0) throw Error(ErrorCode::NonSplit, "semisimple quotient has empty center");
    SubAlgebra zalg = subalgebra_on_basis(s, zbasis, s->unit());
    std::vector<Matrix> in_z;
    decompose_commutative(zalg.algebra, rng, &in_z);
    for (const Matrix& e : in_z) central.push_back(zalg.inclusion.mul(e));
  }

  // 2. split each block into a full orthogonal primitive family
  std::vector<Matrix> family_in_s;
  std::vector<std::size_t> block_of;
  for (std::size_t blk = 0; blk < central.size(); ++blk) {
    Matrix basis = corner_basis(*s, central[blk]);
    std::vector<Matrix> in_block;
    if (basis.cols() == 1) {
      in_block.push_back(central[blk]);
    } else {
      SubAlgebra corner = subalgebra_on_basis(s, basis, central[blk]);
      std::vector<Matrix> sub;
      split_block(corner.algebra, rng, &sub);
      for (const Matrix& e : sub) in_block.push_back(corner.inclusion.mul(e));
    }
    for (const Matrix& e : in_block) {
      family_in_s.push_back(e);
      block_of.push_back(blk);
    }
  }

  // orthogonality and completeness in the quotient
  {
    Matrix total(f, sn, 1);
    for (const Matrix& e : family_in_s) total = total.add(e);
    if (total != s->unit()) {
      throw Error(ErrorCode::LiftingFailed, "quotient idempotent family does not sum to 1");
    }
    for (std::size_t i = 0; i < family_in_s.size(); ++i) {
      for (std::size_t j = 0; j < family_in_s.size(); ++j) {
        Matrix p = s->multiply(family_in_s[i], family_in_s[j]);
        if (i == j ? p != family_in_s[i] : !p.is_zero()) {
          throw Error(ErrorCode::LiftingFailed, "quotient family is not orthogonal-idempotent");
        }
      }
    }
  }

  // 3. lift through the radical, orthogonalizing as we go
  std::size_t nil_index = radical_power_chain(*a, radical).size() + 1;
  std::size_t newton_cap = 2;
  while ((std::size_t(1) << newton_cap) < nil_index + 1) ++newton_cap;
  newton_cap += 2;

  const std::size_t n = a->dim();
  std::vector<Matrix> lifted;
  Matrix fsum(f, n, 1);
  for (std::size_t i = 0; i < family_in_s.size(); ++i) {
    Matrix u = q.section.mul(family_in_s[i]);
    Matrix one_minus = a->unit().sub(fsum);
    Matrix e = a->multiply(one_minus, a->multiply(u, one_minus));
    bool ok = false;
    for (std::size_t it = 0; it <= newton_cap; ++it) {
      Matrix e2 = a->multiply(e, e);
      if (e2 == e) {
        ok = true;
        break;
      }
      // 3e^2 - 2e^3
      Matrix e3 = a->multiply(e2, e);
      e = e2.scaled(Scalar(3)).sub(e3.scaled(Scalar(2)));
    }
    if (!ok) throw Error(ErrorCode::LiftingFailed, "idempotent lifting did not converge");
    if (q.projection.mul(e) != family_in_s[i]) {
      throw Error(ErrorCode::LiftingFailed, "lift drifted away from its quotient class");
    }
    lifted.push_back(e);
    fsum = fsum.add(e);
  }
  if (fsum != a->unit()) {
    throw Error(ErrorCode::LiftingFailed, "lifted family does not sum to 1");
  }

  IdempotentData data;
  data.idempotents = std::move(lifted);
  data.block_of = std::move(block_of);
  data.block_count = central.size();
  data.seed = seed;
  for (std::size_t blk = 0; blk < data.block_count; ++blk) {
    for (std::size_t i = 0; i < data.block_of.size(); ++i) {
      if (data.block_of[i] == blk) {
        data.class_representatives.push_back(i);
        break;
      }
    }
  }
  return data;
}

}  // namespace halg
