#include "halg/action.hpp"

namespace halg {

AlgebraAutomorphism AlgebraAutomorphism::validate(AlgebraPtr algebra, Matrix images) {
  const Algebra& a = *algebra;
  const std::size_t n = a.dim();
  const Field& f = a.field();
  if (images.rows() != n || images.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "automorphism matrix must be dim x dim");
  }
  Matrix minv(f, 0, 0);
  try {
    minv = halg::inverse(images);
  } catch (const Error&) {
    throw Error(ErrorCode::NotInvertible, "automorphism matrix is singular");
  }
  if (images.mul(a.unit()) != a.unit()) {
    throw Error(ErrorCode::UnitNotFixed, "automorphism does not fix the unit");
  }
  for (std::size_t i = 0; i < n; ++i) {
    Matrix si = images.col(i);
    for (std::size_t j = 0; j < n; ++j) {
      Matrix lhs = images.mul(a.basis_product(i, j));
      Matrix rhs = a.multiply(si, images.col(j));
      if (lhs != rhs) {
        throw Error(ErrorCode::NotMultiplicative,
                    "automorphism not multiplicative at basis pair (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
      }
    }
  }
  return AlgebraAutomorphism(std::move(algebra), std::move(images), std::move(minv));
}

AlgebraAutomorphism AlgebraAutomorphism::compose(const AlgebraAutomorphism& other) const {
  return AlgebraAutomorphism(algebra_, m_.mul(other.m_), other.minv_.mul(minv_));
}

AlgebraAutomorphism AlgebraAutomorphism::inverse() const {
  return AlgebraAutomorphism(algebra_, minv_, m_);
}

GroupActionPtr GroupAction::make(AlgebraPtr algebra, std::vector<std::string> labels,
                                 std::vector<std::vector<std::size_t>> table,
                                 std::size_t identity,
                                 std::vector<AlgebraAutomorphism> images) {
  const std::size_t m = labels.size();
  if (m == 0) throw Error(ErrorCode::NotAGroup, "empty group");
  if (table.size() != m) throw Error(ErrorCode::NotAGroup, "mul_table has wrong size");
  for (const auto& row : table) {
    if (row.size() != m) throw Error(ErrorCode::NotAGroup, "mul_table row has wrong size");
    for (std::size_t v : row)
      if (v >= m) throw Error(ErrorCode::NotAGroup, "mul_table entry out of range");
  }
  if (identity >= m) throw Error(ErrorCode::NotAGroup, "identity index out of range");
  for (std::size_t s = 0; s < m; ++s) {
    if (table[identity][s] != s || table[s][identity] != s) {
      throw Error(ErrorCode::NotAGroup, "identity law fails at element " + std::to_string(s));
    }
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw Error(ErrorCode::NotAGroup, "mul_table is not associative");
        }
  std::vector<std::size_t> inverse(m, m);
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = 0; t < m; ++t) {
      if (table[s][t] == identity && table[t][s] == identity) {
        inverse[s] = t;
        break;
      }
    }
    if (inverse[s] == m) {
      throw Error(ErrorCode::NotAGroup, "element " + std::to_string(s) + " has no inverse");
    }
  }
  if (images.size() != m) throw Error(ErrorCode::NotAHomomorphism, "one automorphism per element required");
  for (const auto& img : images) {
    if (img.algebra().get() != algebra.get()) {
      throw Error(ErrorCode::AlgebraMismatch, "automorphism acts on a different algebra");
    }
  }
  if (!images[identity].is_identity()) {
    throw Error(ErrorCode::NotAHomomorphism, "identity element must act as the identity map");
  }
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = 0; t < m; ++t) {
      if (images[table[s][t]].matrix() != images[s].matrix().mul(images[t].matrix())) {
        throw Error(ErrorCode::NotAHomomorphism,
                    "images do not compose at (" + labels[s] + "," + labels[t] + ")");
      }
    }
  }
  const Field& f = algebra->field();
  if (f.is_prime_field() && m % f.characteristic() == 0) {
    throw Error(ErrorCode::OrderNotInvertible,
                "|G| = " + std::to_string(m) + " is not invertible in " + f.describe());
  }
  return GroupActionPtr(new GroupAction(std::move(algebra), std::move(labels), std::move(table),
                                        identity, std::move(inverse), std::move(images)));
}

GroupActionPtr GroupAction::trivial(const AlgebraPtr& algebra) {
  std::vector<AlgebraAutomorphism> images{
      AlgebraAutomorphism::validate(algebra, Matrix::identity(algebra->field(), algebra->dim()))};
  return make(algebra, {"1"}, {{0}}, 0, std::move(images));
}

GroupActionPtr GroupAction::cyclic(const AlgebraPtr& algebra, const AlgebraAutomorphism& sigma,
                                   std::size_t m, const std::string& generator_label) {
  if (m == 0) throw Error(ErrorCode::NotAGroup, "cyclic group of order 0");
  std::vector<std::string> labels(m);
  std::vector<AlgebraAutomorphism> images;
  images.reserve(m);
  AlgebraAutomorphism id =
      AlgebraAutomorphism::validate(algebra, Matrix::identity(algebra->field(), algebra->dim()));
  AlgebraAutomorphism power = id;
  for (std::size_t k = 0; k < m; ++k) {
    labels[k] = k == 0 ? "1" : (k == 1 ? generator_label : generator_label + "^" + std::to_string(k));
    images.push_back(power);
    power = sigma.compose(power);
  }
  if (!power.is_identity()) {
    throw Error(ErrorCode::NotAHomomorphism, "generator does not have order dividing " + std::to_string(m));
  }
  std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table[i][j] = (i + j) % m;
  return make(algebra, std::move(labels), std::move(table), 0, std::move(images));
}

AlgebraPtr skew_group_algebra(const AlgebraPtr& a, const GroupActionPtr& g) {
  if (g->algebra().get() != a.get()) {
    throw Error(ErrorCode::AlgebraMismatch, "action is not defined on this algebra");
  }
  const std::size_t d = a->dim();
  const std::size_t m = g->size();
  const std::size_t n = m * d;
  const Field& f = a->field();
  auto idx = [&](std::size_t s, std::size_t t) { return s * d + t; };
  std::vector<std::string> labels(n);
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < d; ++t) labels[idx(s, t)] = g->labels()[s] + "|" + a->labels()[t];
  std::vector<Scalar> mul(n * n * n, Scalar(0));
  for (std::size_t s = 0; s < m; ++s) {
    const Matrix& sigma = g->image(s).matrix();
    for (std::size_t t = 0; t < m; ++t) {
      const std::size_t st = g->mul(s, t);
      for (std::size_t bs = 0; bs < d; ++bs) {
        Matrix ebs(f, d, 1);
        ebs.set_reduced(bs, 0, f.one());
        for (std::size_t bt = 0; bt < d; ++bt) {
          // (b_s sigma)(b_t tau) = (b_s sigma(b_t)) sigma tau
          Matrix prod = a->multiply(ebs, sigma.col(bt));
          const std::size_t i = idx(s, bs), j = idx(t, bt);
          for (std::size_t k = 0; k < d; ++k) {
            const Scalar& v = prod.at(k, 0);
            if (!Field::is_zero(v)) mul[(i * n + j) * n + idx(st, k)] = v;
          }
        }
      }
    }
  }
  std::vector<Scalar> unit(n, Scalar(0));
  for (std::size_t t = 0; t < d; ++t) unit[idx(g->identity_index(), t)] = a->unit().at(t, 0);
  return Algebra::make_impl(f, std::move(labels), std::move(mul), std::move(unit),
                            (a->name().empty() ? "A" : a->name()) + "*G",
                            SkewProvenance{a, g});
}

}  // namespace halg
