#include <doctest.h>

#include "halg/corpus.hpp"
#include "halg/idempotents.hpp"

using namespace halg;

namespace {

IdempotentData idempotents_of(const AlgebraPtr& a, std::uint64_t seed = 0) {
  return primitive_idempotents(a, jacobson_radical(*a), seed);
}

void check_family(const AlgebraPtr& a, const IdempotentData& data) {
  const Field& f = a->field();
  Matrix sum(f, a->dim(), 1);
  for (const Matrix& e : data.idempotents) sum = sum.add(e);
  CHECK(sum == a->unit());
  for (std::size_t i = 0; i < data.idempotents.size(); ++i) {
    for (std::size_t j = 0; j < data.idempotents.size(); ++j) {
      Matrix p = a->multiply(data.idempotents[i], data.idempotents[j]);
      if (i == j) {
        CHECK(p == data.idempotents[i]);
      } else {
        CHECK(p.is_zero());
      }
    }
  }
}

}  // namespace

TEST_CASE("the field itself has the single idempotent 1") {
  AlgebraPtr k = Algebra::make(Field::rationals(), {"1"}, {Scalar(1)}, {Scalar(1)});
  IdempotentData data = idempotents_of(k);
  REQUIRE(data.idempotents.size() == 1);
  CHECK(data.idempotents[0] == k->unit());
  CHECK(data.block_count == 1);
}

TEST_CASE("A2: the trivial paths are the primitive idempotents") {
  CorpusEntry a2 = corpus_entry("a2");
  IdempotentData data = idempotents_of(a2.algebra);
  REQUIRE(data.idempotents.size() == 2);
  CHECK(data.block_count == 2);
  check_family(a2.algebra, data);
  // each idempotent is a trivial path e_1 or e_2
  for (const Matrix& e : data.idempotents) {
    bool is_e1 = e == Matrix::from_int_rows(a2.algebra->field(), {{1}, {0}, {0}});
    bool is_e2 = e == Matrix::from_int_rows(a2.algebra->field(), {{0}, {1}, {0}});
    CHECK((is_e1 || is_e2));
  }
}

TEST_CASE("Example 2.8 skew: 4 primitive idempotents in 3 classes") {
  CorpusEntry e = corpus_entry("example2.8");
  IdempotentData data = idempotents_of(e.skew);
  CHECK(data.idempotents.size() == 4);
  CHECK(data.block_count == 3);
  check_family(e.skew, data);
  // block sizes: two classes of one idempotent, one class of two
  std::vector<std::size_t> per_block(data.block_count, 0);
  for (std::size_t b : data.block_of) ++per_block[b];
  std::size_t ones = 0, twos = 0;
  for (std::size_t c : per_block) {
    if (c == 1) ++ones;
    if (c == 2) ++twos;
  }
  CHECK(ones == 2);
  CHECK(twos == 1);
}

TEST_CASE("matrix extensions: n^2 idempotents per base class, same class count") {
  CorpusEntry kx2 = corpus_entry("kx2");
  AlgebraPtr m2 = matrix_algebra(kx2.algebra, 2);
  IdempotentData data = idempotents_of(m2);
  CHECK(data.block_count == 1);
  CHECK(data.idempotents.size() == 2);  // M2 has a full set of 2 orthogonal primitives
  check_family(m2, data);

  CorpusEntry a2 = corpus_entry("a2");
  AlgebraPtr m2a = matrix_algebra(a2.algebra, 2);
  IdempotentData d2 = idempotents_of(m2a);
  CHECK(d2.block_count == 2);
  CHECK(d2.idempotents.size() == 4);
  check_family(m2a, d2);
}

TEST_CASE("semisimple skew of three points by Z/3 is M3(Q)") {
  CorpusEntry z3 = corpus_entry("threepoints-z3");
  CHECK(jacobson_radical(*z3.skew).dim() == 0);
  IdempotentData data = idempotents_of(z3.skew);
  CHECK(data.block_count == 1);       // one Wedderburn block
  CHECK(data.idempotents.size() == 3);  // of size 3x3
  check_family(z3.skew, data);
}

TEST_CASE("lifting respects the radical: idempotents of M2(k[x]/(x^2))") {
  CorpusEntry kx2 = corpus_entry("kx2");
  AlgebraPtr m2 = matrix_algebra(kx2.algebra, 2);
  IdempotentData data = idempotents_of(m2);
  check_family(m2, data);
  // tops are 1-dimensional corners: e (A/rad) e has dim 1 for each primitive e
  Subspace rad = jacobson_radical(*m2);
  QuotientAlgebra q = quotient_by_ideal(m2, rad);
  for (const Matrix& e : data.idempotents) {
    Matrix ebar = q.projection.mul(e);
    // corner dimension in the quotient
    EchelonBuilder span(m2->field(), q.algebra->dim());
    for (std::size_t i = 0; i < q.algebra->dim(); ++i) {
      Matrix ei(m2->field(), q.algebra->dim(), 1);
      ei.set(i, 0, Scalar(1));
      span.add(q.algebra->multiply(ebar, q.algebra->multiply(ei, ebar)));
    }
    CHECK(span.dim() == 1);
  }
}

TEST_CASE("NonSplit detection: group algebra of Z/3 over Q") {
  // trivial Z/3 action: the skew algebra is Q[Z/3] = Q x Q(omega), not split
  CorpusEntry kx2 = corpus_entry("kx2");
  Matrix id2 = Matrix::identity(kx2.algebra->field(), 2);
  AlgebraAutomorphism id = AlgebraAutomorphism::validate(kx2.algebra, id2);
  GroupActionPtr z3 = GroupAction::cyclic(kx2.algebra, id, 3);
  AlgebraPtr skew = skew_group_algebra(kx2.algebra, z3);
  CHECK_THROWS_WITH_AS(idempotents_of(skew), doctest::Contains("NonSplit"), Error);
}

TEST_CASE("NonSplit detection: rational quaternions are a division block") {
  // basis 1, i, j, k; i^2 = j^2 = k^2 = -1, ij = k = -ji, jk = i = -kj, ki = j = -ik
  Field q = Field::rationals();
  std::size_t n = 4;
  std::vector<Scalar> mul(n * n * n, Scalar(0));
  auto set = [&](std::size_t a, std::size_t b, std::size_t c, long v) {
    mul[(a * n + b) * n + c] = Scalar(v);
  };
  for (std::size_t t = 0; t < 4; ++t) {
    set(0, t, t, 1);
    if (t > 0) set(t, 0, t, 1);
  }
  set(1, 1, 0, -1);
  set(2, 2, 0, -1);
  set(3, 3, 0, -1);
  set(1, 2, 3, 1);
  set(2, 1, 3, -1);
  set(2, 3, 1, 1);
  set(3, 2, 1, -1);
  set(3, 1, 2, 1);
  set(1, 3, 2, -1);
  AlgebraPtr quat = Algebra::make(q, {"1", "i", "j", "k"}, std::move(mul),
                                  {Scalar(1), Scalar(0), Scalar(0), Scalar(0)});
  CHECK(jacobson_radical(*quat).dim() == 0);
  CHECK_THROWS_WITH_AS(idempotents_of(quat), doctest::Contains("NonSplit"), Error);
}

TEST_CASE("idempotent extraction is deterministic for a fixed seed") {
  CorpusEntry e = corpus_entry("example2.8");
  IdempotentData a = idempotents_of(e.skew, 5);
  IdempotentData b = idempotents_of(e.skew, 5);
  REQUIRE(a.idempotents.size() == b.idempotents.size());
  for (std::size_t i = 0; i < a.idempotents.size(); ++i) {
    CHECK(a.idempotents[i] == b.idempotents[i]);
  }
}
