#include <doctest.h>

#include "halg/corpus.hpp"

using namespace halg;

namespace {

// dense table helper: terms (i, j, k, coeff)
std::vector<Scalar> table(std::size_t n,
                          std::initializer_list<std::array<long, 4>> terms) {
  std::vector<Scalar> mul(n * n * n, Scalar(0));
  for (const auto& t : terms) {
    mul[(std::size_t(t[0]) * n + std::size_t(t[1])) * n + std::size_t(t[2])] = Scalar(t[3]);
  }
  return mul;
}

}  // namespace

TEST_CASE("structure constant validation") {
  Field q = Field::rationals();
  // k[x]/(x^2) validates
  AlgebraPtr a = Algebra::make(
      q, {"1", "x"}, table(2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}}), {Scalar(1), Scalar(0)});
  CHECK(a->dim() == 2);

  // wrong unit claim: x*x = 1 with unit = 1 fails the unit law... build a
  // table where the claimed unit is not a two-sided identity
  CHECK_THROWS_WITH_AS(
      Algebra::make(q, {"1", "x"}, table(2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}}),
                    {Scalar(0), Scalar(1)}),
      doctest::Contains("NotUnital"), Error);

  // genuinely non-associative: x*x = y, x*y = e, y*x = 0
  // then (x*x)*x = y*x = 0 but x*(x*x) = x*y = e
  CHECK_THROWS_WITH_AS(
      Algebra::make(q, {"e", "x", "y"},
                    table(3, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {0, 2, 2, 1},
                              {2, 0, 2, 1}, {1, 1, 2, 1}, {1, 2, 0, 1}}),
                    {Scalar(1), Scalar(0), Scalar(0)}),
      doctest::Contains("NotAssociative"), Error);
}

TEST_CASE("M2(Q) from matrix units") {
  // basis e11, e12, e21, e22: e_{ab} e_{cd} = delta_{bc} e_{ad}
  Field q = Field::rationals();
  std::size_t n = 4;
  auto idx = [](std::size_t r, std::size_t c) { return r * 2 + c; };
  std::vector<Scalar> mul(n * n * n, Scalar(0));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 2; ++d)
          if (b == c) mul[(idx(a, b) * n + idx(c, d)) * n + idx(a, d)] = 1;
  std::vector<Scalar> unit(n, Scalar(0));
  unit[idx(0, 0)] = 1;
  unit[idx(1, 1)] = 1;
  AlgebraPtr m2 = Algebra::make(q, {"e11", "e12", "e21", "e22"}, std::move(mul), std::move(unit));
  CHECK(m2->dim() == 4);
  CHECK(jacobson_radical(*m2).dim() == 0);  // semisimple
}

TEST_CASE("path algebra of Example 2.8 and friends") {
  CorpusEntry e = corpus_entry("example2.8");
  CHECK(e.algebra->dim() == 5);

  CorpusEntry a2 = corpus_entry("a2");
  CHECK(a2.algebra->dim() == 3);

  // single vertex, no arrows: the base field
  Quiver pt;
  pt.vertices = {"v"};
  AlgebraPtr k = path_algebra(Field::rationals(), pt);
  CHECK(k->dim() == 1);

  // cyclic quivers are rejected
  Quiver loop;
  loop.vertices = {"1", "2"};
  loop.arrows = {Arrow{"a", 0, 1}, Arrow{"b", 1, 0}};
  CHECK_THROWS_WITH_AS(path_algebra(Field::rationals(), loop), doctest::Contains("CyclicQuiver"),
                       Error);
}

TEST_CASE("path algebra composition convention: p*q means q first") {
  // 1 -a-> 2 -b-> 3: the composite path is b*a, and b*a = b . a in the algebra
  Quiver q;
  q.vertices = {"1", "2", "3"};
  q.arrows = {Arrow{"a", 0, 1}, Arrow{"b", 1, 2}};
  AlgebraPtr a = path_algebra(Field::rationals(), q);
  REQUIRE(a->dim() == 6);  // e1,e2,e3,a,b,b*a
  CHECK(a->labels()[5] == "b*a");
  // basis order: 0..2 trivial, 3 = a, 4 = b, 5 = b*a
  Matrix prod = a->basis_product(4, 3);  // b . a
  Matrix expect(a->field(), 6, 1);
  expect.set(5, 0, Scalar(1));
  CHECK(prod == expect);
  // a . b = 0 (not composable in this order)
  CHECK(a->basis_product(3, 4).is_zero());
}

TEST_CASE("matrix extension dimensions and semisimplicity") {
  CorpusEntry kx2 = corpus_entry("kx2");
  AlgebraPtr m1 = matrix_algebra(kx2.algebra, 1);
  CHECK(m1->dim() == 2);
  CHECK(m1->same_constants(*kx2.algebra));

  AlgebraPtr m2 = matrix_algebra(kx2.algebra, 2);
  CHECK(m2->dim() == 8);
  // radical of M2(k[x]/(x^2)) is x*M2, dimension 4 (trace-form oracle)
  CHECK(jacobson_radical(*m2).dim() == 4);

  CorpusEntry a2 = corpus_entry("a2");
  CHECK(matrix_algebra(a2.algebra, 3)->dim() == 27);
}

TEST_CASE("radical examples and properties") {
  CorpusEntry kx2 = corpus_entry("kx2");
  Subspace rad = jacobson_radical(*kx2.algebra);
  REQUIRE(rad.dim() == 1);
  // spanned by x
  Matrix x(kx2.algebra->field(), 2, 1);
  x.set(1, 0, Scalar(1));
  CHECK(rad.contains(x));

  // radical of an acyclic path algebra is spanned by the arrows
  CorpusEntry e28 = corpus_entry("example2.8");
  Subspace rad28 = jacobson_radical(*e28.algebra);
  CHECK(rad28.dim() == 2);
  for (std::size_t arrow : {3u, 4u}) {
    Matrix v(e28.algebra->field(), 5, 1);
    v.set(arrow, 0, Scalar(1));
    CHECK(rad28.contains(v));
  }

  // nilpotency: the power chain reaches zero
  auto chain = radical_power_chain(*e28.algebra, rad28);
  CHECK(chain.size() == 1);  // rad^2 = 0 here

  // quotient by the radical is semisimple: radical of the quotient is zero
  QuotientAlgebra qa = quotient_by_ideal(e28.algebra, rad28);
  CHECK(qa.algebra->dim() == 3);
  CHECK(jacobson_radical(*qa.algebra).dim() == 0);

  // prime field small characteristic is rejected by the trace criterion
  Field f2 = Field::prime(2);
  AlgebraPtr tiny = Algebra::make(f2, {"1"}, {Scalar(1)}, {Scalar(1)});
  CHECK_THROWS_WITH_AS(jacobson_radical(*tiny), doctest::Contains("UnsupportedField"), Error);
}

TEST_CASE("opposite is an involution and transposes products") {
  CorpusEntry e28 = corpus_entry("example2.8");
  AlgebraPtr op = opposite(e28.algebra);
  CHECK(op->dim() == e28.algebra->dim());
  AlgebraPtr opop = opposite(op);
  CHECK(opop->same_constants(*e28.algebra));

  // commutative algebra: opposite has the identical table
  CorpusEntry kx2 = corpus_entry("kx2");
  CHECK(opposite(kx2.algebra)->same_constants(*kx2.algebra));

  // opposite of A2 is the path algebra of the reversed quiver
  Quiver rev;
  rev.vertices = {"1", "2"};
  rev.arrows = {Arrow{"a", 1, 0}};
  AlgebraPtr reva = path_algebra(Field::rationals(), rev);
  CorpusEntry a2 = corpus_entry("a2");
  AlgebraPtr a2op = opposite(a2.algebra);
  CHECK(reva->dim() == a2op->dim());
  CHECK(jacobson_radical(*reva).dim() == jacobson_radical(*a2op).dim());
}

TEST_CASE("generators are small and generate") {
  CorpusEntry e28 = corpus_entry("example2.8");
  CHECK(e28.algebra->generators().size() <= 4);
  AlgebraPtr m3 = matrix_algebra(e28.algebra, 3);
  CHECK(m3->generators().size() <= 8);
}

TEST_CASE("dimension cap is enforced") {
  // HALG_MAX_DIM defaults to 512; a 3x3 extension of a dim-64 algebra is
  // 576 > 512
  Quiver big;
  for (int i = 0; i < 64; ++i) big.vertices.push_back("v" + std::to_string(i));
  AlgebraPtr base = path_algebra(Field::rationals(), big);
  CHECK_THROWS_WITH_AS(matrix_algebra(base, 3), doctest::Contains("DimCapExceeded"), Error);
}
