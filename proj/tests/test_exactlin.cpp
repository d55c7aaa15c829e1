#include <doctest.h>

#include <random>

#include "halg/subspace.hpp"

using namespace halg;

namespace {

Matrix random_matrix(Field f, std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                     int density_pct = 70) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (long(rng() % 100) >= density_pct) continue;
      long num = long(rng() % 21) - 10;
      long den = 1 + long(rng() % 4);
      m.set(i, j, Scalar(num) / Scalar(den));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("field arithmetic is exact and canonical") {
  Field q = Field::rationals();
  CHECK(Field::str(q.parse("2/4")) == "1/2");
  CHECK(Field::str(q.parse("-6/4")) == "-3/2");
  CHECK(Field::str(q.add(Scalar(1) / Scalar(3), Scalar(1) / Scalar(6))) == "1/2");
  CHECK_THROWS_AS(q.parse("1.5"), Error);
  CHECK_THROWS_AS(q.parse("x"), Error);

  Field f7 = Field::prime(7);
  CHECK(Field::str(f7.parse("10")) == "3");
  CHECK(Field::str(f7.parse("1/2")) == "4");  // 2 * 4 = 8 = 1 mod 7
  CHECK(Field::str(f7.inv(Scalar(3))) == "5");
  CHECK_THROWS_AS(Field::prime(6), Error);
}

TEST_CASE("rref canonical examples") {
  Field q = Field::rationals();

  auto id2 = rref(Matrix::identity(q, 2));
  CHECK(id2.rank == 2);
  CHECK(id2.pivots == std::vector<std::size_t>{0, 1});
  CHECK(id2.reduced == Matrix::identity(q, 2));

  auto z3 = rref(Matrix::zero(q, 3, 3));
  CHECK(z3.rank == 0);
  CHECK(z3.pivots.empty());
  CHECK(z3.reduced.is_zero());

  // hand elimination: [[1,2],[2,4]] -> [[1,2],[0,0]]
  auto r = rref(Matrix::from_int_rows(q, {{1, 2}, {2, 4}}));
  CHECK(r.rank == 1);
  CHECK(r.reduced == Matrix::from_int_rows(q, {{1, 2}, {0, 0}}));
}

TEST_CASE("kernel_basis examples") {
  Field q = Field::rationals();
  CHECK(kernel_basis(Matrix::identity(q, 3)).cols() == 0);
  CHECK(kernel_basis(Matrix::zero(q, 2, 3)).cols() == 3);

  // hand solve: kernel of [[1,2],[2,4]] spanned by (-2, 1)
  Matrix k = kernel_basis(Matrix::from_int_rows(q, {{1, 2}, {2, 4}}));
  REQUIRE(k.cols() == 1);
  CHECK(k == Matrix::from_int_rows(q, {{-2}, {1}}));
}

TEST_CASE("solve_linear examples") {
  Field q = Field::rationals();
  Matrix b = Matrix::from_int_rows(q, {{3}, {1}});
  auto sol = solve_linear(Matrix::identity(q, 2), b);
  REQUIRE(sol.has_value());
  CHECK(sol->particular == b);

  CHECK_FALSE(solve_linear(Matrix::zero(q, 2, 2), b).has_value());

  // back substitution: [[1,1],[0,1]] x = (3,1) -> x = (2,1)
  auto tri = solve_linear(Matrix::from_int_rows(q, {{1, 1}, {0, 1}}), b);
  REQUIRE(tri.has_value());
  CHECK(tri->particular == Matrix::from_int_rows(q, {{2}, {1}}));
  CHECK(tri->kernel.cols() == 0);

  CHECK_THROWS_AS(solve_linear(Matrix::identity(q, 3), b), Error);
}

TEST_CASE("kronecker examples") {
  Field q = Field::rationals();
  CHECK(kronecker(Matrix::identity(q, 2), Matrix::identity(q, 3)) == Matrix::identity(q, 6));

  Matrix a = Matrix::from_int_rows(q, {{1, -2}, {3, 5}});
  Matrix c = Matrix::from_int_rows(q, {{4}});
  CHECK(kronecker(a, c) == a.scaled(Scalar(4)));

  // [[0,1],[0,0]] ⊗ I2 has the identity block in the upper right
  Matrix n = Matrix::from_int_rows(q, {{0, 1}, {0, 0}});
  Matrix expect = Matrix::from_int_rows(q, {{0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  CHECK(kronecker(n, Matrix::identity(q, 2)) == expect);
}

TEST_CASE("rank-nullity, idempotence, exact kernels on random matrices") {
  std::mt19937_64 rng(42);
  for (Field f : {Field::rationals(), Field::prime(101)}) {
    for (int trial = 0; trial < 25; ++trial) {
      std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
      Matrix m = random_matrix(f, rows, cols, rng);
      auto r = rref(m);
      Matrix k = kernel_basis(m);
      CHECK(r.rank == cols - k.cols());
      // rref is idempotent
      auto rr = rref(r.reduced);
      CHECK(rr.reduced == r.reduced);
      // kernel vectors are exact solutions
      if (k.cols() > 0) CHECK(m.mul(k).is_zero());
      // solve consistency: m x = m * (random vector)
      Matrix x = random_matrix(f, cols, 1, rng, 100);
      auto sol = solve_linear(m, m.mul(x));
      REQUIRE(sol.has_value());
      CHECK(m.mul(sol->particular) == m.mul(x));
    }
  }
}

TEST_CASE("kronecker associativity up to nothing: shapes and entries agree") {
  std::mt19937_64 rng(7);
  Field q = Field::rationals();
  for (int trial = 0; trial < 10; ++trial) {
    Matrix a = random_matrix(q, 1 + rng() % 3, 1 + rng() % 3, rng);
    Matrix b = random_matrix(q, 1 + rng() % 3, 1 + rng() % 3, rng);
    Matrix c = random_matrix(q, 1 + rng() % 3, 1 + rng() % 3, rng);
    CHECK(kronecker(kronecker(a, b), c) == kronecker(a, kronecker(b, c)));
  }
}

TEST_CASE("serial and parallel kernels produce identical results") {
  std::mt19937_64 rng(2024);
  Field q = Field::rationals();
  for (int trial = 0; trial < 6; ++trial) {
    std::size_t n = 10 + rng() % 30;
    Matrix a = random_matrix(q, n, n, rng);
    Matrix b = random_matrix(q, n, n, rng);
    CHECK(a.mul_serial(b) == a.mul_parallel(b));
    auto rs = rref_serial(a);
    auto rp = rref_parallel(a);
    CHECK(rs.reduced == rp.reduced);
    CHECK(rs.pivots == rp.pivots);
    CHECK(rs.rank == rp.rank);
  }
}

TEST_CASE("subspace canonical forms and operations") {
  Field q = Field::rationals();
  // same row space, different spanning sets -> equal subspaces
  Subspace u = Subspace::span_rows(Matrix::from_int_rows(q, {{1, 2, 0}, {0, 0, 1}}));
  Subspace v = Subspace::span_rows(Matrix::from_int_rows(q, {{2, 4, 2}, {1, 2, 3}, {3, 6, 5}}));
  CHECK(u == v);
  CHECK(u.dim() == 2);
  CHECK(u.contains(Matrix::from_int_rows(q, {{3}, {6}, {7}})));
  CHECK_FALSE(u.contains(Matrix::from_int_rows(q, {{0}, {1}, {0}})));

  Subspace w = Subspace::span_rows(Matrix::from_int_rows(q, {{0, 1, 0}}));
  Subspace sum = u.sum(w);
  CHECK(sum.dim() == 3);
  Subspace inter = u.intersect(w);
  CHECK(inter.dim() == 0);

  EchelonBuilder eb(q, 3);
  CHECK(eb.add(Matrix::from_int_rows(q, {{2}, {4}, {2}})));
  CHECK(eb.add(Matrix::from_int_rows(q, {{1}, {2}, {3}})));
  CHECK_FALSE(eb.add(Matrix::from_int_rows(q, {{3}, {6}, {5}})));
  CHECK(eb.to_subspace() == u);
  CHECK(eb.basis_rows() == u.basis_rows());
}
