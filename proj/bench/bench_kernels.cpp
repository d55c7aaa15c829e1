// Compares the serial reference kernels against the OpenMP versions on
// synthetic exact-arithmetic workloads and reports wall times plus an
// exact-equality check of the results.

#include <chrono>
#include <iostream>
#include <random>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "halg/matrix.hpp"

using namespace halg;

namespace {

Matrix random_matrix(Field f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      long num = long(rng() % 41) - 20;
      long den = 1 + long(rng() % 7);
      m.set(i, j, Scalar(num) / Scalar(den));
    }
  }
  return m;
}

template <typename F>
double time_ms(F&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

struct Row {
  std::string name;
  double serial_ms;
  double parallel_ms;
  bool identical;
};

void print_row(const Row& r) {
  double speedup = r.parallel_ms > 0 ? r.serial_ms / r.parallel_ms : 0.0;
  std::printf("%-28s %10.1f ms %10.1f ms   x%.2f   results %s\n", r.name.c_str(), r.serial_ms,
              r.parallel_ms, speedup, r.identical ? "identical" : "DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = argc > 1 && std::string(argv[1]) == "--quick";
  const Field f = Field::rationals();
  std::mt19937_64 rng(7);

  std::size_t mul_n = quick ? 40 : 140;
  std::size_t rref_rows = quick ? 60 : 240;
  std::size_t rref_cols = quick ? 40 : 160;

#ifdef _OPENMP
  std::printf("OpenMP max threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run the serial path\n");
#endif
  std::printf("%-28s %13s %13s\n", "kernel", "serial", "parallel");

  {
    Matrix a = random_matrix(f, mul_n, mul_n, rng);
    Matrix b = random_matrix(f, mul_n, mul_n, rng);
    Matrix rs(f, 0, 0), rp(f, 0, 0);
    Row row;
    row.name = "matmul " + std::to_string(mul_n) + "x" + std::to_string(mul_n);
    row.serial_ms = time_ms([&] { rs = a.mul_serial(b); });
    row.parallel_ms = time_ms([&] { rp = a.mul_parallel(b); });
    row.identical = rs == rp;
    print_row(row);
    if (!row.identical) return 1;
  }

  {
    Matrix a = random_matrix(f, rref_rows, rref_cols, rng);
    // make it rank deficient so elimination does real cleanup work
    for (std::size_t i = 0; i + 1 < rref_rows; i += 2) {
      for (std::size_t j = 0; j < rref_cols; ++j) {
        a.set(i + 1, j, f.add(a.at(i + 1, j), a.at(i, j)));
      }
    }
    RrefResult rs{Matrix(f, 0, 0), {}, 0}, rp{Matrix(f, 0, 0), {}, 0};
    Row row;
    row.name = "rref " + std::to_string(rref_rows) + "x" + std::to_string(rref_cols);
    row.serial_ms = time_ms([&] { rs = rref_serial(a); });
    row.parallel_ms = time_ms([&] { rp = rref_parallel(a); });
    row.identical = rs.reduced == rp.reduced && rs.pivots == rp.pivots;
    print_row(row);
    if (!row.identical) return 1;
  }

  {
    // kernel extraction sits on top of rref; run the dispatching path twice
    // as a determinism check
    std::size_t n = quick ? 50 : 120;
    Matrix a = random_matrix(f, n, 2 * n, rng);
    Matrix ks(f, 0, 0), kp(f, 0, 0);
    Row row;
    row.name = "kernel_basis " + std::to_string(n) + "x" + std::to_string(2 * n);
    row.serial_ms = time_ms([&] { ks = kernel_basis(a); });
    row.parallel_ms = time_ms([&] { kp = kernel_basis(a); });
    row.identical = ks == kp;
    print_row(row);
    if (!row.identical) return 1;
  }

  return 0;
}
