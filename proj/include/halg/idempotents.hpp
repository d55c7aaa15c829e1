#pragma once

#include <cstdint>

#include "halg/algebra.hpp"
#include "halg/polynomial.hpp"

namespace halg {

// Complete orthogonal family of primitive idempotents, lifted from the
// semisimple quotient. Ordered block-major; idempotents in the same block
// generate isomorphic projectives.
struct IdempotentData {
  std::vector<Matrix> idempotents;            // columns in algebra coordinates
  std::vector<std::size_t> block_of;          // central block index per idempotent
  std::size_t block_count = 0;
  std::vector<std::size_t> class_representatives;  // one idempotent index per block
  std::uint64_t seed = 0;
};

// Decomposition pipeline: center of a/rad, one primitive idempotent per
// matrix block (splitting elements are found among basis elements first,
// then seeded random combinations, bounded retries), refinement to a full
// orthogonal family, and lifting through the radical via e -> 3e^2 - 2e^3.
// Throws NonSplit when a block admits no rational splitting element.
IdempotentData primitive_idempotents(const AlgebraPtr& a, const Subspace& radical,
                                     std::uint64_t seed = 0);

// Monic minimal polynomial of an algebra element.
Polynomial minimal_polynomial(const Algebra& a, const Matrix& x);

// Horner evaluation of p at an algebra element.
Matrix eval_in_algebra(const Algebra& a, const Polynomial& p, const Matrix& x);

}  // namespace halg
