#pragma once

#include <cstdint>

#include "halg/action.hpp"

namespace halg {

// Finitely generated left module: one action matrix per algebra basis
// element. Construction validates the structure-constant commutation law
// (on a generating set, which is equivalent) and that the unit acts as
// the identity.
class Module {
 public:
  static Module make(AlgebraPtr algebra, std::vector<Matrix> action);
  static Module zero(AlgebraPtr algebra);
  static Module regular(const AlgebraPtr& algebra);

  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t dim() const { return dim_; }
  const Matrix& action(std::size_t i) const { return action_[i]; }
  // action of an arbitrary element (coefficient column)
  Matrix action_of(const Matrix& x) const;

  // exact equality of presentations: same algebra object, same matrices
  bool operator==(const Module& other) const;
  bool operator!=(const Module& other) const { return !(*this == other); }

 private:
  Module(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action)
      : algebra_(std::move(algebra)), dim_(dim), action_(std::move(action)) {}

  AlgebraPtr algebra_;
  std::size_t dim_;
  std::vector<Matrix> action_;
};

class ModuleMap {
 public:
  // validates the commutation law on algebra generators
  static ModuleMap make(Module source, Module target, Matrix matrix);
  // skips validation for maps correct by construction
  static ModuleMap unchecked(Module source, Module target, Matrix matrix);

  const Module& source() const { return source_; }
  const Module& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const { return is_injective() && is_surjective(); }

  ModuleMap compose(const ModuleMap& inner) const;  // this ∘ inner

 private:
  ModuleMap(Module source, Module target, Matrix matrix)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {}

  Module source_;
  Module target_;
  Matrix matrix_;
};

// Basis of Hom(m, n), solved from the commutation system on generators.
std::vector<ModuleMap> hom_space(const Module& m, const Module& n);
std::size_t hom_dim(const Module& m, const Module& n);

struct IsoResult {
  enum class Verdict { Isomorphic, NotIsomorphicCertified, NotIsomorphicProbable };
  Verdict verdict;
  std::optional<ModuleMap> certificate;  // set iff Isomorphic
  std::string reason;                    // distinguishing invariant or trial summary
  std::uint64_t seed = 0;
};

// Quick invariant rejects (dim, Hom dimension asymmetries), then seeded
// random combinations of a Hom basis; over Q a combination containing an
// isomorphism is invertible off a measure-zero set, so exhausted trials
// with matching invariants are reported as probable-only.
IsoResult is_isomorphic(const Module& m, const Module& n, std::uint64_t seed = 0,
                        std::size_t trials = 64);

struct SubmoduleResult {
  Module module;
  ModuleMap inclusion;
};
// basis_cols must span an action-invariant subspace
SubmoduleResult submodule(const Module& m, const Matrix& basis_cols);

struct QuotientModuleResult {
  Module module;
  ModuleMap projection;
};
QuotientModuleResult quotient_module(const Module& m, const Matrix& sub_basis_cols);

SubmoduleResult kernel_module(const ModuleMap& f);
SubmoduleResult image_module(const ModuleMap& f);
QuotientModuleResult cokernel_module(const ModuleMap& f);

Module direct_sum(const std::vector<Module>& parts);
// block injection/projection maps of a direct sum formed from `parts`
Matrix sum_injection(const std::vector<Module>& parts, std::size_t index);
Matrix sum_projection(const std::vector<Module>& parts, std::size_t index);

// m viewed over the opposite algebra on the dual space (transposed action)
Module dual_module(const Module& m, const AlgebraPtr& opposite_algebra);
ModuleMap dual_map(const ModuleMap& f, const AlgebraPtr& opposite_algebra);

// twist by an automorphism: action'(b) = action(sigma^{-1}(b))
Module twist(const Module& m, const AlgebraAutomorphism& sigma);

// induction to a skew group algebra built from m's algebra
Module induce(const Module& m, const AlgebraPtr& skew);
ModuleMap induce_map(const ModuleMap& f, const AlgebraPtr& skew);

// restriction along the identity-block embedding of the base algebra;
// requires skew provenance on the module's algebra
Module restrict_to_base(const Module& n);
ModuleMap restrict_map(const ModuleMap& f);

// natural unit m -> restrict(induce(m)) of the adjunction (identity block)
ModuleMap induction_unit(const Module& m, const AlgebraPtr& skew);
// natural counit induce(restrict(n)) -> n
ModuleMap induction_counit(const Module& n, const AlgebraPtr& skew);

// solves for a left inverse of a mono (or right inverse of an epi) inside
// Hom(target, source); empty when the map is not split
std::optional<ModuleMap> splitting_of_mono(const ModuleMap& mono);
std::optional<ModuleMap> splitting_of_epi(const ModuleMap& epi);

}  // namespace halg
