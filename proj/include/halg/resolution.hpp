#pragma once

#include "halg/idempotents.hpp"
#include "halg/module.hpp"

namespace halg {

// Per-algebra homological context: radical, primitive idempotents, simples,
// indecomposable projectives/injectives, and a linked workspace over the
// opposite algebra (through which all right-module and injective
// computations are routed). Derived data is memoized; initialize from one
// thread before sharing.
class Workspace {
 public:
  explicit Workspace(AlgebraPtr algebra, std::uint64_t seed = 0);

  const AlgebraPtr& algebra() const { return algebra_; }
  std::uint64_t seed() const { return seed_; }

  const Subspace& radical();
  // rad, rad^2, ... (nonzero powers)
  const std::vector<Subspace>& radical_powers();
  const IdempotentData& idempotents();
  std::size_t class_count();
  // representative idempotent of class i as an algebra coefficient column
  Matrix class_idempotent(std::size_t i);

  const std::vector<Module>& simples();
  const std::vector<Module>& projectives();
  // inclusion of P_i into the regular module (columns = basis of A e_i)
  const std::vector<Matrix>& projective_inclusions();
  const std::vector<Module>& injectives();

  Workspace& opposite();
  // opposite-workspace class j corresponds to this-workspace class
  // op_class_map()[j] (via duality of simples)
  const std::vector<std::size_t>& op_class_map();

  QuotientModuleResult top_of(const Module& m);
  SubmoduleResult socle_of(const Module& m);
  // multiplicity of S_i in top(m) / soc(m), computed from idempotent ranks
  std::vector<std::size_t> top_multiplicities(const Module& m);
  std::vector<std::size_t> socle_multiplicities(const Module& m);

 private:
  void ensure_idempotents();
  void ensure_modules();

  AlgebraPtr algebra_;
  std::uint64_t seed_;
  std::optional<Subspace> radical_;
  std::optional<std::vector<Subspace>> radical_powers_;
  std::optional<IdempotentData> idempotents_;
  std::optional<std::vector<Module>> simples_;
  std::optional<std::vector<Module>> projectives_;
  std::optional<std::vector<Matrix>> projective_inclusions_;
  std::optional<std::vector<Module>> injectives_;
  std::optional<std::vector<std::size_t>> op_class_map_;
  std::unique_ptr<Workspace> opposite_;
  Workspace* opposite_raw_ = nullptr;  // set on the linked child
};

// cover: map P -> m is an epi inducing an iso on tops;
// envelope: map m -> I is a mono inducing an iso on socles.
struct AugmentedModule {
  Module module;
  std::vector<std::size_t> mults;  // per iso-class of simples
  ModuleMap map;
};

AugmentedModule projective_cover(Workspace& ws, const Module& m);
AugmentedModule injective_envelope(Workspace& ws, const Module& m);

enum class Direction { Projective, Injective };

struct ResolutionTerm {
  Module term;
  std::vector<std::size_t> mults;
};

struct Resolution {
  Direction direction;
  std::vector<ResolutionTerm> terms;
  // projective: maps[0]: P0 -> m, maps[s]: Ps -> P(s-1)
  // injective:  maps[0]: m -> I0, maps[s]: I(s-1) -> Is
  std::vector<ModuleMap> maps;
  bool terminated = false;
  std::size_t cutoff = 0;
};

// Iterated covers/envelopes; stops when a syzygy vanishes or after
// computing terms 0..cutoff.
Resolution minimal_resolution(Workspace& ws, const Module& m, Direction direction,
                              std::size_t cutoff);

// Finite(d) only when the resolution terminated at step d <= cutoff;
// otherwise the honest lower bound AtLeast(cutoff + 1).
struct HomDim {
  bool finite;
  std::size_t value;

  static HomDim finite_dim(std::size_t d) { return HomDim{true, d}; }
  static HomDim at_least(std::size_t c) { return HomDim{false, c}; }
  bool operator==(const HomDim& o) const { return finite == o.finite && value == o.value; }
  bool operator!=(const HomDim& o) const { return !(*this == o); }
  std::string str() const {
    return finite ? "Finite(" + std::to_string(value) + ")"
                  : "AtLeast(" + std::to_string(value) + ")";
  }
};

HomDim homological_dimension(Workspace& ws, const Module& m, Direction direction,
                             std::size_t cutoff);

bool is_projective(Workspace& ws, const Module& m);
bool is_injective(Workspace& ws, const Module& m);

// dim Ext^i(m, n) as homology of Hom(P•, n) over a minimal projective
// resolution of m.
std::size_t ext_dim(Workspace& ws, const Module& m, const Module& n, std::size_t i);
// independent route: homology of Hom(m, I•) over a minimal injective
// coresolution of n.
std::size_t ext_dim_via_injective(Workspace& ws, const Module& m, const Module& n,
                                  std::size_t i);

struct GabrielData {
  std::vector<std::string> vertex_labels;            // one per iso-class of simples
  std::vector<std::size_t> simple_dims;
  std::vector<std::vector<std::size_t>> arrow_counts;  // [from][to]
  Quiver quiver;                                     // arrows expanded with counts
};

// vertices = iso-classes of simple modules (deduplicated with
// is_isomorphic); arrows i -> j counted by dim e_j (rad/rad^2) e_i.
GabrielData gabriel_quiver(Workspace& ws);

}  // namespace halg
