#pragma once

#include "halg/report.hpp"

namespace halg {

enum class VerdictKind { HoldsDefinitively, ViolatedAt, InconclusiveUpTo };

std::string verdict_name(VerdictKind kind);

// Three-valued verdict for a conjecture condition at a finite cutoff.
// ViolatedAt carries a concrete index whose witness data lives in the
// evidence and re-verifies on its own.
struct ConditionVerdict {
  VerdictKind kind;
  std::size_t index = 0;  // violation position, or the cutoff when inconclusive
  std::size_t cutoff = 0;
  std::uint64_t seed = 0;
  Json evidence;
};

// id of the left regular module vs id over the opposite; GSC asks for
// equality.
ConditionVerdict gsc_check(Workspace& ws, std::size_t cutoff);

struct NakayamaResult {
  ConditionVerdict verdict;   // about the premise: every I^i projective
  bool self_injective;
  // premise holds definitively but the algebra is not self-injective:
  // a counterexample candidate for NC (overwhelmingly a bug)
  bool counterexample_candidate;
};
NakayamaResult nakayama_condition(Workspace& ws, std::size_t cutoff);

struct AuslanderResult {
  ConditionVerdict verdict;   // about the premise: pd I^i <= i
  bool gorenstein;            // both one-sided ids Finite at this cutoff
  bool gorenstein_known;      // false when either id is only a lower bound
  bool counterexample_candidate;
};
AuslanderResult auslander_condition(Workspace& ws, std::size_t cutoff);

struct SncProbe {
  bool witness_found;
  std::size_t witness_index = 0;   // least i with Ext^i(m, A) != 0
  std::size_t ext_dim_at_witness = 0;
  std::size_t cutoff = 0;
  // vanishing through the cutoff: counterexample candidate, never a proof
  bool counterexample_candidate = false;
};
SncProbe snc_probe(Workspace& ws, const Module& m, std::size_t cutoff);

// snc probe of every simple module
std::vector<SncProbe> gnc_probe(Workspace& ws, std::size_t cutoff);

struct ArcProbe {
  bool ext_vanishing;          // Ext^{1..cutoff}(m, m ⊕ A) = 0
  std::size_t first_nonzero = 0;  // set when not vanishing
  bool projective;
  bool counterexample_candidate;  // vanishing and not projective
  std::size_t cutoff = 0;
};
ArcProbe arc_probe(Workspace& ws, const Module& m, std::size_t cutoff);

struct FindimProbe {
  std::size_t lower_bound = 0;  // sup of the Finite pd values observed
  std::vector<HomDim> pds;
};
// explicitly a lower bound for findim over the supplied modules, not its value
FindimProbe findim_probe(Workspace& ws, const std::vector<Module>& modules, std::size_t cutoff);

struct ExtensionSpec {
  enum class Kind { Matrix, Skew };
  Kind kind;
  std::size_t matrix_n = 0;        // Kind::Matrix
  GroupActionPtr action;           // Kind::Skew
};

struct TransferReport {
  std::string claim;
  bool holds;
  Json evidence;
  Json certificates;
};

// id agreement on both sides plus the self-injectivity / Gorenstein
// equivalences, at a finite cutoff.
TransferReport verify_lemma31(Workspace& ws, const ExtensionSpec& ext, std::size_t cutoff);

// restriction-of-induction decomposition and the split natural maps.
TransferReport verify_prop27(Workspace& ws, const AlgebraPtr& skew, const Module& m);
// split epi of the counit on a module over the skew algebra
TransferReport verify_prop27_counit(Workspace& skew_ws, const Module& n);

// Ext transfer: G-stability of n, the vanishing implication, and the exact
// dimension identity dim Ext^i(FM, FN) = |G| dim Ext^i(M, N).
TransferReport verify_prop35(Workspace& ws, Workspace& skew_ws, const Module& m,
                             const Module& n, std::size_t i_max);

// adjunction dimension counts for (F, H) and (H, F) on explicit pairs
TransferReport verify_adjoint(Workspace& ws, Workspace& skew_ws,
                              const std::vector<Module>& base_modules,
                              const std::vector<Module>& skew_modules);

// semisimplicity of induced simples, their decomposition, and the GNC
// witness transfer instance.
TransferReport verify_thm36_machinery(Workspace& ws, Workspace& skew_ws, std::size_t cutoff);

}  // namespace halg
