#include "halg/module.hpp"

#include <random>

namespace halg {

namespace {

Matrix basis_vector(const Field& f, std::size_t n, std::size_t i) {
  Matrix v(f, n, 1);
  v.set_reduced(i, 0, f.one());
  return v;
}

}  // namespace

Module Module::make(AlgebraPtr algebra, std::vector<Matrix> action) {
  const Algebra& a = *algebra;
  const std::size_t n = a.dim();
  if (action.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "one action matrix per basis element required");
  }
  const std::size_t d = action.empty() ? 0 : action[0].rows();
  for (const Matrix& m : action) {
    if (m.rows() != d || m.cols() != d || m.field() != a.field()) {
      throw Error(ErrorCode::DimensionMismatch, "action matrices must be square of equal size");
    }
  }
  Module mod(std::move(algebra), d, std::move(action));
  // unit acts as identity
  if (!mod.action_of(a.unit()).is_identity()) {
    throw Error(ErrorCode::DimensionMismatch, "unit does not act as the identity");
  }
  // multiplicativity on generators x all basis elements extends to the
  // whole algebra by linearity and associativity
  for (std::size_t g : a.generators()) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix lhs = mod.action_[g].mul(mod.action_[j]);
      Matrix rhs = mod.action_of(a.basis_product(g, j));
      if (lhs != rhs) {
        throw Error(ErrorCode::DimensionMismatch,
                    "action does not respect structure constants at (" + std::to_string(g) +
                        "," + std::to_string(j) + ")");
      }
    }
  }
  return mod;
}

Module Module::zero(AlgebraPtr algebra) {
  const std::size_t n = algebra->dim();
  std::vector<Matrix> action(n, Matrix(algebra->field(), 0, 0));
  return Module(std::move(algebra), 0, std::move(action));
}

Module Module::regular(const AlgebraPtr& algebra) {
  std::vector<Matrix> action;
  action.reserve(algebra->dim());
  for (std::size_t i = 0; i < algebra->dim(); ++i) action.push_back(algebra->left_mul_matrix(i));
  return Module(algebra, algebra->dim(), std::move(action));
}

Matrix Module::action_of(const Matrix& x) const {
  const Field& f = algebra_->field();
  Matrix out(f, dim_, dim_);
  for (std::size_t i = 0; i < algebra_->dim(); ++i) {
    const Scalar& xi = x.at(i, 0);
    if (Field::is_zero(xi)) continue;
    out = out.add(action_[i].scaled(xi));
  }
  return out;
}

bool Module::operator==(const Module& other) const {
  if (algebra_.get() != other.algebra_.get() || dim_ != other.dim_) return false;
  for (std::size_t i = 0; i < action_.size(); ++i) {
    if (action_[i] != other.action_[i]) return false;
  }
  return true;
}

ModuleMap ModuleMap::make(Module source, Module target, Matrix matrix) {
  if (source.algebra().get() != target.algebra().get()) {
    throw Error(ErrorCode::AlgebraMismatch, "module map between different algebras");
  }
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "module map matrix has wrong shape");
  }
  for (std::size_t g : source.algebra()->generators()) {
    if (matrix.mul(source.action(g)) != target.action(g).mul(matrix)) {
      throw Error(ErrorCode::DimensionMismatch,
                  "matrix does not commute with the action at generator " + std::to_string(g));
    }
  }
  return ModuleMap(std::move(source), std::move(target), std::move(matrix));
}

ModuleMap ModuleMap::unchecked(Module source, Module target, Matrix matrix) {
  return ModuleMap(std::move(source), std::move(target), std::move(matrix));
}

bool ModuleMap::is_injective() const { return rank(matrix_) == source_.dim(); }

bool ModuleMap::is_surjective() const { return rank(matrix_) == target_.dim(); }

ModuleMap ModuleMap::compose(const ModuleMap& inner) const {
  return ModuleMap(inner.source_, target_, matrix_.mul(inner.matrix_));
}

std::vector<ModuleMap> hom_space(const Module& m, const Module& n) {
  if (m.algebra().get() != n.algebra().get()) {
    throw Error(ErrorCode::AlgebraMismatch, "hom_space between different algebras");
  }
  const Field& f = m.algebra()->field();
  const std::size_t dm = m.dim(), dn = n.dim();
  if (dm == 0 || dn == 0) return {};
  // X action_m(g) = action_n(g) X, row-major vec:
  // (action_n(g) ⊗ I - I ⊗ action_m(g)^T) vec X = 0
  const auto& gens = m.algebra()->generators();
  Matrix idm = Matrix::identity(f, dm);
  Matrix idn = Matrix::identity(f, dn);
  Matrix system(f, gens.size() * dn * dm, dn * dm);
  std::size_t row = 0;
  for (std::size_t g : gens) {
    Matrix block = kronecker(n.action(g), idm).sub(kronecker(idn, m.action(g).transpose()));
    system.set_block(row, 0, block);
    row += dn * dm;
  }
  Matrix ker = kernel_basis(system);
  std::vector<ModuleMap> basis;
  basis.reserve(ker.cols());
  for (std::size_t k = 0; k < ker.cols(); ++k) {
    basis.push_back(ModuleMap::unchecked(m, n, Matrix::unvec(f, ker.col(k), dn, dm)));
  }
  return basis;
}

std::size_t hom_dim(const Module& m, const Module& n) { return hom_space(m, n).size(); }

IsoResult is_isomorphic(const Module& m, const Module& n, std::uint64_t seed,
                        std::size_t trials) {
  IsoResult res;
  res.seed = seed;
  if (m.algebra().get() != n.algebra().get()) {
    throw Error(ErrorCode::AlgebraMismatch, "is_isomorphic between different algebras");
  }
  if (m.dim() != n.dim()) {
    res.verdict = IsoResult::Verdict::NotIsomorphicCertified;
    res.reason = "dim " + std::to_string(m.dim()) + " != " + std::to_string(n.dim());
    return res;
  }
  if (m.dim() == 0) {
    res.verdict = IsoResult::Verdict::Isomorphic;
    res.certificate = ModuleMap::unchecked(m, n, Matrix(m.algebra()->field(), 0, 0));
    res.reason = "zero modules";
    return res;
  }
  std::vector<ModuleMap> fwd = hom_space(m, n);
  std::vector<ModuleMap> bwd = hom_space(n, m);
  if (fwd.size() != bwd.size()) {
    res.verdict = IsoResult::Verdict::NotIsomorphicCertified;
    res.reason = "dim Hom(m,n) = " + std::to_string(fwd.size()) +
                 " != dim Hom(n,m) = " + std::to_string(bwd.size());
    return res;
  }
  if (fwd.empty()) {
    res.verdict = IsoResult::Verdict::NotIsomorphicCertified;
    res.reason = "Hom(m,n) = 0 between nonzero modules";
    return res;
  }
  std::size_t end_m = hom_space(m, m).size();
  std::size_t end_n = hom_space(n, n).size();
  if (end_m != end_n) {
    res.verdict = IsoResult::Verdict::NotIsomorphicCertified;
    res.reason = "dim End(m) = " + std::to_string(end_m) +
                 " != dim End(n) = " + std::to_string(end_n);
    return res;
  }
  const Field& f = m.algebra()->field();
  auto try_candidate = [&](const Matrix& cand) -> bool {
    if (rank(cand) != m.dim()) return false;
    res.verdict = IsoResult::Verdict::Isomorphic;
    res.certificate = ModuleMap::unchecked(m, n, cand);
    res.reason = "invertible element of Hom(m,n)";
    return true;
  };
  for (const ModuleMap& h : fwd) {
    if (try_candidate(h.matrix())) return res;
  }
  {
    Matrix sum(f, n.dim(), m.dim());
    for (const ModuleMap& h : fwd) sum = sum.add(h.matrix());
    if (try_candidate(sum)) return res;
  }
  std::mt19937_64 rng(seed ^ 0xa2c5b35d87f1e3ffULL);
  for (std::size_t t = 0; t < trials; ++t) {
    Matrix cand(f, n.dim(), m.dim());
    for (const ModuleMap& h : fwd) {
      long c = long(rng() % 7) - 3;
      if (c != 0) cand = cand.add(h.matrix().scaled(Scalar(c)));
    }
    if (try_candidate(cand)) return res;
  }
  res.verdict = IsoResult::Verdict::NotIsomorphicProbable;
  res.reason = "no invertible combination found in " + std::to_string(trials) +
               " seeded trials (invariants match)";
  return res;
}

SubmoduleResult submodule(const Module& m, const Matrix& basis_cols) {
  const Field& f = m.algebra()->field();
  const std::size_t k = basis_cols.cols();
  Subspace span = Subspace::span_cols(basis_cols);
  if (span.dim() != k) {
    throw Error(ErrorCode::DimensionMismatch, "submodule basis is not independent");
  }
  Matrix coords = k > 0 ? left_inverse(basis_cols) : Matrix(f, 0, m.dim());
  std::vector<Matrix> action;
  action.reserve(m.algebra()->dim());
  for (std::size_t i = 0; i < m.algebra()->dim(); ++i) {
    Matrix image = m.action(i).mul(basis_cols);
    for (std::size_t c = 0; c < image.cols(); ++c) {
      if (!span.contains(image.col(c))) {
        throw Error(ErrorCode::DimensionMismatch, "subspace is not action-invariant");
      }
    }
    action.push_back(coords.mul(image));
  }
  Module sub = Module::make(m.algebra(), std::move(action));
  ModuleMap incl = ModuleMap::unchecked(sub, m, basis_cols);
  return SubmoduleResult{std::move(sub), std::move(incl)};
}

QuotientModuleResult quotient_module(const Module& m, const Matrix& sub_basis_cols) {
  const Field& f = m.algebra()->field();
  Subspace w = Subspace::span_cols(sub_basis_cols);
  std::vector<std::size_t> free = w.free_coords();
  const std::size_t k = free.size();
  Matrix section(f, m.dim(), k);
  for (std::size_t c = 0; c < k; ++c) section.set_reduced(free[c], c, f.one());
  Matrix projection(f, k, m.dim());
  for (std::size_t j = 0; j < m.dim(); ++j) {
    Matrix red = w.reduce(basis_vector(f, m.dim(), j));
    for (std::size_t c = 0; c < k; ++c) projection.set_reduced(c, j, red.at(free[c], 0));
  }
  std::vector<Matrix> action;
  action.reserve(m.algebra()->dim());
  for (std::size_t i = 0; i < m.algebra()->dim(); ++i) {
    action.push_back(projection.mul(m.action(i)).mul(section));
  }
  Module quot = Module::make(m.algebra(), std::move(action));
  ModuleMap proj = ModuleMap::unchecked(m, quot, projection);
  return QuotientModuleResult{std::move(quot), std::move(proj)};
}

SubmoduleResult kernel_module(const ModuleMap& f) {
  return submodule(f.source(), kernel_basis(f.matrix()));
}

SubmoduleResult image_module(const ModuleMap& f) {
  Subspace im = Subspace::span_cols(f.matrix());
  return submodule(f.target(), im.basis_cols());
}

QuotientModuleResult cokernel_module(const ModuleMap& f) {
  Subspace im = Subspace::span_cols(f.matrix());
  return quotient_module(f.target(), im.basis_cols());
}

Module direct_sum(const std::vector<Module>& parts) {
  if (parts.empty()) throw Error(ErrorCode::DimensionMismatch, "direct_sum of empty list");
  const AlgebraPtr& a = parts[0].algebra();
  const Field& f = a->field();
  std::size_t total = 0;
  for (const Module& p : parts) {
    if (p.algebra().get() != a.get()) {
      throw Error(ErrorCode::AlgebraMismatch, "direct_sum over different algebras");
    }
    total += p.dim();
  }
  std::vector<Matrix> action;
  action.reserve(a->dim());
  for (std::size_t i = 0; i < a->dim(); ++i) {
    Matrix block(f, total, total);
    std::size_t off = 0;
    for (const Module& p : parts) {
      block.set_block(off, off, p.action(i));
      off += p.dim();
    }
    action.push_back(std::move(block));
  }
  return Module::make(a, std::move(action));
}

Matrix sum_injection(const std::vector<Module>& parts, std::size_t index) {
  const Field& f = parts[0].algebra()->field();
  std::size_t total = 0, before = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i < index) before += parts[i].dim();
    total += parts[i].dim();
  }
  Matrix inj(f, total, parts[index].dim());
  inj.set_block(before, 0, Matrix::identity(f, parts[index].dim()));
  return inj;
}

Matrix sum_projection(const std::vector<Module>& parts, std::size_t index) {
  return sum_injection(parts, index).transpose();
}

Module dual_module(const Module& m, const AlgebraPtr& opposite_algebra) {
  if (opposite_algebra->dim() != m.algebra()->dim()) {
    throw Error(ErrorCode::AlgebraMismatch, "dual_module: opposite algebra has wrong dimension");
  }
  std::vector<Matrix> action;
  action.reserve(m.algebra()->dim());
  for (std::size_t i = 0; i < m.algebra()->dim(); ++i) action.push_back(m.action(i).transpose());
  return Module::make(opposite_algebra, std::move(action));
}

ModuleMap dual_map(const ModuleMap& f, const AlgebraPtr& opposite_algebra) {
  return ModuleMap::unchecked(dual_module(f.target(), opposite_algebra),
                              dual_module(f.source(), opposite_algebra),
                              f.matrix().transpose());
}

Module twist(const Module& m, const AlgebraAutomorphism& sigma) {
  if (sigma.algebra().get() != m.algebra().get()) {
    throw Error(ErrorCode::AlgebraMismatch, "twist by an automorphism of a different algebra");
  }
  std::vector<Matrix> action;
  const std::size_t n = m.algebra()->dim();
  action.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    action.push_back(m.action_of(sigma.inverse_matrix().col(j)));
  }
  return Module::make(m.algebra(), std::move(action));
}

Module induce(const Module& m, const AlgebraPtr& skew) {
  const SkewProvenance* prov = skew->skew_provenance();
  if (!prov) throw Error(ErrorCode::NotASkewAlgebra, "induce target is not a skew group algebra");
  if (prov->base.get() != m.algebra().get()) {
    throw Error(ErrorCode::AlgebraMismatch, "module is not over the base of the skew algebra");
  }
  const GroupAction& g = *prov->action;
  const Field& f = skew->field();
  const std::size_t d = m.dim(), nb = prov->base->dim(), ng = g.size();
  std::vector<Matrix> action;
  action.reserve(skew->dim());
  for (std::size_t tau = 0; tau < ng; ++tau) {
    for (std::size_t t = 0; t < nb; ++t) {
      // (b_t tau) . (sigma ⊗ v) = (tau sigma) ⊗ ((tau sigma)^{-1} b_t) v
      Matrix big(f, ng * d, ng * d);
      for (std::size_t sigma = 0; sigma < ng; ++sigma) {
        std::size_t ts = g.mul(tau, sigma);
        Matrix moved = g.image(g.inverse(ts)).matrix().col(t);
        big.set_block(ts * d, sigma * d, m.action_of(moved));
      }
      action.push_back(std::move(big));
    }
  }
  return Module::make(skew, std::move(action));
}

ModuleMap induce_map(const ModuleMap& fmap, const AlgebraPtr& skew) {
  const SkewProvenance* prov = skew->skew_provenance();
  if (!prov) throw Error(ErrorCode::NotASkewAlgebra, "induce target is not a skew group algebra");
  const std::size_t ng = prov->action->size();
  const Field& f = skew->field();
  Matrix big(f, ng * fmap.target().dim(), ng * fmap.source().dim());
  for (std::size_t s = 0; s < ng; ++s) {
    big.set_block(s * fmap.target().dim(), s * fmap.source().dim(), fmap.matrix());
  }
  return ModuleMap::unchecked(induce(fmap.source(), skew), induce(fmap.target(), skew),
                              std::move(big));
}

Module restrict_to_base(const Module& n) {
  const SkewProvenance* prov = n.algebra()->skew_provenance();
  if (!prov) {
    throw Error(ErrorCode::NotASkewAlgebra,
                "restriction requires skew group algebra provenance");
  }
  const std::size_t nb = prov->base->dim();
  const std::size_t id = prov->action->identity_index();
  std::vector<Matrix> action;
  action.reserve(nb);
  for (std::size_t t = 0; t < nb; ++t) action.push_back(n.action(id * nb + t));
  return Module::make(prov->base, std::move(action));
}

ModuleMap restrict_map(const ModuleMap& f) {
  return ModuleMap::unchecked(restrict_to_base(f.source()), restrict_to_base(f.target()),
                              f.matrix());
}

ModuleMap induction_unit(const Module& m, const AlgebraPtr& skew) {
  const SkewProvenance* prov = skew->skew_provenance();
  if (!prov) throw Error(ErrorCode::NotASkewAlgebra, "not a skew group algebra");
  const Field& f = skew->field();
  const std::size_t ng = prov->action->size(), d = m.dim();
  Module hf = restrict_to_base(induce(m, skew));
  Matrix mat(f, ng * d, d);
  mat.set_block(prov->action->identity_index() * d, 0, Matrix::identity(f, d));
  return ModuleMap::make(m, hf, std::move(mat));
}

ModuleMap induction_counit(const Module& n, const AlgebraPtr& skew) {
  const SkewProvenance* prov = skew->skew_provenance();
  if (!prov) throw Error(ErrorCode::NotASkewAlgebra, "not a skew group algebra");
  if (n.algebra().get() != skew.get()) {
    throw Error(ErrorCode::AlgebraMismatch, "module is not over the skew algebra");
  }
  const Field& f = skew->field();
  const GroupAction& g = *prov->action;
  const std::size_t ng = g.size(), d = n.dim(), nb = prov->base->dim();
  Module fh = induce(restrict_to_base(n), skew);
  // sigma ⊗ v -> (unit_base sigma) . v
  Matrix mat(f, d, ng * d);
  for (std::size_t s = 0; s < ng; ++s) {
    Matrix act(f, d, d);
    for (std::size_t t = 0; t < nb; ++t) {
      const Scalar& u = prov->base->unit().at(t, 0);
      if (Field::is_zero(u)) continue;
      act = act.add(n.action(s * nb + t).scaled(u));
    }
    mat.set_block(0, s * d, act);
  }
  return ModuleMap::make(fh, n, std::move(mat));
}

namespace {

// solve sum_k x_k (basis_k ∘ fixed) = want  (or fixed ∘ basis_k)
std::optional<ModuleMap> solve_one_sided_inverse(const std::vector<ModuleMap>& hom_basis,
                                                 const Module& src, const Module& tgt,
                                                 const Matrix& fixed, bool fixed_on_right,
                                                 const Matrix& want) {
  if (hom_basis.empty()) return std::nullopt;
  const Field& f = fixed.field();
  Matrix sys(f, want.rows() * want.cols(), hom_basis.size());
  for (std::size_t k = 0; k < hom_basis.size(); ++k) {
    Matrix prod = fixed_on_right ? hom_basis[k].matrix().mul(fixed)
                                 : fixed.mul(hom_basis[k].matrix());
    sys.set_block(0, k, prod.vec());
  }
  auto sol = solve_linear(sys, want.vec());
  if (!sol) return std::nullopt;
  Matrix combo(f, tgt.dim(), src.dim());
  for (std::size_t k = 0; k < hom_basis.size(); ++k) {
    const Scalar& c = sol->particular.at(k, 0);
    if (!Field::is_zero(c)) combo = combo.add(hom_basis[k].matrix().scaled(c));
  }
  return ModuleMap::unchecked(src, tgt, combo);
}

}  // namespace

std::optional<ModuleMap> splitting_of_mono(const ModuleMap& mono) {
  // retraction r with r ∘ mono = id_source
  std::vector<ModuleMap> homs = hom_space(mono.target(), mono.source());
  Matrix want = Matrix::identity(mono.matrix().field(), mono.source().dim());
  return solve_one_sided_inverse(homs, mono.target(), mono.source(), mono.matrix(), true, want);
}

std::optional<ModuleMap> splitting_of_epi(const ModuleMap& epi) {
  // section s with epi ∘ s = id_target
  std::vector<ModuleMap> homs = hom_space(epi.target(), epi.source());
  Matrix want = Matrix::identity(epi.matrix().field(), epi.target().dim());
  return solve_one_sided_inverse(homs, epi.target(), epi.source(), epi.matrix(), false, want);
}

}  // namespace halg
