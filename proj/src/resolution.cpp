#include "halg/resolution.hpp"

namespace halg {

Workspace::Workspace(AlgebraPtr algebra, std::uint64_t seed)
    : algebra_(std::move(algebra)), seed_(seed) {}

const Subspace& Workspace::radical() {
  if (!radical_) radical_ = jacobson_radical(*algebra_);
  return *radical_;
}

const std::vector<Subspace>& Workspace::radical_powers() {
  if (!radical_powers_) radical_powers_ = radical_power_chain(*algebra_, radical());
  return *radical_powers_;
}

void Workspace::ensure_idempotents() {
  if (!idempotents_) idempotents_ = primitive_idempotents(algebra_, radical(), seed_);
}

const IdempotentData& Workspace::idempotents() {
  ensure_idempotents();
  return *idempotents_;
}

std::size_t Workspace::class_count() { return idempotents().block_count; }

Matrix Workspace::class_idempotent(std::size_t i) {
  const IdempotentData& data = idempotents();
  return data.idempotents[data.class_representatives[i]];
}

void Workspace::ensure_modules() {
  if (simples_) return;
  ensure_idempotents();
  Module reg = Module::regular(algebra_);
  std::vector<Module> projectives;
  std::vector<Matrix> inclusions;
  std::vector<Module> simples;
  for (std::size_t cls = 0; cls < idempotents_->block_count; ++cls) {
    Matrix e = class_idempotent(cls);
    // A e = image of right multiplication by e
    Matrix re = algebra_->right_action(e);
    Subspace span = Subspace::span_cols(re);
    SubmoduleResult p = submodule(reg, span.basis_cols());
    // top(P) = P / rad P
    QuotientModuleResult t = top_of(p.module);
    simples.push_back(t.module);
    projectives.push_back(std::move(p.module));
    inclusions.push_back(span.basis_cols());
  }
  simples_ = std::move(simples);
  projectives_ = std::move(projectives);
  projective_inclusions_ = std::move(inclusions);
}

const std::vector<Module>& Workspace::simples() {
  ensure_modules();
  return *simples_;
}

const std::vector<Module>& Workspace::projectives() {
  ensure_modules();
  return *projectives_;
}

const std::vector<Matrix>& Workspace::projective_inclusions() {
  ensure_modules();
  return *projective_inclusions_;
}

Workspace& Workspace::opposite() {
  if (opposite_raw_) return *opposite_raw_;
  if (!opposite_) {
    opposite_ = std::make_unique<Workspace>(halg::opposite(algebra_), seed_);
    opposite_->opposite_raw_ = this;
  }
  return *opposite_;
}

const std::vector<std::size_t>& Workspace::op_class_map() {
  if (op_class_map_) return *op_class_map_;
  Workspace& wop = opposite();
  wop.ensure_modules();
  ensure_idempotents();
  const std::size_t classes = class_count();
  if (wop.class_count() != classes) {
    throw Error(ErrorCode::NonSplit, "opposite algebra has a different number of simple classes");
  }
  std::vector<std::size_t> map(classes, classes);
  for (std::size_t j = 0; j < classes; ++j) {
    Module ds = dual_module(wop.simples()[j], algebra_);
    std::size_t hit = classes;
    for (std::size_t k = 0; k < classes; ++k) {
      if (rank(ds.action_of(class_idempotent(k))) > 0) {
        if (hit != classes) throw Error(ErrorCode::NonSplit, "dual simple meets two classes");
        hit = k;
      }
    }
    if (hit == classes) throw Error(ErrorCode::NonSplit, "dual simple meets no class");
    map[j] = hit;
  }
  // must be a bijection
  std::vector<bool> seen(classes, false);
  for (std::size_t j = 0; j < classes; ++j) {
    if (seen[map[j]]) throw Error(ErrorCode::NonSplit, "dual simple matching is not a bijection");
    seen[map[j]] = true;
  }
  op_class_map_ = std::move(map);
  return *op_class_map_;
}

const std::vector<Module>& Workspace::injectives() {
  if (injectives_) return *injectives_;
  ensure_modules();
  Workspace& wop = opposite();
  wop.ensure_modules();
  const auto& align = op_class_map();
  std::vector<Module> inj;
  inj.reserve(class_count());
  for (std::size_t k = 0; k < class_count(); ++k) inj.push_back(simples()[0]);  // placeholder
  for (std::size_t j = 0; j < class_count(); ++j) {
    inj[align[j]] = dual_module(wop.projectives()[j], algebra_);
  }
  injectives_ = std::move(inj);
  return *injectives_;
}

QuotientModuleResult Workspace::top_of(const Module& m) {
  const Field& f = algebra_->field();
  Matrix radb = radical().basis_cols();
  EchelonBuilder span(f, m.dim());
  for (std::size_t r = 0; r < radb.cols(); ++r) {
    Matrix act = m.action_of(radb.col(r));
    for (std::size_t c = 0; c < act.cols(); ++c) span.add(act.col(c));
  }
  return quotient_module(m, span.basis_rows().transpose());
}

SubmoduleResult Workspace::socle_of(const Module& m) {
  const Field& f = algebra_->field();
  Matrix radb = radical().basis_cols();
  if (radb.cols() == 0) return submodule(m, Matrix::identity(f, m.dim()));
  Matrix stacked(f, 0, m.dim());
  for (std::size_t r = 0; r < radb.cols(); ++r) {
    stacked = stacked.vstack(m.action_of(radb.col(r)));
  }
  return submodule(m, kernel_basis(stacked));
}

std::vector<std::size_t> Workspace::top_multiplicities(const Module& m) {
  QuotientModuleResult t = top_of(m);
  std::vector<std::size_t> mults(class_count());
  for (std::size_t i = 0; i < class_count(); ++i) {
    mults[i] = rank(t.module.action_of(class_idempotent(i)));
  }
  return mults;
}

std::vector<std::size_t> Workspace::socle_multiplicities(const Module& m) {
  SubmoduleResult s = socle_of(m);
  std::vector<std::size_t> mults(class_count());
  for (std::size_t i = 0; i < class_count(); ++i) {
    mults[i] = rank(s.module.action_of(class_idempotent(i)));
  }
  return mults;
}

AugmentedModule projective_cover(Workspace& ws, const Module& m) {
  const Field& f = ws.algebra()->field();
  const std::size_t classes = ws.class_count();
  if (m.dim() == 0) {
    Module p = Module::zero(ws.algebra());
    ModuleMap map = ModuleMap::unchecked(p, m, Matrix(f, 0, 0));
    return AugmentedModule{std::move(p), std::vector<std::size_t>(classes, 0), std::move(map)};
  }
  QuotientModuleResult top = ws.top_of(m);
  std::vector<std::size_t> mults(classes, 0);
  std::vector<Module> parts;
  std::vector<Matrix> blocks;
  for (std::size_t cls = 0; cls < classes; ++cls) {
    Matrix e = ws.class_idempotent(cls);
    Matrix te = top.module.action_of(e);
    std::size_t want = rank(te);
    mults[cls] = want;
    if (want == 0) continue;
    const Module& p = ws.projectives()[cls];
    const Matrix& incl = ws.projective_inclusions()[cls];
    Matrix em = m.action_of(e);
    EchelonBuilder used(f, top.module.dim());
    std::size_t found = 0;
    for (std::size_t j = 0; j < top.module.dim() && found < want; ++j) {
      Matrix u = te.col(j);
      if (!used.add(u)) continue;
      // preimage of u under the projection, pushed into the e-corner of m
      auto sol = solve_linear(top.projection.matrix(), u);
      if (!sol) throw Error(ErrorCode::LiftingFailed, "top projection is not surjective");
      Matrix v = em.mul(sol->particular);
      // block: P_cls -> m, x e |-> x v
      Matrix block(f, m.dim(), p.dim());
      for (std::size_t t = 0; t < p.dim(); ++t) {
        block.set_block(0, t, m.action_of(incl.col(t)).mul(v));
      }
      blocks.push_back(std::move(block));
      parts.push_back(p);
      ++found;
    }
    if (found != want) {
      throw Error(ErrorCode::LiftingFailed, "could not assemble projective cover generators");
    }
  }
  if (parts.empty()) {
    // nonzero module with zero top cannot happen over a nilpotent radical
    throw Error(ErrorCode::LiftingFailed, "nonzero module has empty top");
  }
  Module cover = direct_sum(parts);
  Matrix phi(f, m.dim(), cover.dim());
  std::size_t off = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    phi.set_block(0, off, blocks[b]);
    off += blocks[b].cols();
  }
  if (rank(phi) != m.dim()) {
    throw Error(ErrorCode::LiftingFailed, "projective cover map is not surjective");
  }
  ModuleMap map = ModuleMap::unchecked(cover, m, std::move(phi));
  return AugmentedModule{std::move(cover), std::move(mults), std::move(map)};
}

AugmentedModule injective_envelope(Workspace& ws, const Module& m) {
  Workspace& wop = ws.opposite();
  Module md = dual_module(m, wop.algebra());
  AugmentedModule cov = projective_cover(wop, md);
  Module env = dual_module(cov.module, ws.algebra());
  // D(D(m)) is literally m again in this presentation
  ModuleMap mono = ModuleMap::unchecked(m, env, cov.map.matrix().transpose());
  const auto& align = ws.op_class_map();
  std::vector<std::size_t> mults(ws.class_count(), 0);
  for (std::size_t j = 0; j < cov.mults.size(); ++j) mults[align[j]] = cov.mults[j];
  return AugmentedModule{std::move(env), std::move(mults), std::move(mono)};
}

Resolution minimal_resolution(Workspace& ws, const Module& m, Direction direction,
                              std::size_t cutoff) {
  if (direction == Direction::Injective) {
    Workspace& wop = ws.opposite();
    Module md = dual_module(m, wop.algebra());
    Resolution projres = minimal_resolution(wop, md, Direction::Projective, cutoff);
    Resolution out;
    out.direction = Direction::Injective;
    out.cutoff = cutoff;
    out.terminated = projres.terminated;
    const auto& align = ws.op_class_map();
    for (std::size_t s = 0; s < projres.terms.size(); ++s) {
      Module term = dual_module(projres.terms[s].term, ws.algebra());
      std::vector<std::size_t> mults(ws.class_count(), 0);
      for (std::size_t j = 0; j < projres.terms[s].mults.size(); ++j) {
        mults[align[j]] = projres.terms[s].mults[j];
      }
      out.terms.push_back(ResolutionTerm{std::move(term), std::move(mults)});
    }
    for (std::size_t s = 0; s < projres.maps.size(); ++s) {
      const Module& src = s == 0 ? m : out.terms[s - 1].term;
      const Module& tgt = out.terms[s].term;
      out.maps.push_back(
          ModuleMap::unchecked(src, tgt, projres.maps[s].matrix().transpose()));
    }
    return out;
  }

  Resolution out;
  out.direction = Direction::Projective;
  out.cutoff = cutoff;
  Module cur = m;
  std::optional<ModuleMap> prev_inclusion;
  for (std::size_t s = 0; s <= cutoff; ++s) {
    if (cur.dim() == 0) {
      out.terminated = true;
      return out;
    }
    AugmentedModule cov = projective_cover(ws, cur);
    if (s == 0) {
      out.maps.push_back(cov.map);
    } else {
      out.maps.push_back(ModuleMap::unchecked(
          cov.module, out.terms[s - 1].term,
          prev_inclusion->matrix().mul(cov.map.matrix())));
    }
    SubmoduleResult ker = kernel_module(cov.map);
    out.terms.push_back(ResolutionTerm{std::move(cov.module), std::move(cov.mults)});
    prev_inclusion = ker.inclusion;
    cur = ker.module;
  }
  out.terminated = cur.dim() == 0;
  return out;
}

HomDim homological_dimension(Workspace& ws, const Module& m, Direction direction,
                             std::size_t cutoff) {
  Resolution res = minimal_resolution(ws, m, direction, cutoff);
  if (res.terminated) {
    return HomDim::finite_dim(res.terms.empty() ? 0 : res.terms.size() - 1);
  }
  return HomDim::at_least(cutoff + 1);
}

bool is_projective(Workspace& ws, const Module& m) {
  if (m.dim() == 0) return true;
  AugmentedModule cov = projective_cover(ws, m);
  return cov.module.dim() == m.dim();
}

bool is_injective(Workspace& ws, const Module& m) {
  if (m.dim() == 0) return true;
  AugmentedModule env = injective_envelope(ws, m);
  return env.module.dim() == m.dim();
}

namespace {

// coefficients of `target` in the span of `basis` (all flattened)
Matrix express_in_hom_basis(const std::vector<ModuleMap>& basis, const Matrix& target) {
  const Field& f = target.field();
  Matrix sys(f, target.rows() * target.cols(), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) sys.set_block(0, k, basis[k].matrix().vec());
  auto sol = solve_linear(sys, target.vec());
  if (!sol) throw Error(ErrorCode::LiftingFailed, "hom element escapes its own basis");
  return sol->particular;
}

}  // namespace

std::size_t ext_dim(Workspace& ws, const Module& m, const Module& n, std::size_t i) {
  if (i == 0) return hom_dim(m, n);
  Resolution res = minimal_resolution(ws, m, Direction::Projective, i + 1);
  if (res.terms.size() <= i) return 0;
  std::vector<ModuleMap> h_prev = hom_space(res.terms[i - 1].term, n);
  std::vector<ModuleMap> h_cur = hom_space(res.terms[i].term, n);
  std::vector<ModuleMap> h_next;
  if (res.terms.size() > i + 1) h_next = hom_space(res.terms[i + 1].term, n);
  const Field& f = ws.algebra()->field();
  // delta_{i-1}: precompose with maps[i]
  std::size_t rank_in = 0;
  if (!h_prev.empty() && !h_cur.empty()) {
    Matrix d(f, h_cur.size(), h_prev.size());
    for (std::size_t k = 0; k < h_prev.size(); ++k) {
      Matrix img = h_prev[k].matrix().mul(res.maps[i].matrix());
      d.set_block(0, k, express_in_hom_basis(h_cur, img));
    }
    rank_in = rank(d);
  }
  std::size_t rank_out = 0;
  if (!h_cur.empty() && !h_next.empty()) {
    Matrix d(f, h_next.size(), h_cur.size());
    for (std::size_t k = 0; k < h_cur.size(); ++k) {
      Matrix img = h_cur[k].matrix().mul(res.maps[i + 1].matrix());
      d.set_block(0, k, express_in_hom_basis(h_next, img));
    }
    rank_out = rank(d);
  }
  return h_cur.size() - rank_in - rank_out;
}

std::size_t ext_dim_via_injective(Workspace& ws, const Module& m, const Module& n,
                                  std::size_t i) {
  if (i == 0) return hom_dim(m, n);
  Resolution res = minimal_resolution(ws, n, Direction::Injective, i + 1);
  if (res.terms.size() <= i) return 0;
  std::vector<ModuleMap> h_prev = hom_space(m, res.terms[i - 1].term);
  std::vector<ModuleMap> h_cur = hom_space(m, res.terms[i].term);
  std::vector<ModuleMap> h_next;
  if (res.terms.size() > i + 1) h_next = hom_space(m, res.terms[i + 1].term);
  const Field& f = ws.algebra()->field();
  // delta_{i-1}: postcompose with maps[i]: I^{i-1} -> I^i
  std::size_t rank_in = 0;
  if (!h_prev.empty() && !h_cur.empty()) {
    Matrix d(f, h_cur.size(), h_prev.size());
    for (std::size_t k = 0; k < h_prev.size(); ++k) {
      Matrix img = res.maps[i].matrix().mul(h_prev[k].matrix());
      d.set_block(0, k, express_in_hom_basis(h_cur, img));
    }
    rank_in = rank(d);
  }
  std::size_t rank_out = 0;
  if (!h_cur.empty() && !h_next.empty()) {
    Matrix d(f, h_next.size(), h_cur.size());
    for (std::size_t k = 0; k < h_cur.size(); ++k) {
      Matrix img = res.maps[i + 1].matrix().mul(h_cur[k].matrix());
      d.set_block(0, k, express_in_hom_basis(h_next, img));
    }
    rank_out = rank(d);
  }
  return h_cur.size() - rank_in - rank_out;
}

GabrielData gabriel_quiver(Workspace& ws) {
  const Field& f = ws.algebra()->field();
  const Algebra& a = *ws.algebra();
  const std::size_t classes = ws.class_count();
  // distinctness of classes is certified by Hom between simples
  for (std::size_t i = 0; i < classes; ++i) {
    for (std::size_t j = i + 1; j < classes; ++j) {
      IsoResult iso = is_isomorphic(ws.simples()[i], ws.simples()[j], ws.seed());
      if (iso.verdict == IsoResult::Verdict::Isomorphic) {
        throw Error(ErrorCode::NonSplit, "two idempotent classes carry isomorphic simples");
      }
    }
  }
  const Subspace& rad = ws.radical();
  const auto& powers = ws.radical_powers();
  Subspace rad2 = powers.size() >= 2 ? powers[1] : Subspace::zero(f, a.dim());
  GabrielData data;
  data.arrow_counts.assign(classes, std::vector<std::size_t>(classes, 0));
  for (std::size_t i = 0; i < classes; ++i) {
    data.vertex_labels.push_back("v" + std::to_string(i));
    data.simple_dims.push_back(ws.simples()[i].dim());
  }
  Matrix radb = rad.basis_cols();
  for (std::size_t from = 0; from < classes; ++from) {
    Matrix ei = ws.class_idempotent(from);
    for (std::size_t to = 0; to < classes; ++to) {
      Matrix ej = ws.class_idempotent(to);
      EchelonBuilder span(f, a.dim());
      for (std::size_t r = 0; r < radb.cols(); ++r) {
        Matrix v = a.multiply(ej, a.multiply(radb.col(r), ei));
        span.add(rad2.reduce(v));
      }
      data.arrow_counts[from][to] = span.dim();
    }
  }
  data.quiver.vertices = data.vertex_labels;
  std::size_t arrow_id = 0;
  for (std::size_t from = 0; from < classes; ++from) {
    for (std::size_t to = 0; to < classes; ++to) {
      for (std::size_t k = 0; k < data.arrow_counts[from][to]; ++k) {
        data.quiver.arrows.push_back(Arrow{"a" + std::to_string(arrow_id++), from, to});
      }
    }
  }
  return data;
}

}  // namespace halg
