#include "halg/corpus.hpp"

#include <array>

namespace halg {

namespace {

AlgebraPtr build_kx2() {
  const Field f = Field::rationals();
  std::vector<Scalar> mul(8, Scalar(0));
  auto c = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar& {
    return mul[(i * 2 + j) * 2 + k];
  };
  c(0, 0, 0) = 1;
  c(0, 1, 1) = 1;
  c(1, 0, 1) = 1;
  // x*x = 0
  return Algebra::make(f, {"1", "x"}, std::move(mul), {Scalar(1), Scalar(0)}, "k[x]/(x^2)");
}

GroupActionPtr sign_action(const AlgebraPtr& kx2) {
  Matrix m(kx2->field(), 2, 2);
  m.set(0, 0, Scalar(1));
  m.set(1, 1, Scalar(-1));  // x -> -x
  return GroupAction::cyclic(kx2, AlgebraAutomorphism::validate(kx2, m), 2, "s");
}

AlgebraPtr build_a2() {
  Quiver q;
  q.vertices = {"1", "2"};
  q.arrows = {Arrow{"a", 0, 1}};
  return path_algebra(Field::rationals(), q);
}

// the two-arrow quiver 1 -> 2, 1 -> 2' with the switch action
AlgebraPtr build_twoarrows() {
  Quiver q;
  q.vertices = {"1", "2", "2p"};
  q.arrows = {Arrow{"a", 0, 1}, Arrow{"b", 0, 2}};
  return path_algebra(Field::rationals(), q);
}

GroupActionPtr switch_action(const AlgebraPtr& lam) {
  // basis order: e_1, e_2, e_2p, a, b
  Matrix m(lam->field(), 5, 5);
  m.set(0, 0, Scalar(1));
  m.set(2, 1, Scalar(1));
  m.set(1, 2, Scalar(1));
  m.set(4, 3, Scalar(1));
  m.set(3, 4, Scalar(1));
  return GroupAction::cyclic(lam, AlgebraAutomorphism::validate(lam, m), 2, "s");
}

AlgebraPtr build_threepoints() {
  Quiver q;
  q.vertices = {"1", "2", "3"};
  return path_algebra(Field::rationals(), q);
}

GroupActionPtr rotation_action(const AlgebraPtr& a) {
  Matrix m(a->field(), 3, 3);
  m.set(1, 0, Scalar(1));
  m.set(2, 1, Scalar(1));
  m.set(0, 2, Scalar(1));
  return GroupAction::cyclic(a, AlgebraAutomorphism::validate(a, m), 3, "r");
}

// permutations of {0,1,2} in a fixed order with composition p∘q (q first)
const std::array<std::array<std::size_t, 3>, 6>& s3_permutations() {
  static const std::array<std::array<std::size_t, 3>, 6> perms = {{
      {0, 1, 2},  // e
      {1, 0, 2},  // (01)
      {2, 1, 0},  // (02)
      {0, 2, 1},  // (12)
      {1, 2, 0},  // (012): 0->1->2->0
      {2, 0, 1},  // (021)
  }};
  return perms;
}

std::vector<std::vector<std::size_t>> s3_table() {
  const auto& perms = s3_permutations();
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<std::size_t, 3> comp;
      for (std::size_t x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      for (std::size_t k = 0; k < 6; ++k) {
        if (perms[k] == comp) {
          table[i][j] = k;
          break;
        }
      }
    }
  }
  return table;
}

const std::array<std::string, 6> kS3Labels = {"e", "(01)", "(02)", "(12)", "(012)", "(021)"};

GroupActionPtr s3_on_threepoints(const AlgebraPtr& a) {
  const auto& perms = s3_permutations();
  std::vector<AlgebraAutomorphism> images;
  for (std::size_t k = 0; k < 6; ++k) {
    Matrix m(a->field(), 3, 3);
    for (std::size_t v = 0; v < 3; ++v) m.set(perms[k][v], v, Scalar(1));
    images.push_back(AlgebraAutomorphism::validate(a, m));
  }
  return GroupAction::make(a, {kS3Labels.begin(), kS3Labels.end()}, s3_table(), 0,
                           std::move(images));
}

// star quiver: center c with arrows a1,a2,a3 to the three outer vertices
AlgebraPtr build_star() {
  Quiver q;
  q.vertices = {"c", "1", "2", "3"};
  q.arrows = {Arrow{"a1", 0, 1}, Arrow{"a2", 0, 2}, Arrow{"a3", 0, 3}};
  return path_algebra(Field::rationals(), q);
}

GroupActionPtr s3_on_star(const AlgebraPtr& a) {
  // basis order: e_c, e_1, e_2, e_3, a1, a2, a3
  const auto& perms = s3_permutations();
  std::vector<AlgebraAutomorphism> images;
  for (std::size_t k = 0; k < 6; ++k) {
    Matrix m(a->field(), 7, 7);
    m.set(0, 0, Scalar(1));
    for (std::size_t v = 0; v < 3; ++v) {
      m.set(1 + perms[k][v], 1 + v, Scalar(1));
      m.set(4 + perms[k][v], 4 + v, Scalar(1));
    }
    images.push_back(AlgebraAutomorphism::validate(a, m));
  }
  return GroupAction::make(a, {kS3Labels.begin(), kS3Labels.end()}, s3_table(), 0,
                           std::move(images));
}

struct BaseSpec {
  std::string name;
  AlgebraPtr (*build)();
  GroupActionPtr (*act)(const AlgebraPtr&);
};

const std::vector<BaseSpec>& base_specs() {
  static const std::vector<BaseSpec> specs = {
      {"kx2", build_kx2, sign_action},
      {"a2", build_a2, nullptr},
      {"example2.8", build_twoarrows, switch_action},
      {"threepoints", build_threepoints, nullptr},
      {"threepoints-z3", build_threepoints, rotation_action},
      {"threepoints-s3", build_threepoints, s3_on_threepoints},
      {"star-s3", build_star, s3_on_star},
  };
  return specs;
}

CorpusEntry build_entry(const BaseSpec& spec) {
  CorpusEntry e;
  e.name = spec.name;
  e.algebra = spec.build();
  if (spec.act) {
    e.action = spec.act(e.algebra);
    e.skew = skew_group_algebra(e.algebra, e.action);
  }
  return e;
}

}  // namespace

std::vector<std::string> corpus_names() {
  std::vector<std::string> names;
  for (const auto& spec : base_specs()) {
    names.push_back(spec.name);
    if (spec.act) names.push_back(spec.name + "-skew");
  }
  return names;
}

CorpusEntry corpus_entry(const std::string& name) {
  for (const auto& spec : base_specs()) {
    if (spec.name == name) return build_entry(spec);
    if (spec.act && name == spec.name + "-skew") {
      CorpusEntry base = build_entry(spec);
      CorpusEntry e;
      e.name = name;
      e.algebra = base.skew;
      return e;
    }
  }
  throw Error(ErrorCode::ParseError, "unknown corpus entry '" + name + "'");
}

}  // namespace halg
