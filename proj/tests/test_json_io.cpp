#include <doctest.h>

#include "halg/corpus.hpp"
#include "halg/json_io.hpp"

using namespace halg;

TEST_CASE("algebra JSON round trip") {
  CorpusEntry e = corpus_entry("example2.8");
  Json j = algebra_to_json(*e.algebra);
  AlgebraPtr back = algebra_from_json(j);
  CHECK(back->same_constants(*e.algebra));
  CHECK(back->labels() == e.algebra->labels());

  CorpusEntry kx2 = corpus_entry("kx2");
  AlgebraPtr m2 = matrix_algebra(kx2.algebra, 2);
  CHECK(algebra_from_json(algebra_to_json(*m2))->same_constants(*m2));
}

TEST_CASE("quiver JSON parses labels to indices") {
  Json j = Json::parse(R"({
    "vertices": ["1", "2", "2p"],
    "arrows": [
      {"name": "a", "from": "1", "to": "2"},
      {"name": "b", "from": "1", "to": "2p"}
    ]
  })");
  Quiver q = quiver_from_json(j);
  CHECK(q.vertices.size() == 3);
  CHECK(q.arrows.size() == 2);
  CHECK(q.arrows[0].from == 0);
  CHECK(q.arrows[1].to == 2);
  AlgebraPtr a = path_algebra(Field::rationals(), q);
  CHECK(a->dim() == 5);

  // round trip
  Quiver q2 = quiver_from_json(quiver_to_json(q));
  CHECK(q2.vertices == q.vertices);
  CHECK(q2.arrows.size() == q.arrows.size());
}

TEST_CASE("action JSON round trip validates") {
  CorpusEntry e = corpus_entry("example2.8");
  Json j = action_to_json(*e.action);
  GroupActionPtr back = action_from_json(j, e.algebra);
  CHECK(back->size() == 2);
  CHECK(back->image(1).matrix() == e.action->image(1).matrix());
}

TEST_CASE("module JSON round trip validates") {
  CorpusEntry kx2 = corpus_entry("kx2");
  Module reg = Module::regular(kx2.algebra);
  Json j = module_to_json(reg);
  Module back = module_from_json(j, ".");
  CHECK(back.dim() == 2);
  for (std::size_t i = 0; i < 2; ++i) CHECK(back.action(i) == reg.action(i));
}

TEST_CASE("floats are rejected everywhere, with locations") {
  Json bad = Json::parse(R"({
    "field": {"kind": "rational"},
    "labels": ["1"],
    "mul": [[[[1, 1, 0]]]],
    "unit": [[1.5, 1, 0]]
  })");
  try {
    algebra_from_json(bad);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("/unit/0/0") != std::string::npos);
    CHECK(std::string(e.what()).find("float") != std::string::npos);
  }
}

TEST_CASE("coefficients accept strings and [num, den] pairs") {
  Json j = Json::parse(R"({
    "field": {"kind": "rational"},
    "labels": ["1", "x"],
    "mul": [
      [ [[1,1,0]], [["3",2,1]] ],
      [ [[3,"2",1]], [] ]
    ],
    "unit": [[1, 1, 0]]
  })");
  // 1*x = (3/2) x, x*1 = (3/2) x, x*x = 0: associative with unit scaled...
  // (1 is still the unit only if 1*x = x), so expect a unit failure
  CHECK_THROWS_WITH_AS(algebra_from_json(j), doctest::Contains("NotUnital"), Error);
}

TEST_CASE("bad group table reported with a location") {
  CorpusEntry kx2 = corpus_entry("kx2");
  Json j = Json::parse(R"({
    "elements": ["1", "s"],
    "mul_table": [[0, 1], [1, 1]],
    "identity": 0,
    "images": {
      "1": [["1", "0"], ["0", "1"]],
      "s": [["1", "0"], ["0", "-1"]]
    }
  })");
  CHECK_THROWS_WITH_AS(action_from_json(j, kx2.algebra), doctest::Contains("NotAGroup"), Error);
}

TEST_CASE("missing files and malformed JSON") {
  CHECK_THROWS_AS(load_json_file("/nonexistent/halg.json"), Error);
}

TEST_CASE("prime field JSON") {
  Json j = Json::parse(R"({
    "field": {"kind": "prime", "p": 7},
    "labels": ["1", "x"],
    "mul": [
      [ [[1,1,0]], [[1,1,1]] ],
      [ [[1,1,1]], [] ]
    ],
    "unit": [[1, 1, 0]]
  })");
  AlgebraPtr a = algebra_from_json(j);
  CHECK(a->field().is_prime_field());
  CHECK(a->field().characteristic() == 7);
  CHECK(jacobson_radical(*a).dim() == 1);
}
