#include "halg/json_io.hpp"

#include <fstream>

namespace halg {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw Error(ErrorCode::ParseError, path + ": " + msg);
}

const Json& expect(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) fail(path, std::string("missing key '") + key + "'");
  return j[key];
}

std::size_t expect_index(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !j.is_number_integer()) fail(path, "expected an integer");
  if (j.is_number_float()) fail(path, "floats are rejected");
  long long v = j.get<long long>();
  if (v < 0) fail(path, "expected a nonnegative integer");
  return std::size_t(v);
}

mpz_class integer_from(const Json& j, const std::string& path) {
  if (j.is_number_float()) fail(path, "floats are rejected (exact coefficients only)");
  if (j.is_number_integer() || j.is_number_unsigned()) {
    return mpz_class(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    mpz_class v;
    if (mpz_set_str(v.get_mpz_t(), j.get<std::string>().c_str(), 10) != 0) {
      fail(path, "cannot parse integer '" + j.get<std::string>() + "'");
    }
    return v;
  }
  fail(path, "expected an integer or integer string");
}

Scalar scalar_from(const Json& j, const Field& f, const std::string& path) {
  if (j.is_number_float()) fail(path, "floats are rejected (exact coefficients only)");
  if (j.is_number_integer() || j.is_number_unsigned()) {
    return f.reduce(Scalar(integer_from(j, path)));
  }
  if (j.is_string()) {
    try {
      return f.parse(j.get<std::string>());
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }
  if (j.is_array() && j.size() == 2) {
    mpz_class num = integer_from(j[0], path + "/0");
    mpz_class den = integer_from(j[1], path + "/1");
    if (den == 0) fail(path, "zero denominator");
    return f.reduce(Scalar(mpq_class(num) / mpq_class(den)));
  }
  fail(path, "expected an exact scalar (string, integer, or [num,den])");
}

Field field_from(const Json& j, const std::string& path) {
  std::string kind = expect(j, "kind", path).get<std::string>();
  if (kind == "rational") return Field::rationals();
  if (kind == "prime") {
    std::size_t p = expect_index(expect(j, "p", path), path + "/p");
    try {
      return Field::prime(p);
    } catch (const Error& e) {
      fail(path + "/p", e.what());
    }
  }
  fail(path + "/kind", "unknown field kind '" + kind + "'");
}

Matrix dense_matrix_from(const Json& j, const Field& f, std::size_t rows, std::size_t cols,
                         const std::string& path) {
  if (!j.is_array() || j.size() != rows) {
    fail(path, "expected " + std::to_string(rows) + " rows");
  }
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != cols) {
      fail(path + "/" + std::to_string(i), "expected " + std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m.set_reduced(i, c,
                    scalar_from(row[c], f, path + "/" + std::to_string(i) + "/" + std::to_string(c)));
    }
  }
  return m;
}

// sparse term list: [[num, den, basis_index], ...]
void sparse_terms_into(const Json& j, const Field& f, std::vector<Scalar>& dest,
                       std::size_t stride_base, std::size_t n, const std::string& path) {
  if (!j.is_array()) fail(path, "expected a term list");
  for (std::size_t t = 0; t < j.size(); ++t) {
    const Json& term = j[t];
    const std::string tpath = path + "/" + std::to_string(t);
    if (!term.is_array() || term.size() != 3) fail(tpath, "expected [num, den, basis_index]");
    mpz_class num = integer_from(term[0], tpath + "/0");
    mpz_class den = integer_from(term[1], tpath + "/1");
    if (den == 0) fail(tpath, "zero denominator");
    std::size_t idx = expect_index(term[2], tpath + "/2");
    if (idx >= n) fail(tpath + "/2", "basis index out of range");
    dest[stride_base + idx] = f.reduce(Scalar(mpq_class(num) / mpq_class(den)));
  }
}

}  // namespace

AlgebraPtr algebra_from_json(const Json& j) {
  Field f = field_from(expect(j, "field", ""), "/field");
  const Json& labels_j = expect(j, "labels", "");
  if (!labels_j.is_array() || labels_j.empty()) fail("/labels", "expected a nonempty array");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < labels_j.size(); ++i) {
    if (!labels_j[i].is_string()) fail("/labels/" + std::to_string(i), "expected a string");
    labels.push_back(labels_j[i].get<std::string>());
  }
  const std::size_t n = labels.size();
  const Json& mul_j = expect(j, "mul", "");
  if (!mul_j.is_array() || mul_j.size() != n) fail("/mul", "expected an n x n table");
  std::vector<Scalar> mul(n * n * n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (!mul_j[i].is_array() || mul_j[i].size() != n) {
      fail("/mul/" + std::to_string(i), "expected " + std::to_string(n) + " term lists");
    }
    for (std::size_t jj = 0; jj < n; ++jj) {
      sparse_terms_into(mul_j[i][jj], f, mul, (i * n + jj) * n, n,
                        "/mul/" + std::to_string(i) + "/" + std::to_string(jj));
    }
  }
  std::vector<Scalar> unit_terms(n, Scalar(0));
  sparse_terms_into(expect(j, "unit", ""), f, unit_terms, 0, n, "/unit");
  return Algebra::make(f, std::move(labels), std::move(mul), std::move(unit_terms),
                       j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>()
                                                                   : "");
}

Quiver quiver_from_json(const Json& j) {
  Quiver q;
  const Json& vj = expect(j, "vertices", "");
  if (!vj.is_array() || vj.empty()) fail("/vertices", "expected a nonempty array");
  for (std::size_t i = 0; i < vj.size(); ++i) {
    if (!vj[i].is_string()) fail("/vertices/" + std::to_string(i), "expected a string");
    q.vertices.push_back(vj[i].get<std::string>());
  }
  auto vertex_index = [&](const std::string& label, const std::string& path) {
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
      if (q.vertices[v] == label) return v;
    }
    fail(path, "unknown vertex '" + label + "'");
    return std::size_t(0);
  };
  if (j.contains("arrows")) {
    const Json& aj = j["arrows"];
    if (!aj.is_array()) fail("/arrows", "expected an array");
    for (std::size_t i = 0; i < aj.size(); ++i) {
      const std::string path = "/arrows/" + std::to_string(i);
      const Json& arrow = aj[i];
      Arrow a;
      a.name = expect(arrow, "name", path).get<std::string>();
      a.from = vertex_index(expect(arrow, "from", path).get<std::string>(), path + "/from");
      a.to = vertex_index(expect(arrow, "to", path).get<std::string>(), path + "/to");
      q.arrows.push_back(std::move(a));
    }
  }
  q.validate();
  return q;
}

GroupActionPtr action_from_json(const Json& j, const AlgebraPtr& algebra) {
  const Json& ej = expect(j, "elements", "");
  if (!ej.is_array() || ej.empty()) fail("/elements", "expected a nonempty array");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < ej.size(); ++i) labels.push_back(ej[i].get<std::string>());
  const std::size_t m = labels.size();
  const Json& tj = expect(j, "mul_table", "");
  if (!tj.is_array() || tj.size() != m) fail("/mul_table", "expected an m x m index table");
  std::vector<std::vector<std::size_t>> table(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!tj[i].is_array() || tj[i].size() != m) {
      fail("/mul_table/" + std::to_string(i), "expected " + std::to_string(m) + " indices");
    }
    for (std::size_t c = 0; c < m; ++c) {
      std::size_t v = expect_index(tj[i][c], "/mul_table/" + std::to_string(i) + "/" + std::to_string(c));
      if (v >= m) fail("/mul_table/" + std::to_string(i) + "/" + std::to_string(c), "index out of range");
      table[i].push_back(v);
    }
  }
  std::size_t identity = expect_index(expect(j, "identity", ""), "/identity");
  const Json& ij = expect(j, "images", "");
  std::vector<AlgebraAutomorphism> images;
  const std::size_t n = algebra->dim();
  for (std::size_t s = 0; s < m; ++s) {
    if (!ij.contains(labels[s])) fail("/images", "missing image for element '" + labels[s] + "'");
    Matrix mat = dense_matrix_from(ij[labels[s]], algebra->field(), n, n, "/images/" + labels[s]);
    try {
      images.push_back(AlgebraAutomorphism::validate(algebra, std::move(mat)));
    } catch (const Error& e) {
      fail("/images/" + labels[s], e.what());
    }
  }
  return GroupAction::make(algebra, std::move(labels), std::move(table), identity,
                           std::move(images));
}

Module module_from_json(const Json& j, const std::string& base_dir) {
  const Json& aj = expect(j, "algebra", "");
  AlgebraPtr algebra;
  if (aj.is_string()) {
    std::string path = aj.get<std::string>();
    if (!path.empty() && path[0] != '/' && !base_dir.empty()) path = base_dir + "/" + path;
    algebra = algebra_from_json(load_json_file(path));
  } else {
    algebra = algebra_from_json(aj);
  }
  std::size_t d = expect_index(expect(j, "dim", ""), "/dim");
  const Json& actj = expect(j, "action", "");
  if (!actj.is_array() || actj.size() != algebra->dim()) {
    fail("/action", "expected one matrix per algebra basis element");
  }
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < algebra->dim(); ++i) {
    action.push_back(
        dense_matrix_from(actj[i], algebra->field(), d, d, "/action/" + std::to_string(i)));
  }
  return Module::make(algebra, std::move(action));
}

Json algebra_to_json(const Algebra& a) {
  Json j;
  if (a.field().is_prime_field()) {
    j["field"] = Json{{"kind", "prime"}, {"p", a.field().characteristic()}};
  } else {
    j["field"] = Json{{"kind", "rational"}};
  }
  j["labels"] = a.labels();
  const std::size_t n = a.dim();
  Json mul = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t jj = 0; jj < n; ++jj) {
      Json terms = Json::array();
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = a.c(i, jj, k);
        if (Field::is_zero(c)) continue;
        terms.push_back(Json::array({c.get_num().get_str(), c.get_den().get_str(), k}));
      }
      row.push_back(std::move(terms));
    }
    mul.push_back(std::move(row));
  }
  j["mul"] = std::move(mul);
  Json unit = Json::array();
  for (std::size_t k = 0; k < n; ++k) {
    const Scalar& c = a.unit().at(k, 0);
    if (Field::is_zero(c)) continue;
    unit.push_back(Json::array({c.get_num().get_str(), c.get_den().get_str(), k}));
  }
  j["unit"] = std::move(unit);
  if (!a.name().empty()) j["name"] = a.name();
  return j;
}

Json quiver_to_json(const Quiver& q) {
  Json j;
  j["vertices"] = q.vertices;
  Json arrows = Json::array();
  for (const Arrow& a : q.arrows) {
    arrows.push_back(
        Json{{"name", a.name}, {"from", q.vertices[a.from]}, {"to", q.vertices[a.to]}});
  }
  j["arrows"] = std::move(arrows);
  return j;
}

Json action_to_json(const GroupAction& g) {
  Json j;
  j["elements"] = g.labels();
  Json table = Json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < g.size(); ++c) row.push_back(g.mul(i, c));
    table.push_back(std::move(row));
  }
  j["mul_table"] = std::move(table);
  j["identity"] = g.identity_index();
  Json images;
  for (std::size_t s = 0; s < g.size(); ++s) {
    images[g.labels()[s]] = matrix_to_json(g.image(s).matrix());
  }
  j["images"] = std::move(images);
  return j;
}

Json module_to_json(const Module& m) {
  Json j;
  j["algebra"] = algebra_to_json(*m.algebra());
  j["dim"] = m.dim();
  Json action = Json::array();
  for (std::size_t i = 0; i < m.algebra()->dim(); ++i) action.push_back(matrix_to_json(m.action(i)));
  j["action"] = std::move(action);
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  out << contents;
  if (!out) throw Error(ErrorCode::IoError, "write failed for '" + path + "'");
}

}  // namespace halg
