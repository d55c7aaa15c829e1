#include "halg/report.hpp"

#include <sstream>

namespace halg {

Json scalar_to_json(const Scalar& s) { return Field::str(s); }

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(Field::str(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json homdim_to_json(const HomDim& d) {
  Json j;
  j["kind"] = d.finite ? "finite" : "at_least";
  j["value"] = d.value;
  return j;
}

Json resolution_to_json(const Resolution& r) {
  Json j;
  j["direction"] = r.direction == Direction::Projective ? "projective" : "injective";
  j["cutoff"] = r.cutoff;
  j["terminated"] = r.terminated;
  Json terms = Json::array();
  for (const auto& t : r.terms) {
    Json term;
    term["dim"] = t.term.dim();
    term["multiplicities"] = t.mults;
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

Json make_report(const std::string& claim, const std::string& verdict, std::size_t cutoff,
                 std::uint64_t seed, Json evidence, Json certificates) {
  Json j;
  j["claim"] = claim;
  j["verdict"] = verdict;
  j["cutoff"] = cutoff;
  j["seed"] = seed;
  j["evidence"] = std::move(evidence);
  j["certificates"] = std::move(certificates);
  return j;
}

namespace {

void render_value(std::ostringstream& os, const Json& v, int indent) {
  std::string pad(indent, ' ');
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (it.value().is_object() || it.value().is_array()) {
        os << pad << it.key() << ":\n";
        render_value(os, it.value(), indent + 2);
      } else {
        os << pad << it.key() << ": " << it.value().dump() << "\n";
      }
    }
  } else if (v.is_array()) {
    if (v.size() > 8) {
      os << pad << v.dump() << "\n";
      return;
    }
    for (const auto& item : v) {
      if (item.is_object() || item.is_array()) {
        os << pad << "-\n";
        render_value(os, item, indent + 2);
      } else {
        os << pad << "- " << item.dump() << "\n";
      }
    }
  } else {
    os << pad << v.dump() << "\n";
  }
}

}  // namespace

std::string render_text_report(const Json& report) {
  std::ostringstream os;
  if (report.contains("claim")) {
    os << "claim:   " << report["claim"].get<std::string>() << "\n";
  }
  if (report.contains("verdict")) {
    os << "verdict: " << report["verdict"].get<std::string>() << "\n";
  }
  for (auto it = report.begin(); it != report.end(); ++it) {
    if (it.key() == "claim" || it.key() == "verdict") continue;
    if (it.value().is_object() || it.value().is_array()) {
      os << it.key() << ":\n";
      render_value(os, it.value(), 2);
    } else {
      os << it.key() << ": " << it.value().dump() << "\n";
    }
  }
  return os.str();
}

}  // namespace halg
