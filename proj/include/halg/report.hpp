#pragma once

#include <json.hpp>

#include "halg/resolution.hpp"

namespace halg {

// ordered_json keeps insertion order, which together with canonical "p/q"
// scalar strings makes reports byte-stable across runs
using Json = nlohmann::ordered_json;

Json scalar_to_json(const Scalar& s);
Json matrix_to_json(const Matrix& m);
Json homdim_to_json(const HomDim& d);
Json resolution_to_json(const Resolution& r);

// uniform report envelope: { claim, verdict, cutoff, seed, evidence,
// certificates }
Json make_report(const std::string& claim, const std::string& verdict, std::size_t cutoff,
                 std::uint64_t seed, Json evidence, Json certificates);

std::string render_text_report(const Json& report);

}  // namespace halg
