#pragma once

#include "halg/module.hpp"
#include "halg/report.hpp"

namespace halg {

// Parsers for the on-disk JSON formats. Coefficients are exact strings
// ("3", "-2/5"), integers, or [num, den] pairs; floats are rejected
// everywhere. Errors carry a JSON-pointer-style location.
AlgebraPtr algebra_from_json(const Json& j);
Quiver quiver_from_json(const Json& j);
GroupActionPtr action_from_json(const Json& j, const AlgebraPtr& algebra);
// `base_dir` resolves a file-reference "algebra" field
Module module_from_json(const Json& j, const std::string& base_dir);

Json algebra_to_json(const Algebra& a);
Json quiver_to_json(const Quiver& q);
Json action_to_json(const GroupAction& g);
Json module_to_json(const Module& m);

Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace halg
