#pragma once

#include "halg/action.hpp"

namespace halg {

// Built-in instances; constructed in-process, no file I/O, bit-identical
// across runs.
struct CorpusEntry {
  std::string name;
  AlgebraPtr algebra;
  GroupActionPtr action;  // null when the entry carries no group action
  AlgebraPtr skew;        // built iff action is present
};

std::vector<std::string> corpus_names();
CorpusEntry corpus_entry(const std::string& name);

}  // namespace halg
