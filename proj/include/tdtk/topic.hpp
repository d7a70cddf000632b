#pragma once

#include <set>
#include <string>
#include <vector>

namespace tdtk {

// An ordered keyword list (the title) plus the set of related post ids.
struct Topic {
  std::vector<std::string> keywords;
  std::set<std::string> post_ids;
  double score = 0.0;
};

}  // namespace tdtk
