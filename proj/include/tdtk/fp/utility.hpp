#pragma once

#include <map>
#include <string>
#include <vector>

#include "tdtk/core/post.hpp"
#include "tdtk/fp/patterns.hpp"

namespace tdtk {

// Internal utility is the in-post word count; external utility is the
// clamped window-over-window frequency rise plus one, so steady words keep
// unit utility. TU(p) = sum of internal*external over the post's words,
// TWU(w) = sum of TU over posts containing w.
struct UtilityTable {
  std::map<std::string, double> external;
  std::map<std::string, double> tu;   // per post id
  std::map<std::string, double> twu;  // per word
  double total_tu = 0.0;

  double item_utility(const Transaction& t, const std::string& word) const;
};

UtilityTable compute_utilities(const WindowBatch& batch, const std::map<std::string, int>& prev_tf);

// High-utility itemsets: words with TWU < min_util are removed first, then
// every itemset whose exact utility reaches min_util is returned with its
// utility and supporting posts.
std::vector<Pattern> hupm_mine(const std::vector<Transaction>& transactions,
                               const UtilityTable& utilities, double min_util);

// Absorbs any pattern that is a subset of a higher-utility pattern sharing
// at least half of its post set. Output sorted by utility descending.
std::vector<Pattern> consolidate_patterns(std::vector<Pattern> patterns);

}  // namespace tdtk
