#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tdtk/core/post.hpp"

namespace tdtk {

// One post viewed as a transaction: distinct words with their in-post counts.
struct Transaction {
  std::string post_id;
  std::map<std::string, int> items;  // word -> occurrence count, >= 1
};

std::vector<Transaction> to_transactions(const WindowBatch& batch);

struct Pattern {
  std::vector<std::string> items;  // sorted, nonempty
  int support = 0;
  double utility = 0.0;
  std::set<std::string> post_ids;
};

// Exact frequent-itemset mining over an FP-tree. Returns every itemset with
// support >= min_support, items sorted, post ids attached.
std::vector<Pattern> fp_growth(const std::vector<Transaction>& transactions, int min_support);

// Keeps only patterns with no frequent superset in the input.
std::vector<Pattern> maximal_patterns(std::vector<Pattern> patterns);

}  // namespace tdtk
