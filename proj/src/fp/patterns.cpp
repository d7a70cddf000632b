#include "tdtk/fp/patterns.hpp"

#include <algorithm>
#include <memory>
#include <unordered_map>

namespace tdtk {

std::vector<Transaction> to_transactions(const WindowBatch& batch) {
  std::vector<Transaction> out;
  out.reserve(batch.posts.size());
  for (const auto& p : batch.posts) {
    Transaction t;
    t.post_id = p.id;
    if (p.tokens)
      for (const auto& w : *p.tokens) ++t.items[w];
    out.push_back(std::move(t));
  }
  return out;
}

namespace {

struct FpNode {
  int item = -1;  // index into item table
  int count = 0;
  FpNode* parent = nullptr;
  std::map<int, std::unique_ptr<FpNode>> children;
  FpNode* next_same_item = nullptr;  // header-list link
};

struct FpTree {
  FpNode root;
  std::vector<FpNode*> headers;  // per item, head of the same-item list

  explicit FpTree(std::size_t item_count) : headers(item_count, nullptr) {}

  void insert(const std::vector<int>& items, int count) {
    FpNode* node = &root;
    for (int item : items) {
      auto it = node->children.find(item);
      if (it == node->children.end()) {
        auto child = std::make_unique<FpNode>();
        child->item = item;
        child->parent = node;
        child->next_same_item = headers[static_cast<std::size_t>(item)];
        headers[static_cast<std::size_t>(item)] = child.get();
        it = node->children.emplace(item, std::move(child)).first;
      }
      it->second->count += count;
      node = it->second.get();
    }
  }
};

// Items are ranked by descending support, ties by word order; transactions
// insert items in rank order so shared prefixes merge.
void mine(const FpTree& tree, int min_support, std::vector<int>& suffix,
          const std::vector<int>& item_supports_in_tree,
          std::vector<std::pair<std::vector<int>, int>>& out) {
  for (int item = static_cast<int>(tree.headers.size()) - 1; item >= 0; --item) {
    const int support = item_supports_in_tree[static_cast<std::size_t>(item)];
    if (support < min_support) continue;

    suffix.push_back(item);
    out.emplace_back(suffix, support);

    // conditional pattern base for `item`
    std::vector<std::pair<std::vector<int>, int>> cond_paths;
    std::vector<int> cond_support(static_cast<std::size_t>(item), 0);
    for (FpNode* n = tree.headers[static_cast<std::size_t>(item)]; n; n = n->next_same_item) {
      std::vector<int> path;
      for (FpNode* p = n->parent; p && p->item >= 0; p = p->parent) path.push_back(p->item);
      std::reverse(path.begin(), path.end());
      if (!path.empty()) {
        for (int it2 : path) cond_support[static_cast<std::size_t>(it2)] += n->count;
        cond_paths.emplace_back(std::move(path), n->count);
      }
    }

    FpTree cond_tree(static_cast<std::size_t>(item));
    bool any = false;
    for (auto& [path, count] : cond_paths) {
      std::vector<int> kept;
      for (int it2 : path)
        if (cond_support[static_cast<std::size_t>(it2)] >= min_support) kept.push_back(it2);
      if (!kept.empty()) {
        cond_tree.insert(kept, count);
        any = true;
      }
    }
    if (any) mine(cond_tree, min_support, suffix, cond_support, out);
    suffix.pop_back();
  }
}

}  // namespace

std::vector<Pattern> fp_growth(const std::vector<Transaction>& transactions, int min_support) {
  if (min_support < 1) throw std::invalid_argument("fp_growth: min_support must be >= 1");
  std::vector<Pattern> result;
  if (transactions.empty()) return result;

  std::map<std::string, int> support;
  for (const auto& t : transactions)
    for (const auto& [w, _] : t.items) ++support[w];

  // frequent items, ranked by support desc then word asc
  std::vector<std::string> words;
  for (const auto& [w, s] : support)
    if (s >= min_support) words.push_back(w);
  std::sort(words.begin(), words.end(), [&](const std::string& a, const std::string& b) {
    if (support[a] != support[b]) return support[a] > support[b];
    return a < b;
  });
  if (words.empty()) return result;

  std::unordered_map<std::string, int> rank;
  for (std::size_t i = 0; i < words.size(); ++i) rank[words[i]] = static_cast<int>(i);

  FpTree tree(words.size());
  std::vector<int> root_supports(words.size(), 0);
  for (const auto& t : transactions) {
    std::vector<int> items;
    for (const auto& [w, _] : t.items) {
      auto it = rank.find(w);
      if (it != rank.end()) items.push_back(it->second);
    }
    std::sort(items.begin(), items.end());
    if (!items.empty()) {
      for (int item : items) ++root_supports[static_cast<std::size_t>(item)];
      tree.insert(items, 1);
    }
  }

  std::vector<std::pair<std::vector<int>, int>> mined;
  std::vector<int> suffix;
  mine(tree, min_support, suffix, root_supports, mined);

  result.reserve(mined.size());
  for (auto& [items, sup] : mined) {
    Pattern p;
    for (int item : items) p.items.push_back(words[static_cast<std::size_t>(item)]);
    std::sort(p.items.begin(), p.items.end());
    p.support = sup;
    result.push_back(std::move(p));
  }

  // supporting post ids per pattern
  for (auto& p : result) {
    for (const auto& t : transactions) {
      bool all = true;
      for (const auto& w : p.items)
        if (!t.items.count(w)) {
          all = false;
          break;
        }
      if (all) p.post_ids.insert(t.post_id);
    }
  }

  std::sort(result.begin(), result.end(),
            [](const Pattern& a, const Pattern& b) { return a.items < b.items; });
  return result;
}

std::vector<Pattern> maximal_patterns(std::vector<Pattern> patterns) {
  std::vector<bool> keep(patterns.size(), true);
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    for (std::size_t j = 0; j < patterns.size(); ++j) {
      if (i == j || patterns[j].items.size() <= patterns[i].items.size()) continue;
      if (std::includes(patterns[j].items.begin(), patterns[j].items.end(),
                        patterns[i].items.begin(), patterns[i].items.end())) {
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<Pattern> out;
  for (std::size_t i = 0; i < patterns.size(); ++i)
    if (keep[i]) out.push_back(std::move(patterns[i]));
  return out;
}

}  // namespace tdtk
