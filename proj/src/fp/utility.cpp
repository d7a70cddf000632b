#include "tdtk/fp/utility.hpp"

#include <algorithm>
#include <stdexcept>

namespace tdtk {

double UtilityTable::item_utility(const Transaction& t, const std::string& word) const {
  auto it = t.items.find(word);
  if (it == t.items.end()) return 0.0;
  auto ext = external.find(word);
  return it->second * (ext != external.end() ? ext->second : 1.0);
}

UtilityTable compute_utilities(const WindowBatch& batch, const std::map<std::string, int>& prev_tf) {
  UtilityTable table;
  for (const auto& [w, tf] : batch.tf) {
    auto it = prev_tf.find(w);
    const int prev = it != prev_tf.end() ? it->second : 0;
    table.external[w] = std::max(tf - prev, 0) + 1.0;
  }
  for (const auto& t : to_transactions(batch)) {
    double tu = 0.0;
    for (const auto& [w, count] : t.items) tu += count * table.external[w];
    table.tu[t.post_id] = tu;
    table.total_tu += tu;
    for (const auto& [w, _] : t.items) table.twu[w] += tu;
  }
  return table;
}

namespace {

struct Projection {
  std::size_t txn;       // index into transactions
  double prefix_util;    // utility of current pattern within this transaction
};

// DFS over lexicographically ordered items. The bound prefix_util +
// remaining-item utility per transaction is valid because all item
// utilities are positive.
void search(const std::vector<Transaction>& txns, const UtilityTable& ut,
            const std::vector<std::string>& items, std::size_t next_item,
            const std::vector<Projection>& proj, std::vector<std::string>& pattern,
            double min_util, std::vector<Pattern>& out) {
  for (std::size_t i = next_item; i < items.size(); ++i) {
    const std::string& w = items[i];
    std::vector<Projection> ext;
    double utility = 0.0;
    double bound = 0.0;
    for (const auto& pr : proj) {
      const auto& t = txns[pr.txn];
      const double u = ut.item_utility(t, w);
      if (u <= 0.0) continue;
      const double pu = pr.prefix_util + u;
      ext.push_back({pr.txn, pu});
      utility += pu;
      double rem = 0.0;
      for (std::size_t j = i + 1; j < items.size(); ++j) rem += ut.item_utility(t, items[j]);
      bound += pu + rem;
    }
    if (ext.empty()) continue;
    pattern.push_back(w);
    if (utility >= min_util) {
      Pattern p;
      p.items = pattern;
      std::sort(p.items.begin(), p.items.end());
      p.utility = utility;
      for (const auto& pr : ext) p.post_ids.insert(txns[pr.txn].post_id);
      p.support = static_cast<int>(p.post_ids.size());
      out.push_back(std::move(p));
    }
    if (bound >= min_util) search(txns, ut, items, i + 1, ext, pattern, min_util, out);
    pattern.pop_back();
  }
}

}  // namespace

std::vector<Pattern> hupm_mine(const std::vector<Transaction>& transactions,
                               const UtilityTable& utilities, double min_util) {
  if (min_util < 0) throw std::invalid_argument("hupm_mine: min_util must be >= 0");

  std::vector<std::string> items;
  for (const auto& [w, twu] : utilities.twu)
    if (twu >= min_util) items.push_back(w);

  std::vector<Projection> all;
  all.reserve(transactions.size());
  for (std::size_t i = 0; i < transactions.size(); ++i) all.push_back({i, 0.0});

  std::vector<Pattern> out;
  std::vector<std::string> pattern;
  search(transactions, utilities, items, 0, all, pattern, min_util, out);
  std::sort(out.begin(), out.end(),
            [](const Pattern& a, const Pattern& b) { return a.items < b.items; });
  return out;
}

std::vector<Pattern> consolidate_patterns(std::vector<Pattern> patterns) {
  std::sort(patterns.begin(), patterns.end(), [](const Pattern& a, const Pattern& b) {
    if (a.utility != b.utility) return a.utility > b.utility;
    return a.items < b.items;
  });
  std::vector<Pattern> kept;
  for (auto& p : patterns) {
    bool absorbed = false;
    for (const auto& k : kept) {
      if (p.items.size() > k.items.size()) continue;
      if (!std::includes(k.items.begin(), k.items.end(), p.items.begin(), p.items.end())) continue;
      if (p.post_ids.empty()) {
        absorbed = true;
        break;
      }
      std::size_t shared = 0;
      for (const auto& id : p.post_ids) shared += k.post_ids.count(id);
      if (2 * shared >= p.post_ids.size()) {
        absorbed = true;
        break;
      }
    }
    if (!absorbed) kept.push_back(std::move(p));
  }
  return kept;
}

}  // namespace tdtk
