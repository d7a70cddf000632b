#include "tdtk/hybrid/catt.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace tdtk {

double cimawa(int cooc, int fx, int fy, double damping) {
  if (fx <= 0 || fy <= 0) throw std::invalid_argument("cimawa: unseen word");
  const double c = static_cast<double>(cooc);
  return c / fy + damping * c / fx;
}

double agf(int cooc, int fx, int fy, double damping) {
  return cimawa(cooc, fx, fy, damping) * cimawa(cooc, fy, fx, damping);
}

namespace {

struct Pair {
  std::string x, y;  // x < y
  double score = 0.0;
};

int find_root(std::vector<int>& parent, int i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

}  // namespace

std::vector<Topic> catt_detect(const WindowBatch& batch, const CattConfig& cfg) {
  if (cfg.damping < 0.0 || cfg.damping > 1.0)
    throw std::invalid_argument("catt_detect: damping must be in [0,1]");
  if (cfg.rate <= 0.0 || cfg.rate > 0.5)
    throw std::invalid_argument("catt_detect: rate must be in (0, 0.5]");

  std::map<std::string, int> f;
  std::map<std::pair<std::string, std::string>, int> cooc;
  for (const auto& p : batch.posts) {
    if (!p.tokens) continue;
    std::set<std::string> words(p.tokens->begin(), p.tokens->end());
    for (const auto& w : words) ++f[w];
    for (auto i = words.begin(); i != words.end(); ++i)
      for (auto j = std::next(i); j != words.end(); ++j) ++cooc[{*i, *j}];
  }

  std::vector<Pair> pairs;
  for (const auto& [key, c] : cooc) {
    if (c < 2) continue;
    pairs.push_back({key.first, key.second, agf(c, f[key.first], f[key.second], cfg.damping)});
  }
  if (pairs.empty()) return {};

  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });
  const auto keep = static_cast<std::size_t>(
      std::ceil(cfg.rate * static_cast<double>(pairs.size())));
  pairs.resize(std::max<std::size_t>(1, keep));

  // connected components over surviving pairs
  std::map<std::string, int> index;
  for (const auto& p : pairs) {
    index.emplace(p.x, static_cast<int>(index.size()));
    index.emplace(p.y, static_cast<int>(index.size()));
  }
  std::vector<int> parent(index.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::map<std::string, double> summed_agf;
  for (const auto& p : pairs) {
    const int a = find_root(parent, index[p.x]);
    const int b = find_root(parent, index[p.y]);
    if (a != b) parent[b] = a;
    summed_agf[p.x] += p.score;
    summed_agf[p.y] += p.score;
  }

  std::map<int, std::vector<std::string>> components;
  for (const auto& [w, i] : index) components[find_root(parent, i)].push_back(w);

  std::vector<Topic> topics;
  for (auto& [root, words] : components) {
    Topic t;
    std::sort(words.begin(), words.end(), [&](const std::string& a, const std::string& b) {
      if (summed_agf[a] != summed_agf[b]) return summed_agf[a] > summed_agf[b];
      return a < b;
    });
    t.keywords = words;
    std::set<std::string> vocab(words.begin(), words.end());
    for (const auto& p : batch.posts) {
      if (!p.tokens) continue;
      std::set<std::string> seen;
      for (const auto& w : *p.tokens)
        if (vocab.count(w)) seen.insert(w);
      if (seen.size() >= 2) t.post_ids.insert(p.id);
    }
    for (const auto& w : words) t.score += summed_agf[w];
    topics.push_back(std::move(t));
  }
  std::sort(topics.begin(), topics.end(), [](const Topic& a, const Topic& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.keywords < b.keywords;
  });
  return topics;
}

}  // namespace tdtk
