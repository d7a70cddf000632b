#include "tdtk/hybrid/sgjp.hpp"

#include <algorithm>
#include <map>

#include "tdtk/cluster/cluster.hpp"

namespace tdtk {
namespace {

double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::size_t inter = 0;
  for (const auto& x : a) inter += b.count(x);
  return static_cast<double>(inter) / static_cast<double>(a.size() + b.size() - inter);
}

}  // namespace

std::vector<Topic> sgjp_detect(const WindowBatch& batch, const SgjpConfig& cfg,
                               const AnchorModel& anchors, const NgramModel& ngrams) {
  // segment every post; key = words joined by space
  std::map<std::string, Segment> segments;
  for (const auto& p : batch.posts) {
    if (!p.tokens || p.tokens->empty()) continue;
    for (auto& words : segment_tokens(*p.tokens, cfg.h, anchors, ngrams)) {
      std::string key = words[0];
      for (std::size_t i = 1; i < words.size(); ++i) key += ' ' + words[i];
      auto it = segments.find(key);
      if (it == segments.end()) {
        Segment s;
        s.words = words;
        s.stickiness = segment_stickiness(words, anchors, ngrams);
        it = segments.emplace(key, std::move(s)).first;
      }
      it->second.post_ids.insert(p.id);
    }
  }

  // topic segment detection: post frequency >= threshold
  std::vector<Segment> kept;
  for (auto& [_, s] : segments)
    if (static_cast<int>(s.post_ids.size()) >= cfg.threshold) kept.push_back(std::move(s));
  if (kept.empty()) return {};

  WeightedGraph graph;
  graph.n = static_cast<int>(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = i + 1; j < kept.size(); ++j) {
      const double w = jaccard(kept[i].post_ids, kept[j].post_ids);
      if (w > 0.0) graph.edges.emplace_back(static_cast<int>(i), static_cast<int>(j), w);
    }

  const auto labels = jarvis_patrick(graph, cfg.k, cfg.k_min);

  std::map<int, std::vector<const Segment*>> clusters;
  for (std::size_t i = 0; i < kept.size(); ++i) clusters[labels[i]].push_back(&kept[i]);

  std::vector<Topic> topics;
  for (const auto& [label, members] : clusters) {
    // most frequent segments first in the title
    std::vector<const Segment*> ordered = members;
    std::sort(ordered.begin(), ordered.end(), [](const Segment* a, const Segment* b) {
      if (a->post_ids.size() != b->post_ids.size()) return a->post_ids.size() > b->post_ids.size();
      return a->words < b->words;
    });
    Topic t;
    std::set<std::string> seen;
    for (const Segment* s : ordered) {
      for (const auto& w : s->words)
        if (seen.insert(w).second) t.keywords.push_back(w);
      t.post_ids.insert(s->post_ids.begin(), s->post_ids.end());
    }
    t.score = static_cast<double>(t.post_ids.size());
    topics.push_back(std::move(t));
  }
  std::sort(topics.begin(), topics.end(), [](const Topic& a, const Topic& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.keywords < b.keywords;
  });
  return topics;
}

}  // namespace tdtk
