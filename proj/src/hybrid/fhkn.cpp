#include "tdtk/hybrid/fhkn.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "tdtk/cluster/cluster.hpp"
#include "tdtk/fp/patterns.hpp"

namespace tdtk {
namespace {

// 0/1 vector over the window's posts marking those containing every word.
Eigen::VectorXd incidence(const std::vector<std::string>& words,
                          const std::vector<std::set<std::string>>& post_words) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(post_words.size()));
  for (std::size_t i = 0; i < post_words.size(); ++i) {
    bool all = true;
    for (const auto& w : words)
      if (!post_words[i].count(w)) {
        all = false;
        break;
      }
    if (all) v[static_cast<Eigen::Index>(i)] = 1.0;
  }
  return v;
}

double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::size_t inter = 0;
  for (const auto& x : a) inter += b.count(x);
  return static_cast<double>(inter) / static_cast<double>(a.size() + b.size() - inter);
}

std::vector<std::string> title_words(const std::vector<const Pattern*>& members,
                                     const WindowBatch& batch) {
  std::set<std::string> cluster_posts;
  std::set<std::string> vocab;
  for (const Pattern* p : members) {
    cluster_posts.insert(p->post_ids.begin(), p->post_ids.end());
    vocab.insert(p->items.begin(), p->items.end());
  }
  std::map<std::string, int> cluster_tf, df;
  for (const auto& post : batch.posts) {
    if (!post.tokens) continue;
    const bool in_cluster = cluster_posts.count(post.id) > 0;
    std::set<std::string> seen(post.tokens->begin(), post.tokens->end());
    for (const auto& w : seen) ++df[w];
    if (in_cluster)
      for (const auto& w : *post.tokens)
        if (vocab.count(w)) ++cluster_tf[w];
  }
  const double n_posts = static_cast<double>(batch.posts.size());

  std::vector<std::string> words(vocab.begin(), vocab.end());
  std::map<std::string, double> importance;
  for (const auto& w : words)
    importance[w] = cluster_tf[w] * std::log(n_posts / std::max(1, df[w]));
  std::sort(words.begin(), words.end(), [&](const std::string& a, const std::string& b) {
    if (importance[a] != importance[b]) return importance[a] > importance[b];
    return a < b;
  });
  return words;
}

}  // namespace

std::vector<Topic> fhkn_detect(const WindowBatch& batch, CoherentTopicMemory& memory,
                               const FhknConfig& cfg) {
  const auto n_posts = batch.posts.size();
  const int min_support =
      std::max(2, static_cast<int>(std::ceil(0.001 * static_cast<double>(n_posts))));
  auto patterns = fp_growth(to_transactions(batch), min_support);

  // utility of a pattern = sum of its words' window frequencies
  for (auto& p : patterns) {
    p.utility = 0.0;
    for (const auto& w : p.items) {
      auto it = batch.tf.find(w);
      if (it != batch.tf.end()) p.utility += it->second;
    }
  }
  std::sort(patterns.begin(), patterns.end(), [](const Pattern& a, const Pattern& b) {
    if (a.utility != b.utility) return a.utility > b.utility;
    return a.items < b.items;
  });
  if (patterns.size() > static_cast<std::size_t>(cfg.top_k))
    patterns.resize(static_cast<std::size_t>(cfg.top_k));
  if (patterns.empty()) {
    memory.entries.clear();
    return {};
  }

  std::vector<std::set<std::string>> post_words;
  post_words.reserve(n_posts);
  for (const auto& p : batch.posts)
    post_words.emplace_back(p.tokens ? std::set<std::string>(p.tokens->begin(), p.tokens->end())
                                     : std::set<std::string>());

  // memory patterns projected onto the current window
  std::vector<LabeledVector> exemplars;
  for (const auto& e : memory.entries) {
    Eigen::VectorXd v = incidence(e.words, post_words);
    if (v.norm() > 0.0) exemplars.push_back({std::move(v), e.topic});
  }

  // coherent vs emerging split
  std::map<int, std::vector<const Pattern*>> coherent;  // previous topic id -> members
  std::vector<const Pattern*> rest;
  for (const auto& p : patterns) {
    std::optional<int> label;
    if (!exemplars.empty())
      label = knn_classify(incidence(p.items, post_words), exemplars, cfg.knn_k, cfg.tau);
    if (label)
      coherent[*label].push_back(&p);
    else
      rest.push_back(&p);
  }

  std::vector<std::vector<const Pattern*>> groups;
  for (auto& [_, members] : coherent) groups.push_back(std::move(members));

  if (!rest.empty()) {
    WeightedGraph graph;
    graph.n = static_cast<int>(rest.size());
    for (std::size_t i = 0; i < rest.size(); ++i)
      for (std::size_t j = i + 1; j < rest.size(); ++j) {
        const double w = jaccard(rest[i]->post_ids, rest[j]->post_ids);
        if (w > 0.0) graph.edges.emplace_back(static_cast<int>(i), static_cast<int>(j), w);
      }
    std::vector<int> labels;
    if (graph.edges.empty()) {
      labels.resize(rest.size());
      for (std::size_t i = 0; i < rest.size(); ++i) labels[i] = static_cast<int>(i);
    } else {
      labels = newman_communities(graph).labels;
    }
    std::map<int, std::vector<const Pattern*>> emerging;
    for (std::size_t i = 0; i < rest.size(); ++i) emerging[labels[i]].push_back(rest[i]);
    for (auto& [_, members] : emerging) groups.push_back(std::move(members));
  }

  struct Built {
    Topic topic;
    std::vector<const Pattern*> members;
  };
  std::vector<Built> built;
  for (auto& members : groups) {
    Built b;
    b.topic.keywords = title_words(members, batch);
    for (const Pattern* p : members) {
      b.topic.post_ids.insert(p->post_ids.begin(), p->post_ids.end());
      b.topic.score += p->utility;
    }
    b.members = std::move(members);
    built.push_back(std::move(b));
  }
  std::sort(built.begin(), built.end(), [](const Built& a, const Built& b) {
    if (a.topic.score != b.topic.score) return a.topic.score > b.topic.score;
    return a.topic.keywords < b.topic.keywords;
  });

  memory.entries.clear();
  std::vector<Topic> topics;
  for (std::size_t i = 0; i < built.size(); ++i) {
    for (const Pattern* p : built[i].members)
      memory.entries.push_back({p->items, static_cast<int>(i)});
    topics.push_back(std::move(built[i].topic));
  }
  return topics;
}

}  // namespace tdtk
