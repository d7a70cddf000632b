#include "tdtk/cl/pipelines.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>
#include <set>
#include <stdexcept>

namespace tdtk {

std::vector<std::string> title_for_posts(const std::vector<const Post*>& members,
                                         const WindowBatch& batch, int title_words,
                                         const CompoundLexicon* lexicon) {
  std::map<std::string, int> cluster_tf;
  for (const Post* p : members) {
    if (!p->tokens) continue;
    for (const auto& w : *p->tokens) ++cluster_tf[w];
  }
  std::map<std::string, int> df;
  for (const auto& p : batch.posts) {
    if (!p.tokens) continue;
    std::set<std::string> seen(p.tokens->begin(), p.tokens->end());
    for (const auto& w : seen) ++df[w];
  }
  const double n_posts = static_cast<double>(batch.posts.size());

  std::vector<std::pair<std::string, double>> scored;
  for (const auto& [w, tf] : cluster_tf)
    scored.emplace_back(w, tf * std::log(n_posts / df[w]));
  std::sort(scored.begin(), scored.end(), [&](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    if (cluster_tf[a.first] != cluster_tf[b.first]) return cluster_tf[a.first] > cluster_tf[b.first];
    return a.first < b.first;
  });

  std::vector<std::string> title;
  for (const auto& [w, _] : scored) {
    if (static_cast<int>(title.size()) >= title_words) break;
    title.push_back(w);
  }
  if (lexicon && !lexicon->empty()) title = join_compounds(title, *lexicon);
  return title;
}

std::vector<Topic> cl_detect(const WindowBatch& batch, const EmbeddingTable& table,
                             const ClPipelineConfig& cfg, const CompoundLexicon* lexicon) {
  if (batch.posts.empty()) throw std::invalid_argument("cl_detect: empty batch");

  std::vector<const Post*> embeddable;
  std::vector<Eigen::VectorXd> vecs;
  std::size_t skipped = 0;
  for (const auto& p : batch.posts) {
    if (!p.tokens || p.tokens->empty()) {
      ++skipped;
      continue;
    }
    try {
      vecs.push_back(embed_document(*p.tokens, table, cfg.oov).vec);
      embeddable.push_back(&p);
    } catch (const std::exception&) {
      ++skipped;
    }
  }
  if (embeddable.empty()) throw std::runtime_error("cl_detect: no embeddable posts in batch");
  if (skipped)
    std::cerr << "cl_detect: skipped " << skipped << " unembeddable posts\n";

  const auto n = static_cast<Eigen::Index>(vecs.size());
  PointMatrix points(n, table.dimension());
  for (Eigen::Index i = 0; i < n; ++i) points.row(i) = vecs[static_cast<std::size_t>(i)];

  const DistanceFn dist = cfg.distance == DistanceKind::Cosine ? DistanceFn(cosine_dist)
                                                               : DistanceFn(euclidean);

  std::vector<int> labels;
  if (cfg.cluster == ClusterKind::Optics) {
    labels = optics(points, cfg.min_pts, dist, cfg.xi).labels;
  } else {
    auto run_fuzzy = [&](int c) {
      return cfg.cluster == ClusterKind::CMeans
                 ? harden_memberships(fuzzy_cmeans(points, c, cfg.m, cfg.eps, cfg.seed).membership)
                 : harden_memberships(
                       gustafson_kessel(points, c, cfg.m, cfg.eps, 1.0, cfg.seed).membership);
    };
    if (cfg.c) {
      labels = run_fuzzy(*cfg.c);
    } else {
      // pick c by best silhouette over 2..c_sweep_max
      const int c_max = std::min<int>(cfg.c_sweep_max, static_cast<int>(n) - 1);
      double best_sil = -2.0;
      for (int c = 2; c <= c_max; ++c) {
        std::vector<int> cand;
        try {
          cand = run_fuzzy(c);
        } catch (const std::exception&) {
          continue;
        }
        std::set<int> distinct(cand.begin(), cand.end());
        if (distinct.size() < 2) continue;
        const double sil = silhouette(points, cand, dist);
        if (sil > best_sil) {
          best_sil = sil;
          labels = cand;
        }
      }
      if (labels.empty() && c_max >= 2) labels = run_fuzzy(2);
      if (labels.empty()) return {};
    }
  }

  std::map<int, std::vector<const Post*>> clusters;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] >= 0) clusters[labels[i]].push_back(embeddable[i]);

  std::vector<Topic> topics;
  for (const auto& [label, members] : clusters) {
    Topic t;
    t.keywords = title_for_posts(members, batch, cfg.title_words, lexicon);
    if (t.keywords.empty()) continue;
    for (const Post* p : members) t.post_ids.insert(p->id);
    t.score = static_cast<double>(members.size());
    topics.push_back(std::move(t));
  }
  std::sort(topics.begin(), topics.end(), [](const Topic& a, const Topic& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.keywords < b.keywords;
  });
  return topics;
}

}  // namespace tdtk
