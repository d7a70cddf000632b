#include "tdtk/cluster/cluster.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace tdtk {
namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

std::vector<int> components_to_labels(UnionFind& uf, std::size_t n) {
  std::map<int, int> remap;
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int root = uf.find(static_cast<int>(i));
    auto it = remap.find(root);
    if (it == remap.end()) it = remap.emplace(root, static_cast<int>(remap.size())).first;
    labels[i] = it->second;
  }
  return labels;
}

std::vector<int> jp_from_neighbor_lists(const std::vector<std::vector<int>>& knn, int k_min) {
  const std::size_t n = knn.size();
  std::vector<std::vector<bool>> in_list(n, std::vector<bool>(n, false));
  for (std::size_t u = 0; u < n; ++u)
    for (int v : knn[u]) in_list[u][static_cast<std::size_t>(v)] = true;

  UnionFind uf(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (int v : knn[u]) {
      if (static_cast<std::size_t>(v) <= u) continue;
      if (!in_list[static_cast<std::size_t>(v)][u]) continue;  // must be mutual
      int shared = 0;
      for (int w : knn[u])
        if (in_list[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) ++shared;
      if (shared >= k_min) uf.unite(static_cast<int>(u), v);
    }
  }
  return components_to_labels(uf, n);
}

}  // namespace

std::vector<int> jarvis_patrick(const PointMatrix& points, int k, int k_min,
                                const DistanceFn& dist) {
  if (k_min > k) throw std::invalid_argument("jarvis_patrick: k_min must be <= k");
  const auto n = static_cast<std::size_t>(points.rows());
  std::vector<std::vector<int>> knn(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::pair<double, int>> cand;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      cand.emplace_back(dist(points.row(static_cast<Eigen::Index>(i)),
                             points.row(static_cast<Eigen::Index>(j))),
                        static_cast<int>(j));
    }
    std::sort(cand.begin(), cand.end());
    for (std::size_t r = 0; r < cand.size() && r < static_cast<std::size_t>(k); ++r)
      knn[i].push_back(cand[r].second);
  }
  return jp_from_neighbor_lists(knn, k_min);
}

std::vector<int> jarvis_patrick(const WeightedGraph& graph, int k, int k_min) {
  if (k_min > k) throw std::invalid_argument("jarvis_patrick: k_min must be <= k");
  const auto n = static_cast<std::size_t>(graph.n);
  std::vector<std::vector<std::pair<double, int>>> adj(n);
  for (const auto& [u, v, w] : graph.edges) {
    adj[static_cast<std::size_t>(u)].emplace_back(w, v);
    adj[static_cast<std::size_t>(v)].emplace_back(w, u);
  }
  std::vector<std::vector<int>> knn(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& cand = adj[i];
    // strongest edges first, ties by node index
    std::sort(cand.begin(), cand.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    for (std::size_t r = 0; r < cand.size() && r < static_cast<std::size_t>(k); ++r)
      knn[i].push_back(cand[r].second);
  }
  return jp_from_neighbor_lists(knn, k_min);
}

double modularity(const WeightedGraph& graph, const std::vector<int>& labels) {
  double two_m = 0.0;
  std::map<int, double> degree;  // weighted degree per node
  for (const auto& [u, v, w] : graph.edges) {
    two_m += 2.0 * w;
    degree[u] += w;
    degree[v] += w;
  }
  if (two_m == 0.0) return 0.0;
  double q = 0.0;
  for (const auto& [u, v, w] : graph.edges)
    if (labels[static_cast<std::size_t>(u)] == labels[static_cast<std::size_t>(v)]) q += 2.0 * w / two_m;
  std::map<int, double> community_degree;
  for (int i = 0; i < graph.n; ++i) community_degree[labels[static_cast<std::size_t>(i)]] += degree[i];
  for (const auto& [_, dsum] : community_degree) q -= (dsum / two_m) * (dsum / two_m);
  return q;
}

CommunityResult newman_communities(const WeightedGraph& graph) {
  if (graph.n == 0) throw std::invalid_argument("newman_communities: empty graph");
  const auto n = static_cast<std::size_t>(graph.n);

  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  CommunityResult best{labels, modularity(graph, labels)};

  // community -> community -> total edge weight between them
  std::map<int, std::map<int, double>> between;
  std::map<int, double> degree;
  double two_m = 0.0;
  for (const auto& [u, v, w] : graph.edges) {
    if (u == v) continue;
    between[std::min(u, v)][std::max(u, v)] += w;
    degree[u] += w;
    degree[v] += w;
    two_m += 2.0 * w;
  }
  if (two_m == 0.0) return best;

  std::map<int, double> comm_degree;
  for (int i = 0; i < graph.n; ++i) comm_degree[i] = degree.count(i) ? degree[i] : 0.0;
  double q = best.modularity;

  while (true) {
    // best connected pair by modularity gain
    double best_gain = -std::numeric_limits<double>::infinity();
    int ba = -1, bb = -1;
    for (const auto& [a, row] : between)
      for (const auto& [b, w] : row) {
        if (w <= 0.0) continue;
        const double gain = 2.0 * (w / two_m - comm_degree[a] * comm_degree[b] / (two_m * two_m));
        if (gain > best_gain) {
          best_gain = gain;
          ba = a;
          bb = b;
        }
      }
    if (ba < 0) break;

    // merge bb into ba
    for (auto& label : labels)
      if (label == bb) label = ba;
    q += best_gain;
    comm_degree[ba] += comm_degree[bb];
    comm_degree.erase(bb);

    std::map<int, double> bb_row;
    for (auto it = between.begin(); it != between.end();) {
      auto& [a, row] = *it;
      if (a == bb) {
        for (const auto& [b, w] : row) bb_row[b] += w;
        it = between.erase(it);
        continue;
      }
      auto jt = row.find(bb);
      if (jt != row.end()) {
        bb_row[a] += jt->second;
        row.erase(jt);
      }
      ++it;
    }
    between[ba].erase(bb);
    for (const auto& [other, w] : bb_row) {
      if (other == ba) continue;
      between[std::min(ba, other)][std::max(ba, other)] += w;
    }

    if (q > best.modularity + 1e-12) {
      best.labels = labels;
      best.modularity = q;
    }
  }

  // canonical label ids
  std::map<int, int> remap;
  for (auto& label : best.labels) {
    auto it = remap.find(label);
    if (it == remap.end()) it = remap.emplace(label, static_cast<int>(remap.size())).first;
    label = it->second;
  }
  return best;
}

std::optional<int> knn_classify(const Eigen::VectorXd& item,
                                const std::vector<LabeledVector>& labeled, int k, double tau) {
  if (k < 1) throw std::invalid_argument("knn_classify: k must be >= 1");
  if (labeled.empty()) return std::nullopt;

  std::vector<std::pair<double, std::size_t>> sims;
  sims.reserve(labeled.size());
  for (std::size_t i = 0; i < labeled.size(); ++i)
    sims.emplace_back(1.0 - cosine_dist(item, labeled[i].vec), i);
  std::sort(sims.begin(), sims.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  if (sims.front().first < tau) return std::nullopt;

  std::map<int, std::pair<int, double>> votes;  // label -> (count, total sim)
  for (std::size_t r = 0; r < sims.size() && r < static_cast<std::size_t>(k); ++r) {
    auto& v = votes[labeled[sims[r].second].label];
    ++v.first;
    v.second += sims[r].first;
  }
  int best_label = votes.begin()->first;
  auto best = votes.begin()->second;
  for (const auto& [label, v] : votes) {
    if (v.first > best.first || (v.first == best.first && v.second > best.second)) {
      best_label = label;
      best = v;
    }
  }
  return best_label;
}

double silhouette(const PointMatrix& points, const std::vector<int>& labels,
                  const DistanceFn& dist) {
  const auto n = static_cast<std::size_t>(points.rows());
  std::map<int, std::vector<std::size_t>> clusters;
  for (std::size_t i = 0; i < n; ++i)
    if (labels[i] >= 0) clusters[labels[i]].push_back(i);
  if (clusters.size() < 2) throw std::invalid_argument("silhouette undefined for < 2 clusters");

  double total = 0.0;
  std::size_t counted = 0;
  for (const auto& [label, members] : clusters) {
    for (std::size_t i : members) {
      ++counted;
      if (members.size() == 1) continue;  // singleton scores 0
      double a = 0.0;
      for (std::size_t j : members)
        if (j != i)
          a += dist(points.row(static_cast<Eigen::Index>(i)), points.row(static_cast<Eigen::Index>(j)));
      a /= static_cast<double>(members.size() - 1);

      double b = std::numeric_limits<double>::infinity();
      for (const auto& [other_label, others] : clusters) {
        if (other_label == label) continue;
        double mean = 0.0;
        for (std::size_t j : others)
          mean += dist(points.row(static_cast<Eigen::Index>(i)), points.row(static_cast<Eigen::Index>(j)));
        mean /= static_cast<double>(others.size());
        b = std::min(b, mean);
      }
      const double denom = std::max(a, b);
      if (denom > 0.0) total += (b - a) / denom;
    }
  }
  return counted ? total / static_cast<double>(counted) : 0.0;
}

}  // namespace tdtk
