#include "tdtk/cluster/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tdtk {

double euclidean(const Eigen::VectorXd& a, const Eigen::VectorXd& b) { return (a - b).norm(); }

double cosine_dist(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const double na = a.norm(), nb = b.norm();
  if (na == 0.0 || nb == 0.0) return 1.0;
  return 1.0 - a.dot(b) / (na * nb);
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// A separator in the reachability plot is a position whose reachability
// clearly exceeds the typical (median) in-cluster reachability; xi tightens
// or relaxes the cut. Clusters are the maximal valleys between separator
// runs; the last position of a run is the jump into the next valley and
// belongs to it.
constexpr double kSeparation = 10.0;

std::vector<std::pair<std::size_t, std::size_t>> cut_valleys(const std::vector<double>& reach,
                                                             double xi) {
  const std::size_t n = reach.size();
  std::vector<double> finite;
  for (double r : reach)
    if (!std::isinf(r)) finite.push_back(r);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (finite.empty()) return out;  // nothing reachable at all
  std::sort(finite.begin(), finite.end());
  double median = finite[finite.size() / 2];
  if (median <= 0.0) {
    // zero-inflated plot (duplicate points): take the scale from the
    // positive reachabilities instead, else every tiny bump separates
    const auto pos = std::upper_bound(finite.begin(), finite.end(), 0.0);
    if (pos != finite.end()) median = *(pos + (finite.end() - pos) / 2);
  }
  const double theta = kSeparation * median / (1.0 - xi);

  std::size_t seg_start = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(reach[i] > theta)) continue;
    if (i > seg_start) out.emplace_back(seg_start, i - 1);
    std::size_t j = i;
    while (j + 1 < n && reach[j + 1] > theta) ++j;  // i..j-1 stay noise
    seg_start = j;
    i = j;
  }
  if (seg_start < n) out.emplace_back(seg_start, n - 1);
  return out;
}

}  // namespace

OpticsResult optics(const PointMatrix& points, int min_pts, const DistanceFn& dist, double xi) {
  if (min_pts < 2) throw std::invalid_argument("optics: min_pts must be >= 2");
  const auto n = static_cast<std::size_t>(points.rows());
  OpticsResult result;
  result.labels.assign(n, -1);
  if (n == 0) return result;

  Eigen::MatrixXd d(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = dist(points.row(static_cast<Eigen::Index>(i)),
                            points.row(static_cast<Eigen::Index>(j)));
      d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
      d(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = v;
    }
  }

  // core distance: distance to the min_pts-th nearest point, self included
  std::vector<double> core(n, kInf);
  if (n >= static_cast<std::size_t>(min_pts)) {
    std::vector<double> row(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) row[j] = d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      std::nth_element(row.begin(), row.begin() + (min_pts - 1), row.end());
      core[i] = row[static_cast<std::size_t>(min_pts - 1)];
    }
  }

  std::vector<bool> processed(n, false);
  std::vector<double> reach(n, kInf);
  for (std::size_t start = 0; start < n; ++start) {
    if (processed[start]) continue;
    std::size_t current = start;
    double current_reach = kInf;
    while (true) {
      processed[current] = true;
      result.ordering.push_back(static_cast<int>(current));
      result.reachability.push_back(current_reach);
      if (!std::isinf(core[current])) {
        for (std::size_t j = 0; j < n; ++j) {
          if (processed[j]) continue;
          const double nd = std::max(core[current], d(static_cast<Eigen::Index>(current),
                                                      static_cast<Eigen::Index>(j)));
          if (nd < reach[j]) reach[j] = nd;
        }
      }
      // next unprocessed point with the smallest reachability (ties by index)
      std::size_t next = n;
      double best = kInf;
      for (std::size_t j = 0; j < n; ++j) {
        if (processed[j]) continue;
        if (reach[j] < best) {
          best = reach[j];
          next = j;
        }
      }
      if (next == n) break;  // remaining points are unreachable; restart outer scan
      if (std::isinf(best)) break;
      current = next;
      current_reach = best;
    }
  }
  // any points never reached from a core point (all-noise case)
  for (std::size_t j = 0; j < n; ++j) {
    if (!processed[j]) {
      processed[j] = true;
      result.ordering.push_back(static_cast<int>(j));
      result.reachability.push_back(kInf);
    }
  }

  const auto ranges = cut_valleys(result.reachability, xi);
  int next_label = 0;
  for (const auto& [s, e] : ranges) {
    if (e - s + 1 < static_cast<std::size_t>(min_pts)) continue;  // too sparse, noise
    // an all-unreachable range is noise, not a cluster
    bool any_core = false;
    for (std::size_t i = s; i <= e && !any_core; ++i)
      any_core = !std::isinf(core[static_cast<std::size_t>(result.ordering[i])]);
    if (!any_core) continue;
    for (std::size_t i = s; i <= e; ++i)
      result.labels[static_cast<std::size_t>(result.ordering[i])] = next_label;
    ++next_label;
  }
  result.clusters = next_label;
  return result;
}

}  // namespace tdtk
