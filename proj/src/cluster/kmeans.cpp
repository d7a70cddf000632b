#include "tdtk/cluster/cluster.hpp"

#include <limits>
#include <random>
#include <stdexcept>

namespace tdtk {

KmeansResult kmeans(const PointMatrix& points, int k, unsigned seed, int max_iter) {
  const auto n = points.rows();
  if (k < 1 || k > n) throw std::invalid_argument("kmeans: k must be in 1..N");

  std::mt19937_64 rng(seed);
  KmeansResult result;
  result.centers.resize(k, points.cols());

  // k-means++ seeding
  std::uniform_int_distribution<Eigen::Index> first(0, n - 1);
  result.centers.row(0) = points.row(first(rng));
  std::vector<double> d2(static_cast<std::size_t>(n), std::numeric_limits<double>::infinity());
  for (int c = 1; c < k; ++c) {
    double total = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double d = (points.row(i) - result.centers.row(c - 1)).squaredNorm();
      auto& best = d2[static_cast<std::size_t>(i)];
      if (d < best) best = d;
      total += best;
    }
    Eigen::Index chosen = 0;
    if (total > 0.0) {
      std::uniform_real_distribution<double> u(0.0, total);
      double target = u(rng), acc = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        acc += d2[static_cast<std::size_t>(i)];
        if (acc >= target) {
          chosen = i;
          break;
        }
      }
    } else {
      chosen = first(rng);
    }
    result.centers.row(c) = points.row(chosen);
  }

  result.labels.assign(static_cast<std::size_t>(n), 0);
  for (int iter = 0; iter < max_iter; ++iter) {
    bool changed = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      int best = 0;
      double best_d = (points.row(i) - result.centers.row(0)).squaredNorm();
      for (int c = 1; c < k; ++c) {
        const double d = (points.row(i) - result.centers.row(c)).squaredNorm();
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      if (result.labels[static_cast<std::size_t>(i)] != best) {
        result.labels[static_cast<std::size_t>(i)] = best;
        changed = true;
      }
    }
    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, points.cols());
    std::vector<int> counts(static_cast<std::size_t>(k), 0);
    for (Eigen::Index i = 0; i < n; ++i) {
      sums.row(result.labels[static_cast<std::size_t>(i)]) += points.row(i);
      ++counts[static_cast<std::size_t>(result.labels[static_cast<std::size_t>(i)])];
    }
    for (int c = 0; c < k; ++c)
      if (counts[static_cast<std::size_t>(c)] > 0)
        result.centers.row(c) = sums.row(c) / counts[static_cast<std::size_t>(c)];
    if (!changed && iter > 0) break;
  }

  result.inertia = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    result.inertia +=
        (points.row(i) - result.centers.row(result.labels[static_cast<std::size_t>(i)])).squaredNorm();
  return result;
}

}  // namespace tdtk
