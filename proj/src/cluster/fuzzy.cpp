#include "tdtk/cluster/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace tdtk {
namespace {

// Distinct-row center init; reseeds (deterministically) while centers coincide.
Eigen::MatrixXd init_centers(const PointMatrix& points, int c, unsigned seed) {
  const auto n = points.rows();
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Eigen::Index> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    Eigen::MatrixXd centers(c, points.cols());
    for (int i = 0; i < c; ++i) centers.row(i) = points.row(idx[static_cast<std::size_t>(i)]);
    bool ok = true;
    for (int i = 0; i < c && ok; ++i)
      for (int j = i + 1; j < c && ok; ++j)
        if ((centers.row(i) - centers.row(j)).norm() == 0.0) ok = false;
    if (ok) return centers;
  }
  throw std::runtime_error("fuzzy clustering: cannot find distinct initial centers");
}

// mu_ik = 1 / sum_j (d_ik/d_jk)^(2/(m-1)); a zero distance pins the point.
void update_memberships(const Eigen::MatrixXd& d2, double m, Eigen::MatrixXd& mu) {
  const auto n = d2.rows();
  const auto c = d2.cols();
  const double expo = 1.0 / (m - 1.0);
  for (Eigen::Index k = 0; k < n; ++k) {
    int zero_at = -1;
    for (Eigen::Index i = 0; i < c; ++i)
      if (d2(k, i) <= 0.0) {
        zero_at = static_cast<int>(i);
        break;
      }
    if (zero_at >= 0) {
      mu.row(k).setZero();
      mu(k, zero_at) = 1.0;
      continue;
    }
    double sum = 0.0;
    for (Eigen::Index i = 0; i < c; ++i) {
      mu(k, i) = std::pow(1.0 / d2(k, i), expo);
      sum += mu(k, i);
    }
    mu.row(k) /= sum;
  }
}

void update_centers(const PointMatrix& points, const Eigen::MatrixXd& mu, double m,
                    Eigen::MatrixXd& centers) {
  const auto c = centers.rows();
  for (Eigen::Index i = 0; i < c; ++i) {
    Eigen::VectorXd num = Eigen::VectorXd::Zero(points.cols());
    double den = 0.0;
    for (Eigen::Index k = 0; k < points.rows(); ++k) {
      const double w = std::pow(mu(k, i), m);
      num += w * points.row(k).transpose();
      den += w;
    }
    if (den > 0.0) centers.row(i) = (num / den).transpose();
  }
}

double track_row_sums(const Eigen::MatrixXd& mu) {
  double worst = 0.0;
  for (Eigen::Index k = 0; k < mu.rows(); ++k) worst = std::max(worst, std::abs(mu.row(k).sum() - 1.0));
  return worst;
}

}  // namespace

FcmResult fuzzy_cmeans(const PointMatrix& points, int c, double m, double eps, unsigned seed,
                       int max_iter) {
  const auto n = points.rows();
  if (c < 2) throw std::invalid_argument("fuzzy_cmeans: c must be >= 2");
  if (n < c) throw std::invalid_argument("fuzzy_cmeans: fewer points than clusters");

  FcmResult result;
  result.centers = init_centers(points, c, seed);
  result.membership = Eigen::MatrixXd::Zero(n, c);

  Eigen::MatrixXd d2(n, c);
  auto compute_d2 = [&]() {
    for (Eigen::Index k = 0; k < n; ++k)
      for (Eigen::Index i = 0; i < c; ++i)
        d2(k, i) = (points.row(k) - result.centers.row(i)).squaredNorm();
  };

  compute_d2();
  update_memberships(d2, m, result.membership);
  result.max_row_sum_error = track_row_sums(result.membership);

  for (int iter = 0; iter < max_iter; ++iter) {
    update_centers(points, result.membership, m, result.centers);
    compute_d2();
    Eigen::MatrixXd prev = result.membership;
    update_memberships(d2, m, result.membership);
    result.max_row_sum_error = std::max(result.max_row_sum_error, track_row_sums(result.membership));

    double objective = 0.0;
    for (Eigen::Index k = 0; k < n; ++k)
      for (Eigen::Index i = 0; i < c; ++i)
        objective += std::pow(result.membership(k, i), m) * d2(k, i);
    result.objective_history.push_back(objective);

    result.iterations = iter + 1;
    if ((result.membership - prev).cwiseAbs().maxCoeff() < eps) break;
  }
  return result;
}

namespace {

// One GK descent from the given starting memberships.
GkResult gustafson_kessel_from(const PointMatrix& points, int c, double m, double eps, double rho,
                               int max_iter, Eigen::MatrixXd membership, Eigen::MatrixXd centers,
                               double start_row_error) {
  const auto n = points.rows();
  const auto d = points.cols();

  GkResult result;
  result.volumes.assign(static_cast<std::size_t>(c), rho);
  result.centers = std::move(centers);
  result.membership = std::move(membership);
  result.max_row_sum_error = start_row_error;
  Eigen::MatrixXd d2(n, c);

  result.covariances.assign(static_cast<std::size_t>(c), Eigen::MatrixXd::Identity(d, d));
  result.norms.assign(static_cast<std::size_t>(c), Eigen::MatrixXd::Identity(d, d));

  for (int iter = 0; iter < max_iter; ++iter) {
    update_centers(points, result.membership, m, result.centers);

    for (int i = 0; i < c; ++i) {
      Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(d, d);
      double den = 0.0;
      for (Eigen::Index k = 0; k < n; ++k) {
        const double w = std::pow(result.membership(k, i), m);
        const Eigen::VectorXd diff = (points.row(k) - result.centers.row(i)).transpose();
        cov += w * diff * diff.transpose();
        den += w;
      }
      if (den > 0.0) cov /= den;
      const double lambda = 1e-6 * cov.trace() / static_cast<double>(d);
      cov += lambda * Eigen::MatrixXd::Identity(d, d);

      // eigenvalue floor keeps rank-deficient clusters invertible without
      // distorting the informative directions
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
      Eigen::VectorXd evals = es.eigenvalues();
      const double max_ev = evals.maxCoeff();
      if (!(max_ev > 0.0))
        throw std::runtime_error("gustafson_kessel: singular covariance for cluster " +
                                 std::to_string(i));
      const double floor = 1e-10 * max_ev;
      for (Eigen::Index e = 0; e < evals.size(); ++e) evals[e] = std::max(evals[e], floor);
      const double log_det = evals.array().log().sum();
      const Eigen::MatrixXd inv =
          es.eigenvectors() * evals.cwiseInverse().asDiagonal() * es.eigenvectors().transpose();
      result.covariances[static_cast<std::size_t>(i)] = cov;
      result.norms[static_cast<std::size_t>(i)] =
          std::exp((std::log(rho) + log_det) / static_cast<double>(d)) * inv;
    }

    for (Eigen::Index k = 0; k < n; ++k) {
      for (int i = 0; i < c; ++i) {
        const Eigen::VectorXd diff = (points.row(k) - result.centers.row(i)).transpose();
        d2(k, i) = diff.dot(result.norms[static_cast<std::size_t>(i)] * diff);
      }
    }

    Eigen::MatrixXd prev = result.membership;
    update_memberships(d2, m, result.membership);
    result.max_row_sum_error = std::max(result.max_row_sum_error, track_row_sums(result.membership));

    double objective = 0.0;
    for (Eigen::Index k = 0; k < n; ++k)
      for (int i = 0; i < c; ++i)
        objective += std::pow(result.membership(k, i), m) * d2(k, i);
    result.objective_history.push_back(objective);

    result.iterations = iter + 1;
    if ((result.membership - prev).cwiseAbs().maxCoeff() < eps) break;
  }
  return result;
}

}  // namespace

GkResult gustafson_kessel(const PointMatrix& points, int c, double m, double eps, double rho,
                          unsigned seed, int max_iter) {
  const auto n = points.rows();
  const auto d = points.cols();
  if (c < 2) throw std::invalid_argument("gustafson_kessel: c must be >= 2");
  if (n <= d) throw std::invalid_argument("gustafson_kessel: need more points than dimensions");

  // Multi-start: a plain FCM warm start plus FCM runs on globally whitened
  // data. Whitening lets strongly elongated structure separate under the
  // euclidean seeding; the candidate with the lowest final objective wins,
  // with the plain FCM candidate preferred on (near-)ties so spherical data
  // keeps the plain FCM partition.
  GkResult best;
  bool have_best = false;
  auto consider = [&](GkResult candidate) {
    const double obj =
        candidate.objective_history.empty() ? 0.0 : candidate.objective_history.back();
    const double best_obj = best.objective_history.empty() ? 0.0 : best.objective_history.back();
    if (!have_best || obj < best_obj * (1.0 - 1e-9)) {
      best = std::move(candidate);
      have_best = true;
    }
  };

  {
    FcmResult warm = fuzzy_cmeans(points, c, m, eps, seed, max_iter);
    consider(gustafson_kessel_from(points, c, m, eps, rho, max_iter, std::move(warm.membership),
                                   std::move(warm.centers), warm.max_row_sum_error));
  }

  const Eigen::RowVectorXd mean = points.colwise().mean();
  const Eigen::MatrixXd centered = points.rowwise() - mean;
  Eigen::MatrixXd cov = centered.transpose() * centered / static_cast<double>(n);
  cov += (1e-6 * cov.trace() / static_cast<double>(d)) * Eigen::MatrixXd::Identity(d, d);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
  if (es.eigenvalues().minCoeff() > 0.0) {
    const PointMatrix whitened = centered * es.operatorInverseSqrt();
    for (unsigned offset = 0; offset <= 3; ++offset) {
      FcmResult warm = fuzzy_cmeans(whitened, c, m, eps, seed + offset, max_iter);
      Eigen::MatrixXd centers = Eigen::MatrixXd::Zero(c, d);
      update_centers(points, warm.membership, m, centers);
      consider(gustafson_kessel_from(points, c, m, eps, rho, max_iter, std::move(warm.membership),
                                     std::move(centers), warm.max_row_sum_error));
    }
  }
  return best;
}

std::vector<int> harden_memberships(const Eigen::MatrixXd& membership) {
  std::vector<int> labels(static_cast<std::size_t>(membership.rows()));
  for (Eigen::Index k = 0; k < membership.rows(); ++k) {
    int best = 0;
    for (Eigen::Index i = 1; i < membership.cols(); ++i)
      if (membership(k, i) > membership(k, best)) best = static_cast<int>(i);
    labels[static_cast<std::size_t>(k)] = best;
  }
  return labels;
}

}  // namespace tdtk
