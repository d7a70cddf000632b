#pragma once

#include <functional>
#include <optional>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

namespace tdtk {

// Points are matrix rows.
using PointMatrix = Eigen::MatrixXd;
using DistanceFn = std::function<double(const Eigen::VectorXd&, const Eigen::VectorXd&)>;

double euclidean(const Eigen::VectorXd& a, const Eigen::VectorXd& b);
double cosine_dist(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

// --- OPTICS --------------------------------------------------------------

struct OpticsResult {
  std::vector<int> ordering;           // point indices in reachability order
  std::vector<double> reachability;    // aligned with ordering; inf = unreachable
  std::vector<int> labels;             // per point; -1 = noise
  int clusters = 0;
};

// Standard OPTICS ordering (eps = infinity). Clusters are the maximal
// valleys of the reachability plot below an automatic cut (a fixed multiple
// of the median reachability, relaxed by xi); each separator run's last
// position is the jump into the next valley and belongs to it. Valleys
// thinner than min_pts are noise.
OpticsResult optics(const PointMatrix& points, int min_pts, const DistanceFn& dist,
                    double xi = 0.05);

// --- Fuzzy C-means and Gustafson-Kessel ----------------------------------

struct FcmResult {
  Eigen::MatrixXd membership;  // N x c, rows sum to 1
  Eigen::MatrixXd centers;     // c x d
  int iterations = 0;
  std::vector<double> objective_history;
  double max_row_sum_error = 0.0;  // worst |row sum - 1| over all iterations
};

FcmResult fuzzy_cmeans(const PointMatrix& points, int c, double m = 1.1, double eps = 1e-3,
                       unsigned seed = 42, int max_iter = 300);

struct GkResult {
  Eigen::MatrixXd membership;
  Eigen::MatrixXd centers;
  std::vector<Eigen::MatrixXd> covariances;
  std::vector<Eigen::MatrixXd> norms;  // A_i
  std::vector<double> volumes;         // rho_i
  int iterations = 0;
  std::vector<double> objective_history;
  double max_row_sum_error = 0.0;
};

// FCM loop under the cluster-shaped metric d2 = (x-v)' A (x-v) with
// A_i = (rho_i det C_i)^(1/d) C_i^{-1}; covariances are ridge-regularized
// before inversion.
GkResult gustafson_kessel(const PointMatrix& points, int c, double m = 1.1, double eps = 1e-3,
                          double rho = 1.0, unsigned seed = 42, int max_iter = 300);

// argmax per membership row; ties take the lowest cluster index.
std::vector<int> harden_memberships(const Eigen::MatrixXd& membership);

// --- K-means -------------------------------------------------------------

struct KmeansResult {
  std::vector<int> labels;
  Eigen::MatrixXd centers;
  double inertia = 0.0;
};

KmeansResult kmeans(const PointMatrix& points, int k, unsigned seed = 42, int max_iter = 300);

// --- KNN classification --------------------------------------------------

struct LabeledVector {
  Eigen::VectorXd vec;
  int label = 0;
};

// Majority label among the k most cosine-similar exemplars; nullopt when the
// best similarity is below tau or the labeled set is empty. Ties take the
// label with the highest total similarity.
std::optional<int> knn_classify(const Eigen::VectorXd& item,
                                const std::vector<LabeledVector>& labeled, int k,
                                double tau = 0.5);

// --- Jarvis-Patrick ------------------------------------------------------

// Nodes u, v share a cluster iff each is in the other's k-nearest list and
// the lists share at least k_min entries; clusters are the connected
// components of that relation.
std::vector<int> jarvis_patrick(const PointMatrix& points, int k, int k_min,
                                const DistanceFn& dist);

struct WeightedGraph {
  int n = 0;
  std::vector<std::tuple<int, int, double>> edges;  // (u, v, weight), u < v
};

// Graph form: neighbor lists are ranked by descending edge weight.
std::vector<int> jarvis_patrick(const WeightedGraph& graph, int k, int k_min);

// --- Newman modularity ---------------------------------------------------

struct CommunityResult {
  std::vector<int> labels;
  double modularity = 0.0;
};

double modularity(const WeightedGraph& graph, const std::vector<int>& labels);

// Greedy agglomerative modularity maximization (CNM); returns the partition
// along the merge sequence with the highest Q.
CommunityResult newman_communities(const WeightedGraph& graph);

// --- Silhouette ----------------------------------------------------------

// Mean silhouette over points with label >= 0; singleton clusters score 0.
// Fewer than two clusters is an error.
double silhouette(const PointMatrix& points, const std::vector<int>& labels,
                  const DistanceFn& dist);

}  // namespace tdtk
