#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tdtk/topic.hpp"

namespace tdtk {

// Expert labeling: multi-label post assignments plus a catalog of class
// keyword sets.
struct GoldenStandard {
  std::map<std::string, std::map<std::string, double>> assignments;  // post -> class -> score
  std::map<std::string, std::set<std::string>> classes;              // class -> keywords
};

// JSONL {post_id, classes:[string], score?:number}; omitted score = 1.
void load_golden_assignments(const std::string& path, GoldenStandard& golden);
// JSONL {class, keywords:[string]}.
void load_class_catalog(const std::string& path, GoldenStandard& golden);

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f = 0.0;
};

// A detected topic matches a class when at least theta_m of its title words
// appear in the class keywords. Precision counts matched topics, recall
// counts covered classes.
Prf topic_prf(const std::vector<Topic>& topics, const GoldenStandard& golden,
              double theta_m = 0.5);

// Per-cluster (or per-class) quality kernel applied to one row/column of
// assignment scores. Default: entropy impurity of the normalized scores,
// lower = purer.
using FsKernel = std::function<double(const std::vector<double>&)>;
double entropy_impurity(const std::vector<double>& scores);

struct FsScores {
  std::vector<double> per_cluster;
  std::map<std::string, double> per_class;
  double cluster_fs = 0.0;
  double class_fs = 0.0;
  double mean_fs = 0.0;
  std::size_t unlabeled_posts = 0;  // topic posts absent from the golden labeling
};

// Score-weighted means over the assignment matrix (rows = classes,
// columns = clusters): sum_j FS(w_j) colsum_j / total and its row mirror.
double cluster_fs(const Eigen::MatrixXd& sr, const std::vector<double>& fs_per_cluster);
double class_fs(const Eigen::MatrixXd& sc, const std::vector<double>& fs_per_class);
double mean_fs(double class_score, double cluster_score);

// Builds the class-by-cluster score matrix from detected topics and the
// golden labeling, applies the kernel per cluster and per class, and
// aggregates. Errors on empty topics or an empty golden catalog.
FsScores compute_fs(const std::vector<Topic>& topics, const GoldenStandard& golden,
                    const FsKernel& kernel = entropy_impurity);

}  // namespace tdtk
