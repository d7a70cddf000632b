#include "tdtk/eval/metrics.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace tdtk {

void load_golden_assignments(const std::string& path, GoldenStandard& golden) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden assignments: " + path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
    const auto post_id = j.at("post_id").get<std::string>();
    const double score = j.value("score", 1.0);
    auto& classes = golden.assignments[post_id];
    for (const auto& c : j.at("classes")) classes[c.get<std::string>()] = score;
  }
}

void load_class_catalog(const std::string& path, GoldenStandard& golden) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open class catalog: " + path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
    auto& keywords = golden.classes[j.at("class").get<std::string>()];
    for (const auto& k : j.at("keywords")) keywords.insert(k.get<std::string>());
  }
}

Prf topic_prf(const std::vector<Topic>& topics, const GoldenStandard& golden, double theta_m) {
  if (golden.classes.empty()) throw std::invalid_argument("topic_prf: no golden classes");
  if (topics.empty()) return {};

  std::set<std::string> covered;
  std::size_t matched = 0;
  for (const auto& t : topics) {
    if (t.keywords.empty()) continue;
    bool hit = false;
    for (const auto& [name, keywords] : golden.classes) {
      std::size_t in = 0;
      for (const auto& w : t.keywords) in += keywords.count(w);
      if (static_cast<double>(in) >= theta_m * static_cast<double>(t.keywords.size())) {
        hit = true;
        covered.insert(name);
      }
    }
    if (hit) ++matched;
  }

  Prf out;
  out.precision = static_cast<double>(matched) / static_cast<double>(topics.size());
  out.recall = static_cast<double>(covered.size()) / static_cast<double>(golden.classes.size());
  if (out.precision + out.recall > 0.0)
    out.f = 2.0 * out.precision * out.recall / (out.precision + out.recall);
  return out;
}

double entropy_impurity(const std::vector<double>& scores) {
  double total = 0.0;
  for (double s : scores) total += s;
  if (total <= 0.0) return 0.0;
  double h = 0.0;
  for (double s : scores) {
    if (s <= 0.0) continue;
    const double p = s / total;
    h -= p * std::log(p);
  }
  return h;
}

double cluster_fs(const Eigen::MatrixXd& sr, const std::vector<double>& fs_per_cluster) {
  if (sr.cols() == 0 || static_cast<std::size_t>(sr.cols()) != fs_per_cluster.size())
    throw std::invalid_argument("cluster_fs: matrix/score size mismatch");
  const double total = sr.sum();
  if (total <= 0.0) throw std::invalid_argument("cluster_fs: empty assignment matrix");
  double acc = 0.0;
  for (Eigen::Index j = 0; j < sr.cols(); ++j)
    acc += fs_per_cluster[static_cast<std::size_t>(j)] * sr.col(j).sum();
  return acc / total;
}

double class_fs(const Eigen::MatrixXd& sc, const std::vector<double>& fs_per_class) {
  if (sc.rows() == 0 || static_cast<std::size_t>(sc.rows()) != fs_per_class.size())
    throw std::invalid_argument("class_fs: matrix/score size mismatch");
  const double total = sc.sum();
  if (total <= 0.0) throw std::invalid_argument("class_fs: empty assignment matrix");
  double acc = 0.0;
  for (Eigen::Index i = 0; i < sc.rows(); ++i)
    acc += fs_per_class[static_cast<std::size_t>(i)] * sc.row(i).sum();
  return acc / total;
}

double mean_fs(double class_score, double cluster_score) {
  return 0.5 * (class_score + cluster_score);
}

FsScores compute_fs(const std::vector<Topic>& topics, const GoldenStandard& golden,
                    const FsKernel& kernel) {
  if (topics.empty()) throw std::invalid_argument("compute_fs: no detected topics");
  if (golden.assignments.empty()) throw std::invalid_argument("compute_fs: empty golden labeling");

  std::vector<std::string> class_names;
  std::map<std::string, Eigen::Index> class_row;
  for (const auto& [post, classes] : golden.assignments)
    for (const auto& [c, _] : classes)
      if (class_row.emplace(c, static_cast<Eigen::Index>(class_names.size())).second)
        class_names.push_back(c);
  if (class_names.empty()) throw std::invalid_argument("compute_fs: golden labeling has no classes");

  FsScores out;
  Eigen::MatrixXd sr = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(class_names.size()),
                                             static_cast<Eigen::Index>(topics.size()));
  std::set<std::string> unlabeled;
  for (std::size_t j = 0; j < topics.size(); ++j)
    for (const auto& post : topics[j].post_ids) {
      auto it = golden.assignments.find(post);
      if (it == golden.assignments.end() || it->second.empty()) {
        unlabeled.insert(post);
        continue;
      }
      for (const auto& [c, score] : it->second)
        sr(class_row[c], static_cast<Eigen::Index>(j)) += score;
    }
  out.unlabeled_posts = unlabeled.size();
  if (sr.sum() <= 0.0) throw std::runtime_error("compute_fs: no labeled posts in any topic");

  for (Eigen::Index j = 0; j < sr.cols(); ++j) {
    std::vector<double> col(sr.col(j).data(), sr.col(j).data() + sr.rows());
    out.per_cluster.push_back(kernel(col));
  }
  std::vector<double> row_scores;
  for (Eigen::Index i = 0; i < sr.rows(); ++i) {
    std::vector<double> row;
    row.reserve(static_cast<std::size_t>(sr.cols()));
    for (Eigen::Index j = 0; j < sr.cols(); ++j) row.push_back(sr(i, j));
    const double s = kernel(row);
    row_scores.push_back(s);
    out.per_class[class_names[static_cast<std::size_t>(i)]] = s;
  }

  out.cluster_fs = cluster_fs(sr, out.per_cluster);
  out.class_fs = class_fs(sr, row_scores);
  out.mean_fs = mean_fs(out.class_fs, out.cluster_fs);
  return out;
}

}  // namespace tdtk
