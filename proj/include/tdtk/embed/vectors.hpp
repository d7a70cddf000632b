#pragma once

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace tdtk {

// Pretrained word vectors loaded from a `.vec`-style text file.
class EmbeddingTable {
 public:
  EmbeddingTable(int dimension, std::string source) : dim_(dimension), source_(std::move(source)) {}

  // Optional "count dim" header line, then `word v1 ... vd` per line.
  static EmbeddingTable load(const std::string& path, const std::string& source_label = "");

  int dimension() const { return dim_; }
  const std::string& source() const { return source_; }
  std::size_t size() const { return vectors_.size(); }
  void insert(const std::string& word, Eigen::VectorXd vec);
  const Eigen::VectorXd* find(const std::string& word) const;

 private:
  int dim_ = 0;
  std::string source_;
  std::map<std::string, Eigen::VectorXd> vectors_;
};

enum class OovPolicy { Skip, Zero };

struct DocVector {
  Eigen::VectorXd vec;
  int oov_count = 0;
};

// Mean pooling of the found word vectors (Skip) or of all words with zeros
// substituted for missing ones (Zero).
DocVector embed_document(const std::vector<std::string>& words, const EmbeddingTable& table,
                         OovPolicy policy = OovPolicy::Skip);

// 1 - cos(a, b), in [0, 2]. Zero vectors are an error.
double cosine_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

double euclidean_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

}  // namespace tdtk
