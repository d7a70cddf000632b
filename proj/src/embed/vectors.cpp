#include "tdtk/embed/vectors.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace tdtk {

EmbeddingTable EmbeddingTable::load(const std::string& path, const std::string& source_label) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("EmbeddingTable: cannot open " + path);

  std::string line;
  std::size_t lineno = 0;
  int dim = -1;
  EmbeddingTable table(0, source_label);
  bool first = true;
  std::size_t duplicates = 0;

  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ss(line);
    if (first) {
      first = false;
      // header "count dim": exactly two integer fields
      std::size_t count;
      int d;
      char extra;
      std::istringstream probe(line);
      if (probe >> count >> d && !(probe >> extra)) {
        dim = d;
        continue;
      }
    }
    std::string word;
    ss >> word;
    std::vector<double> values;
    double v;
    while (ss >> v) values.push_back(v);
    if (word.empty() || values.empty())
      throw std::runtime_error("EmbeddingTable: malformed line " + std::to_string(lineno));
    if (dim < 0) dim = static_cast<int>(values.size());
    if (static_cast<int>(values.size()) != dim)
      throw std::runtime_error("EmbeddingTable: dimension mismatch at line " +
                               std::to_string(lineno) + " (expected " + std::to_string(dim) + ")");
    Eigen::VectorXd vec(dim);
    for (int i = 0; i < dim; ++i) vec(i) = values[static_cast<std::size_t>(i)];
    if (table.find(word)) ++duplicates;  // last occurrence wins
    table.dim_ = dim;
    table.insert(word, std::move(vec));
  }
  if (table.size() == 0) throw std::runtime_error("EmbeddingTable: empty file " + path);
  if (duplicates)
    std::cerr << "EmbeddingTable: " << duplicates << " duplicate words in " << path
              << " (last wins)\n";
  return table;
}

void EmbeddingTable::insert(const std::string& word, Eigen::VectorXd vec) {
  if (dim_ == 0) dim_ = static_cast<int>(vec.size());
  if (vec.size() != dim_) throw std::invalid_argument("EmbeddingTable: wrong vector length");
  vectors_[word] = std::move(vec);
}

const Eigen::VectorXd* EmbeddingTable::find(const std::string& word) const {
  auto it = vectors_.find(word);
  return it == vectors_.end() ? nullptr : &it->second;
}

DocVector embed_document(const std::vector<std::string>& words, const EmbeddingTable& table,
                         OovPolicy policy) {
  if (words.empty()) throw std::invalid_argument("embed_document: empty word list");
  DocVector doc;
  doc.vec = Eigen::VectorXd::Zero(table.dimension());
  int found = 0;
  for (const auto& w : words) {
    if (const auto* v = table.find(w)) {
      doc.vec += *v;
      ++found;
    } else {
      ++doc.oov_count;
    }
  }
  if (policy == OovPolicy::Skip) {
    if (found == 0) throw std::runtime_error("embed_document: unembeddable document (all words OOV)");
    doc.vec /= found;
  } else {
    doc.vec /= static_cast<double>(words.size());
  }
  return doc;
}

double cosine_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  if (a.size() != b.size()) throw std::invalid_argument("cosine_distance: dimension mismatch");
  const double na = a.norm(), nb = b.norm();
  if (na == 0.0 || nb == 0.0) throw std::invalid_argument("cosine_distance: zero vector");
  return 1.0 - a.dot(b) / (na * nb);
}

double euclidean_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  if (a.size() != b.size()) throw std::invalid_argument("euclidean_distance: dimension mismatch");
  return (a - b).norm();
}

}  // namespace tdtk
