#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tdtk/bk/count_store.hpp"

namespace tdtk {

constexpr int kMaxNgramOrder = 5;

// Contiguous n-gram counts per document line, n = 1..n_max.
struct NgramCounts {
  int n_max = 0;
  std::vector<std::map<std::string, std::uint64_t>> per_n;  // [n-1]
  std::vector<std::uint64_t> totals;                        // [n-1]
  std::uint64_t distinct_tokens = 0;
};

NgramCounts count_ngrams_lines(const std::vector<std::string>& docs, int n_max);
NgramCounts count_ngrams_files(const std::vector<std::string>& paths, int n_max);

// MLE n-gram probabilities with an additive-epsilon floor for unseen
// phrases: eps(n) = distinct_tokens^(-n).
class NgramModel {
 public:
  NgramModel(std::vector<std::shared_ptr<CountTable>> tables, std::vector<std::uint64_t> totals,
             std::uint64_t distinct_tokens);
  static NgramModel from_counts(const NgramCounts& counts);

  int n_max() const { return static_cast<int>(tables_.size()); }
  std::uint64_t total(int n) const { return totals_.at(static_cast<std::size_t>(n - 1)); }
  std::uint64_t distinct_tokens() const { return distinct_tokens_; }

  // phrase length must be in 1..n_max; result in (0, 1].
  double probability(const std::vector<std::string>& phrase) const;

 private:
  std::vector<std::shared_ptr<CountTable>> tables_;
  std::vector<std::uint64_t> totals_;
  std::uint64_t distinct_tokens_ = 0;
};

// Q(s): relative frequency of a phrase among all anchor occurrences;
// 0 for absent phrases. An empty model answers 0 everywhere.
class AnchorModel {
 public:
  AnchorModel() = default;
  AnchorModel(std::shared_ptr<CountTable> table, std::uint64_t total);

  double probability(const std::string& phrase) const;
  double probability(const std::vector<std::string>& words) const;
  std::uint64_t total() const { return total_; }

 private:
  std::shared_ptr<CountTable> table_;
  std::uint64_t total_ = 0;
};

// Add-one smoothed unigram probabilities over the reference corpus.
class RefCorpusModel {
 public:
  RefCorpusModel(std::shared_ptr<CountTable> table, std::uint64_t total, std::uint64_t vocab);

  double probability(const std::string& word) const;
  std::uint64_t total() const { return total_; }
  std::uint64_t vocab() const { return vocab_; }

 private:
  std::shared_ptr<CountTable> table_;
  std::uint64_t total_ = 0;
  std::uint64_t vocab_ = 0;
};

struct BackgroundModel {
  std::shared_ptr<NgramModel> ngrams;
  std::shared_ptr<AnchorModel> anchors;
  std::shared_ptr<RefCorpusModel> ref;
};

// phrase<TAB>count, one per line.
std::map<std::string, std::uint64_t> read_anchor_tsv(const std::string& path);

struct BkBuildReport {
  std::vector<std::uint64_t> ngram_totals;
  std::vector<std::uint64_t> ngram_distinct;
  std::uint64_t distinct_tokens = 0;
  std::uint64_t anchor_total = 0;
  std::uint64_t anchor_distinct = 0;
  bool has_anchors = false;
};

// Persists the stores (ngram.N.tsv/.idx, anchors.tsv/.idx, meta.json) under
// `dir`. The reference-corpus model reuses the 1-gram store.
BkBuildReport save_background(const std::string& dir, const NgramCounts& counts,
                              const std::map<std::string, std::uint64_t>* anchor_counts);

BackgroundModel load_background(const std::string& dir);

}  // namespace tdtk
