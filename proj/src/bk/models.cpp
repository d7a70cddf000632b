#include "tdtk/bk/models.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tdtk {
namespace {

std::string join_words(const std::vector<std::string>& words) {
  std::string key;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) key += ' ';
    key += words[i];
  }
  return key;
}

void count_doc(const std::string& line, int n_max, NgramCounts& out) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  std::string w;
  while (ss >> w) toks.push_back(w);
  for (int n = 1; n <= n_max; ++n) {
    auto& table = out.per_n[static_cast<std::size_t>(n - 1)];
    auto& total = out.totals[static_cast<std::size_t>(n - 1)];
    if (toks.size() < static_cast<std::size_t>(n)) continue;
    for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= toks.size(); ++i) {
      std::string key = toks[i];
      for (int k = 1; k < n; ++k) key += ' ' + toks[i + static_cast<std::size_t>(k)];
      ++table[key];
      ++total;
    }
  }
}

}  // namespace

NgramCounts count_ngrams_lines(const std::vector<std::string>& docs, int n_max) {
  if (n_max < 1 || n_max > kMaxNgramOrder) throw std::invalid_argument("n_max must be in 1..5");
  NgramCounts out;
  out.n_max = n_max;
  out.per_n.resize(static_cast<std::size_t>(n_max));
  out.totals.assign(static_cast<std::size_t>(n_max), 0);
  for (const auto& doc : docs) count_doc(doc, n_max, out);
  out.distinct_tokens = out.per_n[0].size();
  if (out.totals[0] == 0) throw std::runtime_error("count_ngrams: empty corpus");
  return out;
}

NgramCounts count_ngrams_files(const std::vector<std::string>& paths, int n_max) {
  if (n_max < 1 || n_max > kMaxNgramOrder) throw std::invalid_argument("n_max must be in 1..5");
  NgramCounts out;
  out.n_max = n_max;
  out.per_n.resize(static_cast<std::size_t>(n_max));
  out.totals.assign(static_cast<std::size_t>(n_max), 0);
  for (const auto& path : paths) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("count_ngrams: cannot open " + path);
    std::string line;
    while (std::getline(in, line)) count_doc(line, n_max, out);
  }
  out.distinct_tokens = out.per_n[0].size();
  if (out.totals[0] == 0) throw std::runtime_error("count_ngrams: empty corpus");
  return out;
}

NgramModel::NgramModel(std::vector<std::shared_ptr<CountTable>> tables,
                       std::vector<std::uint64_t> totals, std::uint64_t distinct_tokens)
    : tables_(std::move(tables)), totals_(std::move(totals)), distinct_tokens_(distinct_tokens) {}

NgramModel NgramModel::from_counts(const NgramCounts& counts) {
  std::vector<std::shared_ptr<CountTable>> tables;
  for (const auto& m : counts.per_n) tables.push_back(std::make_shared<MemoryCountTable>(m));
  return NgramModel(std::move(tables), counts.totals, counts.distinct_tokens);
}

double NgramModel::probability(const std::vector<std::string>& phrase) const {
  const auto order = phrase.size();
  if (order == 0) throw std::invalid_argument("ngram probability: empty phrase");
  if (order > tables_.size()) throw std::invalid_argument("ngram probability: order exceeds model");
  const auto c = tables_[order - 1]->lookup(join_words(phrase));
  if (c && *c > 0) {
    return static_cast<double>(*c) / static_cast<double>(totals_[order - 1]);
  }
  return std::pow(static_cast<double>(distinct_tokens_), -static_cast<double>(order));
}

AnchorModel::AnchorModel(std::shared_ptr<CountTable> table, std::uint64_t total)
    : table_(std::move(table)), total_(total) {}

double AnchorModel::probability(const std::string& phrase) const {
  if (!table_ || total_ == 0) return 0.0;
  const auto c = table_->lookup(phrase);
  if (!c) return 0.0;
  return static_cast<double>(*c) / static_cast<double>(total_);
}

double AnchorModel::probability(const std::vector<std::string>& words) const {
  return probability(join_words(words));
}

RefCorpusModel::RefCorpusModel(std::shared_ptr<CountTable> table, std::uint64_t total,
                               std::uint64_t vocab)
    : table_(std::move(table)), total_(total), vocab_(vocab) {}

double RefCorpusModel::probability(const std::string& word) const {
  const auto c = table_ ? table_->lookup(word) : std::nullopt;
  const double num = static_cast<double>(c.value_or(0)) + 1.0;
  return num / static_cast<double>(total_ + vocab_);
}

std::map<std::string, std::uint64_t> read_anchor_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_anchor_tsv: cannot open " + path);
  std::map<std::string, std::uint64_t> counts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::runtime_error("read_anchor_tsv: missing tab at line " + std::to_string(lineno));
    const std::string phrase = line.substr(0, tab);
    const std::uint64_t count = std::stoull(line.substr(tab + 1));
    if (count > 0) counts[phrase] += count;
  }
  return counts;
}

BkBuildReport save_background(const std::string& dir, const NgramCounts& counts,
                              const std::map<std::string, std::uint64_t>* anchor_counts) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  BkBuildReport report;
  try {
    for (int n = 1; n <= counts.n_max; ++n) {
      const auto& table = counts.per_n[static_cast<std::size_t>(n - 1)];
      write_count_store(dir + "/ngram." + std::to_string(n), table);
      report.ngram_totals.push_back(counts.totals[static_cast<std::size_t>(n - 1)]);
      report.ngram_distinct.push_back(table.size());
    }
    report.distinct_tokens = counts.distinct_tokens;
    if (anchor_counts) {
      write_count_store(dir + "/anchors", *anchor_counts);
      for (const auto& [_, c] : *anchor_counts) report.anchor_total += c;
      report.anchor_distinct = anchor_counts->size();
      report.has_anchors = true;
    }
    nlohmann::ordered_json meta;
    meta["version"] = 1;
    meta["n_max"] = counts.n_max;
    meta["ngram_totals"] = report.ngram_totals;
    meta["ngram_distinct"] = report.ngram_distinct;
    meta["distinct_tokens"] = report.distinct_tokens;
    meta["anchor_total"] = report.anchor_total;
    meta["has_anchors"] = report.has_anchors;
    std::ofstream out(dir + "/meta.json", std::ios::binary);
    out << meta.dump(2) << "\n";
  } catch (...) {
    fs::remove_all(dir);  // no partial model directories
    throw;
  }
  return report;
}

BackgroundModel load_background(const std::string& dir) {
  std::ifstream in(dir + "/meta.json");
  if (!in) throw std::runtime_error("load_background: cannot open " + dir + "/meta.json");
  nlohmann::json meta = nlohmann::json::parse(in);
  if (meta.at("version").get<int>() != 1)
    throw std::runtime_error("load_background: unsupported model version");

  const int n_max = meta.at("n_max").get<int>();
  std::vector<std::shared_ptr<CountTable>> tables;
  for (int n = 1; n <= n_max; ++n)
    tables.push_back(MappedCountTable::open(dir + "/ngram." + std::to_string(n)));

  BackgroundModel model;
  auto totals = meta.at("ngram_totals").get<std::vector<std::uint64_t>>();
  const auto distinct = meta.at("distinct_tokens").get<std::uint64_t>();
  auto unigram = tables[0];
  model.ngrams = std::make_shared<NgramModel>(std::move(tables), totals, distinct);
  model.ref = std::make_shared<RefCorpusModel>(unigram, totals[0], distinct);
  if (meta.value("has_anchors", false)) {
    std::shared_ptr<CountTable> anchors = MappedCountTable::open(dir + "/anchors");
    model.anchors = std::make_shared<AnchorModel>(anchors, meta.at("anchor_total").get<std::uint64_t>());
  } else {
    model.anchors = std::make_shared<AnchorModel>();
  }
  return model;
}

}  // namespace tdtk
