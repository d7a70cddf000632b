#include "tdtk/fp/detectors.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>
#include <set>
#include <stdexcept>

#include <Eigen/Dense>

namespace tdtk {

double tscv_theta(std::size_t set_size, double b, double c) {
  return 1.0 - 1.0 / (1.0 + std::exp((static_cast<double>(set_size) - b) / c));
}

namespace {

double cosine_sim(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const double na = a.norm(), nb = b.norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  return a.dot(b) / (na * nb);
}

}  // namespace

std::vector<Topic> tscv_detect(const WindowBatch& batch, const RefCorpusModel& ref,
                               const TscvConfig& cfg) {
  if (batch.posts.empty()) throw std::invalid_argument("tscv_detect: empty batch");
  if (cfg.k < 1) throw std::invalid_argument("tscv_detect: k must be >= 1");

  std::uint64_t total_tokens = 0;
  for (const auto& [w, tf] : batch.tf) total_tokens += static_cast<std::uint64_t>(tf);
  const std::uint64_t vocab = batch.tf.size();
  if (vocab == 0) return {};

  // add-one smoothed in-window probability over reference probability
  std::vector<std::pair<std::string, double>> scored;
  for (const auto& [w, tf] : batch.tf) {
    const double p_new = (tf + 1.0) / static_cast<double>(total_tokens + vocab);
    scored.emplace_back(w, p_new / ref.probability(w));
  }
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  std::size_t k = static_cast<std::size_t>(cfg.k);
  if (k > scored.size()) {
    std::cerr << "tscv: k=" << cfg.k << " exceeds vocabulary (" << scored.size()
              << "); using full vocabulary\n";
    k = scored.size();
  }

  const std::size_t n_docs = batch.posts.size();
  std::vector<std::string> terms;
  std::vector<Eigen::VectorXd> vectors;
  for (std::size_t i = 0; i < k; ++i) {
    const std::string& w = scored[i].first;
    Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n_docs));
    for (std::size_t d = 0; d < n_docs; ++d) {
      const auto& toks = batch.posts[d].tokens;
      if (toks && std::find(toks->begin(), toks->end(), w) != toks->end())
        v(static_cast<Eigen::Index>(d)) = 1.0;
    }
    terms.push_back(w);
    vectors.push_back(std::move(v));
  }

  std::vector<bool> used(terms.size(), false);
  std::vector<std::set<std::string>> seen_sets;
  std::vector<Topic> topics;

  for (std::size_t seed = 0; seed < terms.size(); ++seed) {
    if (used[seed]) continue;
    used[seed] = true;
    std::vector<std::string> members{terms[seed]};
    Eigen::VectorXd acc = vectors[seed];

    while (true) {
      double best_sim = -1.0;
      std::size_t best = terms.size();
      for (std::size_t j = 0; j < terms.size(); ++j) {
        if (used[j]) continue;
        const double sim = cosine_sim(acc, vectors[j]);
        if (sim > best_sim) {
          best_sim = sim;
          best = j;
        }
      }
      if (best == terms.size()) break;
      if (best_sim <= tscv_theta(members.size(), cfg.b, cfg.c)) break;

      used[best] = true;
      members.push_back(terms[best]);
      acc += vectors[best];
      // drop weak evidence so high-frequency members cannot carry the set
      const double floor = static_cast<double>(members.size()) / 2.0;
      for (Eigen::Index d = 0; d < acc.size(); ++d)
        if (acc(d) < floor) acc(d) = 0.0;
    }

    std::set<std::string> key(members.begin(), members.end());
    if (!seen_sets.empty() &&
        std::find(seen_sets.begin(), seen_sets.end(), key) != seen_sets.end())
      continue;
    seen_sets.push_back(key);

    Topic topic;
    topic.keywords = members;
    for (Eigen::Index d = 0; d < acc.size(); ++d)
      if (acc(d) > 0.0) topic.post_ids.insert(batch.posts[static_cast<std::size_t>(d)].id);
    topic.score = static_cast<double>(topic.post_ids.size());
    topics.push_back(std::move(topic));
  }
  return topics;
}

WindowSize classify_window(std::size_t current_posts, const std::vector<std::size_t>& history) {
  if (history.empty()) return WindowSize::Large;
  const double mean = std::accumulate(history.begin(), history.end(), 0.0) /
                      static_cast<double>(history.size());
  return static_cast<double>(current_posts) < mean / 3.0 ? WindowSize::Small : WindowSize::Large;
}

double dynamic_support_raw(const std::map<std::string, int>& tf, WindowSize size_class) {
  if (tf.empty()) throw std::invalid_argument("dynamic_support: empty window");
  std::vector<double> values;
  values.reserve(tf.size());
  double sum = 0.0;
  for (const auto& [_, c] : tf) {
    values.push_back(c);
    sum += c;
  }
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  const double median = n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
  const double avg = sum / static_cast<double>(n);
  const double factor = size_class == WindowSize::Small ? 2.0 : 1.0;
  return avg * factor * median;
}

int dynamic_support(const std::map<std::string, int>& tf, WindowSize size_class) {
  return static_cast<int>(std::ceil(dynamic_support_raw(tf, size_class)));
}

std::vector<Topic> dsfg_detect(const WindowBatch& batch, const std::vector<std::size_t>& history) {
  if (batch.posts.empty() || batch.tf.empty()) return {};
  const WindowSize cls = classify_window(batch.posts.size(), history);
  const int min_sup = std::max(1, dynamic_support(batch.tf, cls));
  auto patterns = maximal_patterns(fp_growth(to_transactions(batch), min_sup));

  std::vector<Topic> topics;
  topics.reserve(patterns.size());
  for (auto& p : patterns) {
    Topic t;
    t.keywords = p.items;
    t.post_ids = std::move(p.post_ids);
    t.score = p.support;
    topics.push_back(std::move(t));
  }
  std::sort(topics.begin(), topics.end(), [](const Topic& a, const Topic& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.keywords < b.keywords;
  });
  return topics;
}

std::vector<Topic> ufpt_detect(const WindowBatch& batch, const std::map<std::string, int>& prev_tf,
                               const UfptOptions& opts) {
  if (batch.posts.empty()) return {};
  const auto utilities = compute_utilities(batch, prev_tf);
  const double min_util =
      opts.min_util ? *opts.min_util : opts.min_util_fraction * utilities.total_tu;
  auto patterns =
      consolidate_patterns(hupm_mine(to_transactions(batch), utilities, min_util));

  std::vector<Topic> topics;
  topics.reserve(patterns.size());
  for (auto& p : patterns) {
    Topic t;
    t.keywords = p.items;
    t.post_ids = std::move(p.post_ids);
    t.score = p.utility;
    topics.push_back(std::move(t));
  }
  return topics;
}

}  // namespace tdtk
