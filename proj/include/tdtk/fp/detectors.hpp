#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tdtk/bk/models.hpp"
#include "tdtk/core/post.hpp"
#include "tdtk/fp/utility.hpp"
#include "tdtk/topic.hpp"

namespace tdtk {

// --- TSCV: term selection + co-occurrence vectors ------------------------

struct TscvConfig {
  int k = 50;       // top-term count
  double b = 5.0;   // similarity-threshold constants
  double c = 2.0;
};

// Similarity threshold as a function of the growing term-set size:
// 1 - 1/(1 + exp((|S| - b)/c)). Strictly increasing; 0.5 at |S| = b.
double tscv_theta(std::size_t set_size, double b = 5.0, double c = 2.0);

std::vector<Topic> tscv_detect(const WindowBatch& batch, const RefCorpusModel& ref,
                               const TscvConfig& cfg);

// --- DSFG: FP-Growth with dynamic min support ----------------------------

enum class WindowSize { Small, Large };

// Small iff the post count is strictly below one third of the mean of the
// recent window sizes; no history defaults to Large.
WindowSize classify_window(std::size_t current_posts, const std::vector<std::size_t>& history);

// avg(TF) * median(TF) for large windows, avg(TF) * 2*median(TF) for small.
double dynamic_support_raw(const std::map<std::string, int>& tf, WindowSize size_class);

// Same, rounded up to an integer support count.
int dynamic_support(const std::map<std::string, int>& tf, WindowSize size_class);

std::vector<Topic> dsfg_detect(const WindowBatch& batch, const std::vector<std::size_t>& history);

// --- UFPT: high-utility emerging-pattern detection -----------------------

struct UfptOptions {
  double min_util_fraction = 0.001;    // of total TU, when min_util unset
  std::optional<double> min_util;
};

std::vector<Topic> ufpt_detect(const WindowBatch& batch, const std::map<std::string, int>& prev_tf,
                               const UfptOptions& opts = {});

}  // namespace tdtk
