#pragma once

#include "tdtk/core/post.hpp"
#include "tdtk/topic.hpp"

namespace tdtk {

// Patterns carried over from the previous window, grouped by the topic they
// belonged to there.
struct CoherentTopicMemory {
  struct Entry {
    std::vector<std::string> words;  // sorted pattern items
    int topic = 0;                   // previous-window topic id
  };
  std::vector<Entry> entries;
};

struct FhknConfig {
  int top_k = 100;   // high-utility patterns kept per window
  int knn_k = 3;     // neighbors consulted when matching memory
  double tau = 0.5;  // min cosine similarity to count as coherent
};

// Mines frequent patterns (min support max(2, 0.001*N)), keeps the top_k by
// utility (sum of member words' window frequencies), then splits them into
// coherent topics (KNN match against memory patterns, compared by cosine of
// post-incidence vectors over the current window) and emerging topics
// (Newman communities of a Jaccard-of-post-sets graph over the rest).
// The memory is replaced with this window's topics.
std::vector<Topic> fhkn_detect(const WindowBatch& batch, CoherentTopicMemory& memory,
                               const FhknConfig& cfg = {});

}  // namespace tdtk
