#pragma once

#include "tdtk/core/post.hpp"
#include "tdtk/hybrid/segments.hpp"
#include "tdtk/topic.hpp"

namespace tdtk {

struct SgjpConfig {
  int h = 3;          // max segment length
  int threshold = 3;  // min posts per topic segment
  int k = 10;         // Jarvis-Patrick neighbor-list size
  int k_min = 5;      // required shared neighbors
};

// Segment every post, keep segments seen in at least `threshold` posts,
// connect them by Jaccard similarity of their post sets, and cluster the
// graph with Jarvis-Patrick. Each cluster becomes one topic.
std::vector<Topic> sgjp_detect(const WindowBatch& batch, const SgjpConfig& cfg,
                               const AnchorModel& anchors, const NgramModel& ngrams);

}  // namespace tdtk
