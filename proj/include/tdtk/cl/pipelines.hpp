#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tdtk/cluster/cluster.hpp"
#include "tdtk/core/post.hpp"
#include "tdtk/embed/vectors.hpp"
#include "tdtk/text/compounds.hpp"
#include "tdtk/topic.hpp"

namespace tdtk {

enum class ClusterKind { Optics, CMeans, Gk };
enum class DistanceKind { Cosine, Euclidean };

struct ClPipelineConfig {
  ClusterKind cluster = ClusterKind::Optics;
  DistanceKind distance = DistanceKind::Cosine;
  int min_pts = 5;           // OPTICS
  double xi = 0.05;
  std::optional<int> c;      // CM/GK; unset sweeps 2..12 by silhouette
  int c_sweep_max = 12;
  double m = 1.1;
  double eps = 1e-3;
  int title_words = 5;
  unsigned seed = 42;
  OovPolicy oov = OovPolicy::Skip;
};

// Per-cluster title: top words by in-cluster frequency weighted by inverse
// batch document frequency, compound joining applied last.
std::vector<std::string> title_for_posts(const std::vector<const Post*>& members,
                                         const WindowBatch& batch, int title_words,
                                         const CompoundLexicon* lexicon);

// Embed posts by mean pooling, cluster per config, one topic per cluster.
// Noise posts (OPTICS) are excluded; all-noise gives an empty topic list.
std::vector<Topic> cl_detect(const WindowBatch& batch, const EmbeddingTable& table,
                             const ClPipelineConfig& cfg,
                             const CompoundLexicon* lexicon = nullptr);

}  // namespace tdtk
