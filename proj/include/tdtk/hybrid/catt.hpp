#pragma once

#include "tdtk/core/post.hpp"
#include "tdtk/topic.hpp"

namespace tdtk {

struct CattConfig {
  double damping = 0.5;  // delta in [0,1]
  double rate = 0.2;     // fraction of scored pairs to keep, (0, 0.5]
};

// Asymmetric word association: Cooc(x,y)/f(y) + delta*Cooc(x,y)/f(x), where f
// counts posts containing the word and Cooc counts posts containing both.
double cimawa(int cooc, int fx, int fy, double damping);

// Symmetric attraction between two words: CIMAWA(x,y) * CIMAWA(y,x).
double agf(int cooc, int fx, int fy, double damping);

// Scores all word pairs co-occurring in at least two posts, keeps the top
// `rate` fraction by AGF, and reports the connected components of the
// surviving pairs as topics. A post relates to a topic when it contains at
// least two of its words.
std::vector<Topic> catt_detect(const WindowBatch& batch, const CattConfig& cfg);

}  // namespace tdtk
