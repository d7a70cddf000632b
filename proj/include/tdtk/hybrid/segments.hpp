#pragma once

#include <set>
#include <string>
#include <vector>

#include "tdtk/bk/models.hpp"

namespace tdtk {

// Symmetric conditional probability over all binary splits of the phrase:
// ln( Pr(s)^2 / mean_i Pr(w_1..w_i) Pr(w_{i+1}..w_n) ). Phrase length 2..5.
double scp(const std::vector<std::string>& phrase, const NgramModel& ngrams);

double sigmoid(double x);

// Length preference: (|s|-1)/|s| for multi-word segments, 1/3 for unigrams.
double segment_length_factor(std::size_t len);

// Stickiness C(s) = Len(s) * e^{Q(s)} * Sig(SCP(s)); the unigram coherence
// term is Sig(ln Pr(w)).
double segment_stickiness(const std::vector<std::string>& words, const AnchorModel& anchors,
                          const NgramModel& ngrams);

struct Segment {
  std::vector<std::string> words;
  double stickiness = 0.0;
  std::set<std::string> post_ids;
};

// Splits a token sequence into non-overlapping segments of length <= h
// maximizing total stickiness (dynamic program; ties prefer the earlier
// split point).
std::vector<std::vector<std::string>> segment_tokens(const std::vector<std::string>& tokens,
                                                     int h, const AnchorModel& anchors,
                                                     const NgramModel& ngrams);

}  // namespace tdtk
