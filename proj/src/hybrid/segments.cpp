#include "tdtk/hybrid/segments.hpp"

#include <cmath>
#include <stdexcept>

namespace tdtk {

double scp(const std::vector<std::string>& phrase, const NgramModel& ngrams) {
  const std::size_t n = phrase.size();
  if (n < 2) throw std::invalid_argument("scp: undefined for unigrams");
  if (n > 5) throw std::invalid_argument("scp: phrase longer than 5 words");

  const double p = ngrams.probability(phrase);
  double denom = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<std::string> left(phrase.begin(), phrase.begin() + static_cast<long>(i));
    std::vector<std::string> right(phrase.begin() + static_cast<long>(i), phrase.end());
    denom += ngrams.probability(left) * ngrams.probability(right);
  }
  denom /= static_cast<double>(n - 1);
  return std::log(p * p / denom);
}

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double segment_length_factor(std::size_t len) {
  if (len == 0) throw std::invalid_argument("segment_length_factor: empty segment");
  if (len == 1) return 1.0 / 3.0;
  return (static_cast<double>(len) - 1.0) / static_cast<double>(len);
}

double segment_stickiness(const std::vector<std::string>& words, const AnchorModel& anchors,
                          const NgramModel& ngrams) {
  const std::size_t n = words.size();
  if (n < 1 || n > 5) throw std::invalid_argument("segment_stickiness: length must be 1..5");
  const double q = anchors.probability(words);
  const double coherence =
      n == 1 ? sigmoid(std::log(ngrams.probability(words))) : sigmoid(scp(words, ngrams));
  return segment_length_factor(n) * std::exp(q) * coherence;
}

std::vector<std::vector<std::string>> segment_tokens(const std::vector<std::string>& tokens,
                                                     int h, const AnchorModel& anchors,
                                                     const NgramModel& ngrams) {
  if (h < 1) throw std::invalid_argument("segment_tokens: h must be >= 1");
  const std::size_t n = tokens.size();
  const std::size_t max_len = std::min<std::size_t>(static_cast<std::size_t>(h), 5);

  // best[i] = max total stickiness of tokens[0..i); back[i] = chosen last-segment length
  std::vector<double> best(n + 1, 0.0);
  std::vector<std::size_t> back(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    bool first = true;
    // longer last segment = earlier split point; scanned first so ties keep it
    for (std::size_t len = std::min(max_len, i); len >= 1; --len) {
      std::vector<std::string> seg(tokens.begin() + static_cast<long>(i - len),
                                   tokens.begin() + static_cast<long>(i));
      const double score = best[i - len] + segment_stickiness(seg, anchors, ngrams);
      if (first || score > best[i]) {
        best[i] = score;
        back[i] = len;
        first = false;
      }
    }
  }

  std::vector<std::vector<std::string>> segments;
  for (std::size_t i = n; i > 0; i -= back[i]) {
    segments.emplace_back(tokens.begin() + static_cast<long>(i - back[i]),
                          tokens.begin() + static_cast<long>(i));
  }
  std::reverse(segments.begin(), segments.end());
  return segments;
}

}  // namespace tdtk
