#pragma once

#include <set>
#include <string>
#include <vector>

namespace tdtk {

// Multi-word entries (2..4 words each), stored as space-separated lowercase
// sequences. Used at title time to join compound words.
class CompoundLexicon {
 public:
  CompoundLexicon() = default;
  explicit CompoundLexicon(std::set<std::string> entries);

  static CompoundLexicon load(const std::string& path);

  void add(const std::string& entry);
  bool empty() const { return entries_.empty(); }
  std::size_t max_len() const { return max_len_; }
  bool contains(const std::vector<std::string>& words, std::size_t begin, std::size_t len) const;

 private:
  std::set<std::string> entries_;
  std::size_t max_len_ = 0;
};

// Leftmost-longest greedy replacement of adjacent runs found in the lexicon
// with a single joined token.
std::vector<std::string> join_compounds(const std::vector<std::string>& words,
                                        const CompoundLexicon& lexicon,
                                        const std::string& joiner = "_");

}  // namespace tdtk
