#include "tdtk/text/compounds.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tdtk/text/tokenize.hpp"

namespace tdtk {

CompoundLexicon::CompoundLexicon(std::set<std::string> entries) {
  for (const auto& e : entries) add(e);
}

void CompoundLexicon::add(const std::string& entry) {
  std::istringstream ss(entry);
  std::string w;
  std::size_t count = 0;
  std::string norm;
  while (ss >> w) {
    if (!norm.empty()) norm += ' ';
    norm += to_lower(w);
    ++count;
  }
  if (count < 2 || count > 4) return;  // entries are 2..4 words
  entries_.insert(norm);
  max_len_ = std::max(max_len_, count);
}

CompoundLexicon CompoundLexicon::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("CompoundLexicon: cannot open " + path);
  CompoundLexicon lex;
  std::string line;
  while (std::getline(in, line)) lex.add(line);
  return lex;
}

bool CompoundLexicon::contains(const std::vector<std::string>& words, std::size_t begin,
                               std::size_t len) const {
  if (begin + len > words.size()) return false;
  std::string key;
  for (std::size_t i = 0; i < len; ++i) {
    if (i) key += ' ';
    key += words[begin + i];
  }
  return entries_.count(key) > 0;
}

std::vector<std::string> join_compounds(const std::vector<std::string>& words,
                                        const CompoundLexicon& lexicon,
                                        const std::string& joiner) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < words.size()) {
    std::size_t best = 0;
    const std::size_t cap = std::min(lexicon.max_len(), words.size() - i);
    for (std::size_t len = cap; len >= 2 && best == 0; --len) {
      if (lexicon.contains(words, i, len)) best = len;
    }
    if (best) {
      std::string joined = words[i];
      for (std::size_t k = 1; k < best; ++k) joined += joiner + words[i + k];
      out.push_back(std::move(joined));
      i += best;
    } else {
      out.push_back(words[i]);
      ++i;
    }
  }
  return out;
}

}  // namespace tdtk
