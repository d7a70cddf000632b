#pragma once

#include <set>
#include <string>
#include <vector>

namespace tdtk {

enum class TokenTag {
  WordTargetLang,
  WordOtherLang,
  Number,
  Punctuation,
  Emoji,
  Hashtag,
  Url,
  Mention,
  Other,
};

struct Token {
  std::string text;
  TokenTag tag = TokenTag::Other;
};

// Which character block counts as the target language. ArabicScript covers
// the Persian/Arabic codepoint ranges; Latin lets the toolkit run on
// synthetic Latin-script streams.
enum class TargetScript { ArabicScript, Latin };

struct TokenizerConfig {
  TargetScript target = TargetScript::ArabicScript;
};

using StopwordList = std::set<std::string>;

// Splits text into tagged tokens. URLs, mentions, hashtags and emoji are
// recognized as single tokens; contiguous runs of one character class form
// one token otherwise.
std::vector<Token> tokenize(const std::string& text, const TokenizerConfig& cfg = {});

// Keeps target-language word tokens, lowercased, minus stopwords.
std::vector<std::string> filter_tokens(const std::vector<Token>& tokens,
                                       const StopwordList& stopwords);

std::string to_lower(const std::string& s);

StopwordList load_stopwords(const std::string& path);

const char* tag_name(TokenTag tag);

}  // namespace tdtk
