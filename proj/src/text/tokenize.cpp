#include "tdtk/text/tokenize.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

namespace tdtk {
namespace {

// Minimal UTF-8 decode; invalid bytes come back as their raw value in
// 0x80..0xFF, which classify as Other.
char32_t decode_utf8(const std::string& s, std::size_t& i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  auto cont = [&](std::size_t k) {
    return i + k < s.size() && (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
  };
  if (b0 < 0x80) {
    i += 1;
    return b0;
  }
  if ((b0 & 0xE0) == 0xC0 && cont(1)) {
    char32_t cp = (b0 & 0x1F) << 6 | (static_cast<unsigned char>(s[i + 1]) & 0x3F);
    i += 2;
    return cp;
  }
  if ((b0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
    char32_t cp = (b0 & 0x0F) << 12 | (static_cast<unsigned char>(s[i + 1]) & 0x3F) << 6 |
                  (static_cast<unsigned char>(s[i + 2]) & 0x3F);
    i += 3;
    return cp;
  }
  if ((b0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
    char32_t cp = (b0 & 0x07) << 18 | (static_cast<unsigned char>(s[i + 1]) & 0x3F) << 12 |
                  (static_cast<unsigned char>(s[i + 2]) & 0x3F) << 6 |
                  (static_cast<unsigned char>(s[i + 3]) & 0x3F);
    i += 4;
    return cp;
  }
  i += 1;
  return b0;
}

bool is_arabic_script(char32_t cp) {
  return (cp >= 0x0600 && cp <= 0x06FF) || (cp >= 0x0750 && cp <= 0x077F) ||
         (cp >= 0x08A0 && cp <= 0x08FF) || (cp >= 0xFB50 && cp <= 0xFDFF) ||
         (cp >= 0xFE70 && cp <= 0xFEFF) || cp == 0x200C;  // ZWNJ joins Persian words
}

bool is_latin_letter(char32_t cp) {
  return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') || (cp >= 0x00C0 && cp <= 0x024F);
}

bool is_digit_cp(char32_t cp) {
  return (cp >= '0' && cp <= '9') || (cp >= 0x0660 && cp <= 0x0669) ||
         (cp >= 0x06F0 && cp <= 0x06F9);
}

bool is_emoji(char32_t cp) {
  return (cp >= 0x1F000 && cp <= 0x1FAFF) || (cp >= 0x2600 && cp <= 0x27BF) ||
         (cp >= 0x2B00 && cp <= 0x2BFF) || cp == 0x2764 || (cp >= 0xFE00 && cp <= 0xFE0F);
}

bool is_space_cp(char32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == 0x00A0 || cp == 0x200B;
}

bool is_punct_cp(char32_t cp) {
  if (cp < 0x80) {
    char c = static_cast<char>(cp);
    return std::ispunct(static_cast<unsigned char>(c));
  }
  // Arabic comma, semicolon, question mark, percent; general punctuation block
  return cp == 0x060C || cp == 0x061B || cp == 0x061F || cp == 0x066A ||
         (cp >= 0x2010 && cp <= 0x205E && cp != 0x200C);
}

bool is_word_char(char32_t cp) { return is_arabic_script(cp) || is_latin_letter(cp) || is_digit_cp(cp) || cp == '_'; }

struct Cp {
  char32_t cp;
  std::size_t begin, end;  // byte span
};

}  // namespace

std::string to_lower(const std::string& s) {
  std::string out = s;
  for (auto& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

std::vector<Token> tokenize(const std::string& text, const TokenizerConfig& cfg) {
  std::vector<Cp> cps;
  for (std::size_t i = 0; i < text.size();) {
    std::size_t begin = i;
    char32_t cp = decode_utf8(text, i);
    cps.push_back({cp, begin, i});
  }

  auto word_tag = [&](char32_t cp) {
    const bool target_arabic = cfg.target == TargetScript::ArabicScript;
    if (is_arabic_script(cp)) return target_arabic ? TokenTag::WordTargetLang : TokenTag::WordOtherLang;
    return target_arabic ? TokenTag::WordOtherLang : TokenTag::WordTargetLang;
  };

  std::vector<Token> out;
  std::size_t n = cps.size();
  std::size_t i = 0;
  auto slice = [&](std::size_t a, std::size_t b) {
    return text.substr(cps[a].begin, cps[b - 1].end - cps[a].begin);
  };
  auto starts_url = [&](std::size_t k) {
    static const char* prefixes[] = {"http://", "https://", "www."};
    for (const char* p : prefixes) {
      std::size_t len = std::char_traits<char>::length(p);
      if (text.compare(cps[k].begin, len, p) == 0) return true;
    }
    return false;
  };

  while (i < n) {
    char32_t cp = cps[i].cp;
    if (is_space_cp(cp)) {
      ++i;
      continue;
    }
    if (starts_url(i)) {
      std::size_t j = i;
      while (j < n && !is_space_cp(cps[j].cp)) ++j;
      out.push_back({slice(i, j), TokenTag::Url});
      i = j;
      continue;
    }
    if ((cp == '#' || cp == '@') && i + 1 < n && is_word_char(cps[i + 1].cp)) {
      std::size_t j = i + 1;
      while (j < n && is_word_char(cps[j].cp)) ++j;
      out.push_back({slice(i, j), cp == '#' ? TokenTag::Hashtag : TokenTag::Mention});
      i = j;
      continue;
    }
    if (is_emoji(cp)) {
      out.push_back({slice(i, i + 1), TokenTag::Emoji});
      ++i;
      continue;
    }
    if (is_digit_cp(cp)) {
      std::size_t j = i;
      while (j < n && is_digit_cp(cps[j].cp)) ++j;
      out.push_back({slice(i, j), TokenTag::Number});
      i = j;
      continue;
    }
    if (is_arabic_script(cp) || is_latin_letter(cp)) {
      const TokenTag tag = word_tag(cp);
      std::size_t j = i;
      while (j < n && (is_arabic_script(cps[j].cp) || is_latin_letter(cps[j].cp)) &&
             word_tag(cps[j].cp) == tag)
        ++j;
      out.push_back({slice(i, j), tag});
      i = j;
      continue;
    }
    if (is_punct_cp(cp)) {
      std::size_t j = i;
      while (j < n && is_punct_cp(cps[j].cp) && !is_emoji(cps[j].cp)) ++j;
      out.push_back({slice(i, j), TokenTag::Punctuation});
      i = j;
      continue;
    }
    out.push_back({slice(i, i + 1), TokenTag::Other});
    ++i;
  }
  return out;
}

std::vector<std::string> filter_tokens(const std::vector<Token>& tokens,
                                       const StopwordList& stopwords) {
  std::vector<std::string> out;
  for (const auto& t : tokens) {
    if (t.tag != TokenTag::WordTargetLang) continue;
    std::string w = to_lower(t.text);
    if (stopwords.count(w)) continue;
    out.push_back(std::move(w));
  }
  return out;
}

StopwordList load_stopwords(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_stopwords: cannot open " + path);
  StopwordList set;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) set.insert(to_lower(line));
  }
  return set;
}

const char* tag_name(TokenTag tag) {
  switch (tag) {
    case TokenTag::WordTargetLang: return "word-target-lang";
    case TokenTag::WordOtherLang: return "word-other-lang";
    case TokenTag::Number: return "number";
    case TokenTag::Punctuation: return "punctuation";
    case TokenTag::Emoji: return "emoji";
    case TokenTag::Hashtag: return "hashtag";
    case TokenTag::Url: return "url";
    case TokenTag::Mention: return "mention";
    case TokenTag::Other: return "other";
  }
  return "other";
}

}  // namespace tdtk
