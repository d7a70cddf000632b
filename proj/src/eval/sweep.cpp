#include "tdtk/eval/sweep.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace tdtk {
namespace {

[[noreturn]] void fail(const std::string& text, std::size_t pos, const std::string& why) {
  throw std::invalid_argument("bad range \"" + text + "\" at position " + std::to_string(pos) +
                              ": " + why);
}

struct Atom {
  double value = 0.0;
  bool percent = false;
};

// number, or identifier[-number] resolved from the context
Atom parse_atom(const std::string& text, const std::string& piece, std::size_t base,
                const std::map<std::string, double>& context) {
  if (piece.empty()) fail(text, base, "empty value");
  Atom atom;
  std::string body = piece;
  if (body.back() == '%') {
    atom.percent = true;
    body.pop_back();
    if (body.empty()) fail(text, base, "empty value before '%'");
  }
  if (std::isalpha(static_cast<unsigned char>(body[0]))) {
    std::size_t i = 0;
    while (i < body.size() && (std::isalnum(static_cast<unsigned char>(body[i])) || body[i] == '_'))
      ++i;
    const std::string name = body.substr(0, i);
    auto it = context.find(name);
    if (it == context.end()) fail(text, base, "unknown symbol '" + name + "'");
    atom.value = it->second;
    if (i < body.size()) {
      if (body[i] != '-') fail(text, base + i, "expected '-' after symbol");
      std::size_t used = 0;
      double off;
      try {
        off = std::stod(body.substr(i + 1), &used);
      } catch (const std::exception&) {
        fail(text, base + i + 1, "expected a number");
      }
      if (i + 1 + used != body.size()) fail(text, base + i + 1 + used, "trailing characters");
      atom.value -= off;
    }
    return atom;
  }
  std::size_t used = 0;
  try {
    atom.value = std::stod(body, &used);
  } catch (const std::exception&) {
    fail(text, base, "expected a number");
  }
  if (used != body.size()) fail(text, base + used, "trailing characters");
  return atom;
}

void expand_piece(const std::string& text, const std::string& piece, std::size_t base,
                  const std::map<std::string, double>& context, std::vector<double>& out) {
  std::vector<std::pair<std::string, std::size_t>> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= piece.size(); ++i) {
    if (i == piece.size() || piece[i] == ':') {
      parts.emplace_back(piece.substr(start, i - start), base + start);
      start = i + 1;
    }
  }
  if (parts.size() > 3) fail(text, parts[3].second, "too many ':' separators");

  std::vector<Atom> atoms;
  for (const auto& [p, pos] : parts) atoms.push_back(parse_atom(text, p, pos, context));
  const bool percent = std::any_of(atoms.begin(), atoms.end(),
                                   [](const Atom& a) { return a.percent; });
  const double scale = percent ? 0.01 : 1.0;

  if (atoms.size() == 1) {
    out.push_back(atoms[0].value * scale);
    return;
  }
  const double lo = atoms.front().value;
  const double hi = atoms.back().value;
  const double step = atoms.size() == 3 ? atoms[1].value : 1.0;
  if (step <= 0.0) fail(text, parts[1].second, "step must be positive");
  if (hi < lo) fail(text, parts.back().second, "stop below start");
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  for (std::size_t i = 0; i < count; ++i) out.push_back((lo + static_cast<double>(i) * step) * scale);
}

}  // namespace

std::vector<double> parse_range(const std::string& text,
                                const std::map<std::string, double>& context) {
  if (text.empty()) throw std::invalid_argument("bad range \"\" at position 0: empty range");
  std::vector<double> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '&') {
      expand_piece(text, text.substr(start, i - start), start, context, out);
      start = i + 1;
    }
  }
  return out;
}

SweepResult tune_parameter(
    const std::vector<std::pair<std::string, std::vector<double>>>& params,
    const std::function<std::optional<double>(const std::vector<double>&)>& evaluate,
    bool maximize) {
  if (params.empty()) throw std::invalid_argument("tune_parameter: no parameters");
  for (const auto& [name, values] : params)
    if (values.empty()) throw std::invalid_argument("tune_parameter: empty range for " + name);

  SweepResult result;
  for (const auto& [name, _] : params) result.names.push_back(name);

  std::vector<std::size_t> idx(params.size(), 0);
  bool have_best = false;
  while (true) {
    SweepRow row;
    for (std::size_t i = 0; i < params.size(); ++i) row.values.push_back(params[i].second[idx[i]]);
    row.score = evaluate(row.values);
    if (!row.score) {
      std::cerr << "tune_parameter: run failed for";
      for (std::size_t i = 0; i < params.size(); ++i)
        std::cerr << ' ' << params[i].first << '=' << row.values[i];
      std::cerr << '\n';
    } else if (!have_best || (maximize ? *row.score > result.best_score
                                       : *row.score < result.best_score)) {
      // rows iterate in lexicographic tuple order, so strict improvement
      // keeps the smallest tuple on ties
      result.best_score = *row.score;
      result.best = row.values;
      have_best = true;
    }
    result.rows.push_back(std::move(row));

    std::size_t pos = params.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < params[pos].second.size()) break;
      idx[pos] = 0;
      if (pos == 0) {
        if (!have_best) throw std::runtime_error("tune_parameter: every run failed");
        return result;
      }
    }
  }
}

void write_sweep_csv(std::ostream& out, const SweepResult& result, const std::string& criterion) {
  for (const auto& n : result.names) out << n << ',';
  out << criterion << '\n';
  for (const auto& row : result.rows) {
    for (double v : row.values) out << v << ',';
    if (row.score) out << *row.score;
    out << '\n';
  }
}

}  // namespace tdtk
