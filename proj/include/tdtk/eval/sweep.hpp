#pragma once

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace tdtk {

// Range notation: "start:stop" (step 1), "start:step:stop", "&" for unions,
// a "%" suffix dividing the element by 100, and symbolic endpoints such as
// "k-5" resolved from `context`. Errors carry the character position.
std::vector<double> parse_range(const std::string& text,
                                const std::map<std::string, double>& context = {});

struct SweepRow {
  std::vector<double> values;     // one per parameter, cross-product order
  std::optional<double> score;    // empty when the run failed
};

struct SweepResult {
  std::vector<std::string> names;
  std::vector<SweepRow> rows;
  std::vector<double> best;
  double best_score = 0.0;
};

// Evaluates the full cross-product of parameter values. Picks the argmax
// (argmin when `maximize` is false); ties keep the lexicographically
// smallest tuple. Failed runs are recorded with an empty score, warned, and
// excluded; all runs failing is an error.
SweepResult tune_parameter(
    const std::vector<std::pair<std::string, std::vector<double>>>& params,
    const std::function<std::optional<double>(const std::vector<double>&)>& evaluate,
    bool maximize);

// CSV: param columns then the score column; failed runs leave it empty.
void write_sweep_csv(std::ostream& out, const SweepResult& result,
                     const std::string& criterion);

}  // namespace tdtk
