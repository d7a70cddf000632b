#include "tdtk/core/stream.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

namespace tdtk {

std::vector<Post> ingest_posts(const std::string& path, IngestReport* report) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("ingest_posts: cannot open " + path);

  std::vector<Post> posts;
  IngestReport local;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      auto j = nlohmann::json::parse(line);
      Post p;
      p.id = j.at("id").get<std::string>();
      p.ts = j.at("ts").get<std::int64_t>();
      p.channel = j.value("channel", std::string{});
      p.text = j.at("text").get<std::string>();
      if (p.id.empty()) throw std::runtime_error("empty id");
      posts.push_back(std::move(p));
      ++local.parsed;
    } catch (const std::exception&) {
      ++local.malformed;
      local.malformed_lines.push_back(lineno);
    }
  }

  const std::size_t total = local.parsed + local.malformed;
  if (total > 0 && local.malformed * 10 > total) {
    std::string msg = "ingest_posts: too many malformed lines (" +
                      std::to_string(local.malformed) + "/" + std::to_string(total) + ") at lines";
    for (auto ln : local.malformed_lines) msg += " " + std::to_string(ln);
    throw std::runtime_error(msg);
  }
  if (report) *report = local;
  return posts;
}

std::vector<WindowBatch> window_stream(std::vector<Post> posts, const WindowSpec& spec) {
  if (spec.batch_duration <= 0) throw std::invalid_argument("window_stream: duration must be > 0");
  for (const auto& p : posts) {
    if (!p.tokens) throw std::runtime_error("window_stream: post " + p.id + " has no tokens; run preprocess first");
  }
  std::stable_sort(posts.begin(), posts.end(),
                   [](const Post& a, const Post& b) { return a.ts < b.ts; });

  std::vector<WindowBatch> batches;
  if (posts.empty()) return batches;

  const std::int64_t origin = posts.front().ts;
  const std::int64_t dur = spec.batch_duration;
  for (const auto& p : posts) {
    const auto idx = static_cast<std::size_t>((p.ts - origin) / dur);
    while (batches.size() <= idx) {
      WindowBatch b;
      b.index = batches.size();
      b.start = origin + static_cast<std::int64_t>(b.index) * dur;
      b.end = b.start + dur;
      batches.push_back(std::move(b));
    }
    batches[idx].posts.push_back(p);
  }
  for (auto& b : batches) b.tf = term_frequencies(b);
  return batches;
}

std::map<std::string, int> term_frequencies(const WindowBatch& batch) {
  std::map<std::string, int> tf;
  for (const auto& p : batch.posts) {
    if (!p.tokens) continue;
    for (const auto& w : *p.tokens) ++tf[w];
  }
  return tf;
}

}  // namespace tdtk
