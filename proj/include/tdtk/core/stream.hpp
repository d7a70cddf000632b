#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tdtk/core/post.hpp"

namespace tdtk {

struct IngestReport {
  std::size_t parsed = 0;
  std::size_t malformed = 0;
  std::vector<std::size_t> malformed_lines;  // 1-based line numbers
};

// Reads posts-jsonl: one {id, ts, channel, text} object per line.
// Malformed lines are skipped and counted; more than 10% malformed is fatal.
std::vector<Post> ingest_posts(const std::string& path, IngestReport* report = nullptr);

// Partitions posts into consecutive duration-length batches starting at the
// first post's timestamp (landmark origin). Intervals are half-open
// [start, end); empty intervals yield empty batches. Sorts by timestamp if
// needed. All posts must have tokens.
std::vector<WindowBatch> window_stream(std::vector<Post> posts, const WindowSpec& spec);

// Total occurrences of each token across the batch's posts.
std::map<std::string, int> term_frequencies(const WindowBatch& batch);

}  // namespace tdtk
