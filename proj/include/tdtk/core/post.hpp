#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tdtk {

// One social-media message. `tokens` is empty until preprocessing runs.
struct Post {
  std::string id;
  std::int64_t ts = 0;  // epoch seconds, UTC
  std::string channel;
  std::string text;
  std::optional<std::vector<std::string>> tokens;
};

struct WindowSpec {
  std::int64_t batch_duration = 3600;  // seconds
};

// One landmark-window batch plus its term-frequency table.
struct WindowBatch {
  std::size_t index = 0;
  std::int64_t start = 0;  // inclusive
  std::int64_t end = 0;    // exclusive
  std::vector<Post> posts;
  std::map<std::string, int> tf;
};

}  // namespace tdtk
