#pragma once

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "tdtk/core/post.hpp"

namespace tdtk::testing {

// Unique scratch directory, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("tdtk_test_" + tag + "_" + std::to_string(counter++) + "_" +
             std::to_string(::getpid()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  std::string str() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

inline Post make_post(std::string id, std::int64_t ts, std::vector<std::string> tokens) {
  Post p;
  p.id = std::move(id);
  p.ts = ts;
  p.channel = "t";
  p.tokens = std::move(tokens);
  return p;
}

inline WindowBatch make_batch(std::vector<Post> posts) {
  WindowBatch b;
  b.posts = std::move(posts);
  for (const auto& p : b.posts)
    if (p.tokens)
      for (const auto& w : *p.tokens) ++b.tf[w];
  if (!b.posts.empty()) {
    b.start = 0;
    b.end = 3600;
  }
  return b;
}

}  // namespace tdtk::testing
