#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tdtk {

// Read-only phrase -> count table.
class CountTable {
 public:
  virtual ~CountTable() = default;
  virtual std::optional<std::uint64_t> lookup(std::string_view key) const = 0;
  virtual std::uint64_t entries() const = 0;
};

class MemoryCountTable final : public CountTable {
 public:
  explicit MemoryCountTable(std::map<std::string, std::uint64_t> counts)
      : counts_(std::move(counts)) {}
  std::optional<std::uint64_t> lookup(std::string_view key) const override;
  std::uint64_t entries() const override { return counts_.size(); }
  const std::map<std::string, std::uint64_t>& counts() const { return counts_; }

 private:
  std::map<std::string, std::uint64_t> counts_;
};

// On-disk layout: `<prefix>.tsv` holds `key\tcount\n` lines sorted by key
// byte order; `<prefix>.idx` is a little-endian uint64 array with the byte
// offset of each line. The TSV is mmapped and queried by binary search over
// the offset array.
class MappedCountTable final : public CountTable {
 public:
  static std::unique_ptr<MappedCountTable> open(const std::string& prefix);
  ~MappedCountTable() override;

  std::optional<std::uint64_t> lookup(std::string_view key) const override;
  std::uint64_t entries() const override { return offsets_.size(); }

  MappedCountTable(const MappedCountTable&) = delete;
  MappedCountTable& operator=(const MappedCountTable&) = delete;

 private:
  MappedCountTable() = default;
  std::string_view key_at(std::size_t i) const;
  std::uint64_t count_at(std::size_t i) const;

  const char* data_ = nullptr;
  std::size_t size_ = 0;
  int fd_ = -1;
  std::vector<std::uint64_t> offsets_;
};

// Writes the sorted TSV segment and its index sidecar. Deterministic: the
// same counts always produce byte-identical files.
void write_count_store(const std::string& prefix,
                       const std::map<std::string, std::uint64_t>& counts);

}  // namespace tdtk
