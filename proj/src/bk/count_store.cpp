#include "tdtk/bk/count_store.hpp"

#include <fcntl.h>
#include <sys/mman.h>
#include <sys/stat.h>
#include <unistd.h>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace tdtk {

std::optional<std::uint64_t> MemoryCountTable::lookup(std::string_view key) const {
  auto it = counts_.find(std::string(key));
  if (it == counts_.end()) return std::nullopt;
  return it->second;
}

void write_count_store(const std::string& prefix,
                       const std::map<std::string, std::uint64_t>& counts) {
  std::ofstream tsv(prefix + ".tsv", std::ios::binary);
  std::ofstream idx(prefix + ".idx", std::ios::binary);
  if (!tsv || !idx) throw std::runtime_error("write_count_store: cannot write " + prefix);
  std::uint64_t offset = 0;
  for (const auto& [key, count] : counts) {
    char le[8];
    std::uint64_t off = offset;
    for (int i = 0; i < 8; ++i) {
      le[i] = static_cast<char>(off & 0xFF);
      off >>= 8;
    }
    idx.write(le, 8);
    std::string line = key + "\t" + std::to_string(count) + "\n";
    tsv.write(line.data(), static_cast<std::streamsize>(line.size()));
    offset += line.size();
  }
}

std::unique_ptr<MappedCountTable> MappedCountTable::open(const std::string& prefix) {
  auto table = std::unique_ptr<MappedCountTable>(new MappedCountTable());

  std::ifstream idx(prefix + ".idx", std::ios::binary);
  if (!idx) throw std::runtime_error("MappedCountTable: cannot open " + prefix + ".idx");
  char buf[8];
  while (idx.read(buf, 8)) {
    std::uint64_t off = 0;
    for (int i = 7; i >= 0; --i) off = off << 8 | static_cast<unsigned char>(buf[i]);
    table->offsets_.push_back(off);
  }

  table->fd_ = ::open((prefix + ".tsv").c_str(), O_RDONLY);
  if (table->fd_ < 0) throw std::runtime_error("MappedCountTable: cannot open " + prefix + ".tsv");
  struct stat st{};
  if (fstat(table->fd_, &st) != 0) throw std::runtime_error("MappedCountTable: fstat failed");
  table->size_ = static_cast<std::size_t>(st.st_size);
  if (table->size_ > 0) {
    void* p = ::mmap(nullptr, table->size_, PROT_READ, MAP_PRIVATE, table->fd_, 0);
    if (p == MAP_FAILED) throw std::runtime_error("MappedCountTable: mmap failed");
    table->data_ = static_cast<const char*>(p);
  }
  return table;
}

MappedCountTable::~MappedCountTable() {
  if (data_) ::munmap(const_cast<char*>(data_), size_);
  if (fd_ >= 0) ::close(fd_);
}

std::string_view MappedCountTable::key_at(std::size_t i) const {
  const char* begin = data_ + offsets_[i];
  const char* tab = static_cast<const char*>(
      std::memchr(begin, '\t', size_ - offsets_[i]));
  return {begin, static_cast<std::size_t>(tab - begin)};
}

std::uint64_t MappedCountTable::count_at(std::size_t i) const {
  std::string_view key = key_at(i);
  const char* p = data_ + offsets_[i] + key.size() + 1;
  std::uint64_t v = 0;
  while (p < data_ + size_ && *p >= '0' && *p <= '9') v = v * 10 + static_cast<std::uint64_t>(*p++ - '0');
  return v;
}

std::optional<std::uint64_t> MappedCountTable::lookup(std::string_view key) const {
  std::size_t lo = 0, hi = offsets_.size();
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    int cmp = key_at(mid).compare(key);
    if (cmp == 0) return count_at(mid);
    if (cmp < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return std::nullopt;
}

}  // namespace tdtk
