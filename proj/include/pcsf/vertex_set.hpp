#pragma once

#include <cstdint>
#include <vector>

namespace pcsf {

/// Fixed-size bitset over vertices 0..n-1.
class VertexSet {
 public:
  VertexSet() : size_(0) {}
  explicit VertexSet(int size)
      : size_(size), words_((size + 63) / 64, 0) {}

  static VertexSet singleton(int size, int v) {
    VertexSet s(size);
    s.insert(v);
    return s;
  }

  int size() const { return size_; }

  void insert(int v) { words_[v >> 6] |= std::uint64_t(1) << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(std::uint64_t(1) << (v & 63)); }
  bool contains(int v) const {
    return (words_[v >> 6] >> (v & 63)) & 1;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }

  void unite_with(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  }

  bool disjoint_with(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return false;
    return true;
  }

  bool subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int v = 0; v < size_; ++v)
      if (contains(v)) out.push_back(v);
    return out;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  friend bool operator!=(const VertexSet& a, const VertexSet& b) {
    return !(a == b);
  }

 private:
  int size_;
  std::vector<std::uint64_t> words_;
};

}  // namespace pcsf
