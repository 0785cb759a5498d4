// Copyright 2026 The DFEP Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DFEP_SUBSET_MASK_H_
#define DFEP_SUBSET_MASK_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace dfep {

// A subset of {0, ..., universe-1}. Bits at positions >= universe are always
// zero, so equality and hashing are canonical.
class SubsetMask {
 public:
  SubsetMask() = default;
  explicit SubsetMask(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static SubsetMask Full(std::size_t universe);
  static SubsetMask FromIndices(std::size_t universe, std::span<const int> ids);
  // Low 64 objects only; bits beyond `universe` are dropped.
  static SubsetMask FromWord(std::size_t universe, std::uint64_t word);

  std::size_t universe() const { return universe_; }

  bool contains(int i) const {
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }
  void insert(int i) {
    words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void erase(int i) {
    words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  int count() const {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
  }
  bool empty() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  bool IsSubsetOf(const SubsetMask& other) const;
  bool Intersects(const SubsetMask& other) const;

  SubsetMask& operator&=(const SubsetMask& other);
  SubsetMask& operator|=(const SubsetMask& other);
  // Set difference.
  SubsetMask& operator-=(const SubsetMask& other);

  friend SubsetMask operator&(SubsetMask a, const SubsetMask& b) { return a &= b; }
  friend SubsetMask operator|(SubsetMask a, const SubsetMask& b) { return a |= b; }
  friend SubsetMask operator-(SubsetMask a, const SubsetMask& b) { return a -= b; }

  friend bool operator==(const SubsetMask&, const SubsetMask&) = default;
  // Lexicographic on words from the high end; a total order for map keys.
  friend bool operator<(const SubsetMask& a, const SubsetMask& b);

  // Calls f(i) for every member in increasing order.
  template <typename F>
  void ForEach(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        f(static_cast<int>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> Indices() const;
  int First() const;  // -1 when empty

  // First 64 bits. Used as a dense key when universe <= 64.
  std::uint64_t LowWord() const { return words_.empty() ? 0 : words_[0]; }

  std::size_t Hash() const;
  std::string ToString() const;  // "{0,3,4}"

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace dfep

template <>
struct std::hash<dfep::SubsetMask> {
  std::size_t operator()(const dfep::SubsetMask& m) const { return m.Hash(); }
};

#endif  // DFEP_SUBSET_MASK_H_
