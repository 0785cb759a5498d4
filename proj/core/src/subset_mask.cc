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

#include "dfep/subset_mask.h"

#include "dfep/error.h"

namespace dfep {

SubsetMask SubsetMask::Full(std::size_t universe) {
  SubsetMask mask(universe);
  for (auto& w : mask.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0) {
    mask.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  }
  return mask;
}

SubsetMask SubsetMask::FromIndices(std::size_t universe,
                                   std::span<const int> ids) {
  SubsetMask mask(universe);
  for (int id : ids) {
    DFEP_CHECK(id >= 0 && static_cast<std::size_t>(id) < universe,
               "subset index out of range");
    mask.insert(id);
  }
  return mask;
}

SubsetMask SubsetMask::FromWord(std::size_t universe, std::uint64_t word) {
  SubsetMask mask(universe);
  if (!mask.words_.empty()) {
    mask.words_[0] = word;
    if (universe < 64) mask.words_[0] &= (std::uint64_t{1} << universe) - 1;
  }
  return mask;
}

bool SubsetMask::IsSubsetOf(const SubsetMask& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool SubsetMask::Intersects(const SubsetMask& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

SubsetMask& SubsetMask::operator&=(const SubsetMask& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

SubsetMask& SubsetMask::operator|=(const SubsetMask& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

SubsetMask& SubsetMask::operator-=(const SubsetMask& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool operator<(const SubsetMask& a, const SubsetMask& b) {
  if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
  }
  return false;
}

std::vector<int> SubsetMask::Indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  ForEach([&](int i) { out.push_back(i); });
  return out;
}

int SubsetMask::First() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
    }
  }
  return -1;
}

std::size_t SubsetMask::Hash() const {
  std::size_t h = universe_ * 0x9e3779b97f4a7c15ull;
  for (auto w : words_) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) +
         (h >> 2);
  }
  return h;
}

std::string SubsetMask::ToString() const {
  std::string out = "{";
  bool first = true;
  ForEach([&](int i) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  });
  out += "}";
  return out;
}

}  // namespace dfep
