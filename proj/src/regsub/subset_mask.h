// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REGSUB_SUBSET_MASK_H_
#define REGSUB_SUBSET_MASK_H_

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace regsub {

// A subset of the ground set {0, ..., n-1}, stored as packed 64-bit words.
class SubsetMask {
 public:
  SubsetMask() = default;
  explicit SubsetMask(int n) : n_(n), words_((n + 63) / 64, 0) {}

  // Subset whose members are the set bits of `bits`; requires n <= 64.
  static SubsetMask FromBits(int n, uint64_t bits);
  static SubsetMask Full(int n);
  static SubsetMask FromElements(int n, std::span<const int> elements);

  int universe_size() const { return n_; }

  bool Contains(int e) const { return (words_[e >> 6] >> (e & 63)) & 1U; }
  void Insert(int e) { words_[e >> 6] |= uint64_t{1} << (e & 63); }
  void Erase(int e) { words_[e >> 6] &= ~(uint64_t{1} << (e & 63)); }

  SubsetMask With(int e) const {
    SubsetMask out = *this;
    out.Insert(e);
    return out;
  }
  SubsetMask Without(int e) const {
    SubsetMask out = *this;
    out.Erase(e);
    return out;
  }

  int Count() const {
    int total = 0;
    for (uint64_t w : words_) total += std::popcount(w);
    return total;
  }
  bool Empty() const { return Count() == 0; }

  // Members in increasing order.
  std::vector<int> Elements() const;

  // Bits of the first word; meaningful as a full index only when n <= 64.
  uint64_t LowBits() const { return words_.empty() ? 0 : words_[0]; }

  bool IsSubsetOf(const SubsetMask& other) const;

  // "{0,2,5}" style rendering, used in diagnostics.
  std::string ToString() const;

  friend bool operator==(const SubsetMask&, const SubsetMask&) = default;

 private:
  int n_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace regsub

#endif  // REGSUB_SUBSET_MASK_H_
