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

#include "regsub/subset_mask.h"

#include "regsub/errors.h"

namespace regsub {

SubsetMask SubsetMask::FromBits(int n, uint64_t bits) {
  if (n > 64) {
    throw Error(ErrorCode::kInvalidArgument, "FromBits requires n <= 64");
  }
  SubsetMask out(n);
  if (n < 64) bits &= (uint64_t{1} << n) - 1;
  if (!out.words_.empty()) out.words_[0] = bits;
  return out;
}

SubsetMask SubsetMask::Full(int n) {
  SubsetMask out(n);
  for (int e = 0; e < n; ++e) out.Insert(e);
  return out;
}

SubsetMask SubsetMask::FromElements(int n, std::span<const int> elements) {
  SubsetMask out(n);
  for (int e : elements) {
    if (e < 0 || e >= n) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "element " + std::to_string(e) + " outside ground set of " +
                      std::to_string(n));
    }
    out.Insert(e);
  }
  return out;
}

std::vector<int> SubsetMask::Elements() const {
  std::vector<int> out;
  for (size_t w = 0; w < words_.size(); ++w) {
    uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(static_cast<int>(w * 64) + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

bool SubsetMask::IsSubsetOf(const SubsetMask& other) const {
  if (n_ != other.n_) return false;
  for (size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

std::string SubsetMask::ToString() const {
  std::string out = "{";
  bool first = true;
  for (int e : Elements()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace regsub
