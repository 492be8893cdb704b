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

#ifndef REGSUB_RNG_H_
#define REGSUB_RNG_H_

#include <cstdint>

namespace regsub {

// SplitMix64 output finalizer.
constexpr uint64_t MixBits(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Counter-based generator: draw i of a stream is a pure function of
// (key, i), so streams can be derived per replica, step or element and
// consumed in any order without changing what each one produces.
class RngStream {
 public:
  explicit RngStream(uint64_t seed) : key_(MixBits(seed ^ kGolden)) {}

  // Independent child stream labelled by `tag`. Deriving does not advance
  // the parent.
  RngStream Derive(uint64_t tag) const {
    return RngStream(FromKey{}, MixBits(key_ ^ MixBits(tag + kGolden)));
  }

  uint64_t NextU64() {
    ++counter_;
    return MixBits(key_ + counter_ * kGolden);
  }

  // Uniform on [0, 1) with 53 random bits.
  double Uniform() {
    return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
  }

  // Uniform on {0, ..., bound - 1}; bound must be positive.
  uint64_t UniformIndex(uint64_t bound) {
    const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % bound);
    uint64_t draw;
    do {
      draw = NextU64();
    } while (draw >= limit);
    return draw % bound;
  }

  bool Bernoulli(double p) { return Uniform() < p; }

  uint64_t key() const { return key_; }
  uint64_t counter() const { return counter_; }

 private:
  static constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
  struct FromKey {};
  RngStream(FromKey, uint64_t key) : key_(key) {}

  uint64_t key_;
  uint64_t counter_ = 0;
};

}  // namespace regsub

#endif  // REGSUB_RNG_H_
