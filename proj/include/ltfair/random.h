// Copyright 2026 The ltfair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LTFAIR_RANDOM_H_
#define LTFAIR_RANDOM_H_

#include <cstdint>
#include <limits>

namespace ltfair {

// SplitMix64. Used instead of the standard engines plus distributions because
// the output of std::uniform_real_distribution is implementation-defined and
// results here must be bitwise reproducible across toolchains.
class SplitMix64 {
 public:
  using result_type = uint64_t;

  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double Uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

// Derives an independent substream seed from a base seed and two ordinals
// (typically call site and sample index).
inline uint64_t DeriveSeed(uint64_t seed, uint64_t stream, uint64_t index) {
  SplitMix64 a(seed ^ 0x6a09e667f3bcc909ULL);
  uint64_t s = a() ^ stream;
  SplitMix64 b(s);
  s = b() ^ index;
  SplitMix64 c(s);
  return c();
}

}  // namespace ltfair

#endif  // LTFAIR_RANDOM_H_
