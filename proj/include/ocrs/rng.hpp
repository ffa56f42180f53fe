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

#ifndef OCRS_RNG_HPP
#define OCRS_RNG_HPP

#include <array>
#include <cstdint>

namespace ocrs {

// Counter-based generator (Philox 4x32-10, Salmon et al., SC 2011).
//
// Every output block is a pure function of (seed, stream, draw), so any
// worker can reproduce any sample without sharing state. Simulation code
// derives one stream per (trial, purpose) pair; aggregation order then
// cannot change results.
class SplitRng {
 public:
  SplitRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t draw = 0)
      : seed_(seed), stream_(stream), draw_(draw) {}

  static std::array<std::uint32_t, 4> block(std::uint64_t seed,
                                            std::uint64_t stream,
                                            std::uint64_t draw) {
    std::uint32_t c0 = static_cast<std::uint32_t>(draw);
    std::uint32_t c1 = static_cast<std::uint32_t>(draw >> 32);
    std::uint32_t c2 = static_cast<std::uint32_t>(stream);
    std::uint32_t c3 = static_cast<std::uint32_t>(stream >> 32);
    std::uint32_t k0 = static_cast<std::uint32_t>(seed);
    std::uint32_t k1 = static_cast<std::uint32_t>(seed >> 32);
    for (int round = 0; round < 10; ++round) {
      std::uint64_t p0 = std::uint64_t{0xD2511F53u} * c0;
      std::uint64_t p1 = std::uint64_t{0xCD9E8D57u} * c2;
      std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
      std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
      std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
      std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
      c0 = hi1 ^ c1 ^ k0;
      c1 = lo1;
      c2 = hi0 ^ c3 ^ k1;
      c3 = lo0;
      k0 += 0x9E3779B9u;
      k1 += 0xBB67AE85u;
    }
    return {c0, c1, c2, c3};
  }

  std::uint32_t next_u32() {
    if (pos_ == 4) {
      buf_ = block(seed_, stream_, draw_++);
      pos_ = 0;
    }
    return buf_[pos_++];
  }

  std::uint64_t next_u64() {
    std::uint64_t lo = next_u32();
    std::uint64_t hi = next_u32();
    return (hi << 32) | lo;
  }

  // Uniform in [0, 1), 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return next_double() < p; }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t draw_;
  std::array<std::uint32_t, 4> buf_{};
  int pos_ = 4;
};

}  // namespace ocrs

#endif  // OCRS_RNG_HPP
