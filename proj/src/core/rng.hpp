#pragma once

#include <cstdint>
#include <utility>

namespace shufsort {

// splitmix64 (Vigna's reference algorithm). Chosen because the whole state is
// one 64-bit word and the output function is fixed by a handful of constants,
// so independent implementations reproduce identical streams. Reference
// vectors: seed 0 yields 0xe220a8397b1dcdaf, 0x6e789e6aa1b965f4,
// 0x06c45d188009454f.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Unbiased draw in [0, bound): 64-bit words are rejected while
  // w < 2^64 mod bound, then reduced modulo bound.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

// Uniform unordered pair of distinct indices in [0, len), returned ordered.
std::pair<std::size_t, std::size_t> draw_pair(RngStream& rng, std::size_t len);

// Seed for an independent sub-stream (e.g. one shuffle part): one splitmix64
// step over master XOR golden*(index+1). Pinned so that sequential and
// per-part-parallel execution produce identical shuffles.
std::uint64_t derive_subseed(std::uint64_t master, std::uint64_t index);

}  // namespace shufsort
