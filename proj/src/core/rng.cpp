#include "core/rng.hpp"

#include <stdexcept>

namespace shufsort {

std::uint64_t RngStream::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("RngStream::below: bound must be >= 1");
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    std::uint64_t v = next();
    if (v >= threshold) return v % bound;
  }
}

std::pair<std::size_t, std::size_t> draw_pair(RngStream& rng, std::size_t len) {
  if (len < 2) throw std::invalid_argument("draw_pair: need at least two positions");
  std::size_t i = static_cast<std::size_t>(rng.below(len));
  std::size_t j = static_cast<std::size_t>(rng.below(len - 1));
  if (j >= i) ++j;
  if (i > j) std::swap(i, j);
  return {i, j};
}

std::uint64_t derive_subseed(std::uint64_t master, std::uint64_t index) {
  RngStream mix(master ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
  return mix.next();
}

}  // namespace shufsort
