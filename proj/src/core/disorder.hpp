#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "core/sequence.hpp"

namespace shufsort {

// Number of descents: adjacent pairs with keys[i] > keys[i+1]. Ranges from 0
// (ascending) to n-1 (descending).
std::uint64_t descent_count(std::span<const Key> keys);
std::uint64_t descent_count(const KeySequence& seq);

// Disorder change that swapping positions i < j would cause, without mutating.
// Only the (at most four) adjacencies touching i and j can change, so this is
// O(1). The range-restricted variant considers only adjacencies lying fully
// inside [lo, hi); the swap positions themselves must lie inside the range.
int swap_disorder_delta(std::span<const Key> keys, std::size_t i, std::size_t j);
int swap_disorder_delta_within(std::span<const Key> keys, std::size_t i, std::size_t j,
                               std::size_t lo, std::size_t hi);

// Balanced contiguous split: parts are in order, their union is [0, n), and
// lengths differ by at most one (the remainder goes to the leading parts).
// Requesting more parts than elements yields n singletons.
struct PartitionView {
  std::vector<std::pair<std::size_t, std::size_t>> bounds;  // [start, end) per part
  std::size_t part_count() const { return bounds.size(); }
};

PartitionView partition_bounds(std::size_t n, std::uint32_t parts);

// total counts every adjacency of the sequence; per_part counts only
// adjacencies internal to each part, so sum(per_part) <= total and the gap is
// at most part_count - 1 (one uncounted adjacency per part boundary).
struct DisorderReport {
  std::uint64_t total = 0;
  std::vector<std::uint64_t> per_part;
};

DisorderReport part_disorders(const KeySequence& seq, const PartitionView& parts);

}  // namespace shufsort
