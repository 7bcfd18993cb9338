#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "core/sequence.hpp"
#include "core/shuffle.hpp"

namespace shufsort {

struct SortStats {
  std::uint64_t comparisons = 0;
  std::uint64_t moves = 0;          // element copies during merging
  std::uint64_t runs_detected = 0;  // disorder(input) + 1 for n >= 1, else 0
  std::chrono::nanoseconds elapsed{0};
};

// Maximal strictly ascending runs: bounds = {0, r1, ..., n} so run i is
// [bounds[i], bounds[i+1]). Empty input yields no bounds and zero runs.
struct RunList {
  std::vector<std::size_t> bounds;
  std::size_t run_count() const { return bounds.empty() ? 0 : bounds.size() - 1; }
};

RunList run_decomposition(const KeySequence& seq);

// Natural merge sort: seed the merge with the input's existing runs, then
// merge adjacent run pairs in rounds. ceil(log2(runs)) rounds of at most n-1
// comparisons each keep the cost near n(1 + log2(disorder + 1)).
std::pair<KeySequence, SortStats> adaptive_merge_sort(const KeySequence& input);

// Top-down mergesort that ignores presortedness; the non-adaptive yardstick.
std::pair<KeySequence, SortStats> baseline_merge_sort(const KeySequence& input);

struct PipelineResult {
  KeySequence sorted;
  ShuffleReport shuffle;
  SortStats sort;
};

// The full scheme: partition, shuffle flagged parts, then adaptive sort.
PipelineResult shuffled_adaptive_sort(const KeySequence& input, const ShuffleConfig& cfg);

}  // namespace shufsort
