#include "core/sort.hpp"

#include <utility>

#include "core/disorder.hpp"

namespace shufsort {

namespace {

// Every key comparison in every sort goes through here exactly once. Distinct
// keys are an input invariant; equality mid-sort means it was violated.
class CountingComparator {
 public:
  explicit CountingComparator(std::uint64_t& counter) : counter_(counter) {}

  bool less(Key a, Key b) {
    ++counter_;
    if (a == b) throw DuplicateKeyError(a, "duplicate key " + std::to_string(a) + " during sort");
    return a < b;
  }

 private:
  std::uint64_t& counter_;
};

template <typename Less>
std::vector<std::size_t> find_run_bounds(std::span<const Key> keys, Less&& less) {
  std::vector<std::size_t> bounds;
  if (keys.empty()) return bounds;
  bounds.push_back(0);
  for (std::size_t i = 0; i + 1 < keys.size(); ++i) {
    if (less(keys[i + 1], keys[i])) bounds.push_back(i + 1);
  }
  bounds.push_back(keys.size());
  return bounds;
}

// Merges src[lo, mid) and src[mid, hi) into dst[lo, hi).
void merge_into(const std::vector<Key>& src, std::size_t lo, std::size_t mid, std::size_t hi,
                std::vector<Key>& dst, CountingComparator& cmp, std::uint64_t& moves) {
  std::size_t a = lo;
  std::size_t b = mid;
  std::size_t out = lo;
  while (a < mid && b < hi) {
    if (cmp.less(src[b], src[a])) {
      dst[out++] = src[b++];
    } else {
      dst[out++] = src[a++];
    }
    ++moves;
  }
  while (a < mid) {
    dst[out++] = src[a++];
    ++moves;
  }
  while (b < hi) {
    dst[out++] = src[b++];
    ++moves;
  }
}

void baseline_split_merge(std::vector<Key>& work, std::size_t lo, std::size_t hi,
                          std::vector<Key>& dst, CountingComparator& cmp, std::uint64_t& moves) {
  if (hi - lo < 2) return;
  const std::size_t mid = lo + (hi - lo) / 2;
  baseline_split_merge(dst, lo, mid, work, cmp, moves);
  baseline_split_merge(dst, mid, hi, work, cmp, moves);
  merge_into(work, lo, mid, hi, dst, cmp, moves);
}

}  // namespace

RunList run_decomposition(const KeySequence& seq) {
  return RunList{find_run_bounds(seq.keys(), [](Key a, Key b) { return a < b; })};
}

std::pair<KeySequence, SortStats> adaptive_merge_sort(const KeySequence& input) {
  SortStats stats;
  const auto start_time = std::chrono::steady_clock::now();

  std::vector<Key> current(input.keys().begin(), input.keys().end());
  CountingComparator cmp(stats.comparisons);

  std::vector<std::size_t> bounds =
      find_run_bounds(current, [&](Key a, Key b) { return cmp.less(a, b); });
  stats.runs_detected = bounds.empty() ? 0 : bounds.size() - 1;

  std::vector<Key> scratch(current.size());
  while (bounds.size() > 2) {
    std::vector<std::size_t> next_bounds;
    next_bounds.reserve(bounds.size() / 2 + 2);
    next_bounds.push_back(0);
    std::size_t r = 0;
    for (; r + 2 < bounds.size(); r += 2) {
      merge_into(current, bounds[r], bounds[r + 1], bounds[r + 2], scratch, cmp, stats.moves);
      next_bounds.push_back(bounds[r + 2]);
    }
    if (r + 2 == bounds.size()) {
      // odd run out; carry it into the next round unchanged
      for (std::size_t i = bounds[r]; i < bounds[r + 1]; ++i) {
        scratch[i] = current[i];
        ++stats.moves;
      }
      next_bounds.push_back(bounds[r + 1]);
    }
    current.swap(scratch);
    bounds = std::move(next_bounds);
  }

  stats.elapsed = std::chrono::steady_clock::now() - start_time;
  return {KeySequence::from_distinct(std::move(current)), stats};
}

std::pair<KeySequence, SortStats> baseline_merge_sort(const KeySequence& input) {
  SortStats stats;
  const auto start_time = std::chrono::steady_clock::now();

  stats.runs_detected = input.empty() ? 0 : descent_count(input) + 1;

  std::vector<Key> result(input.keys().begin(), input.keys().end());
  std::vector<Key> work(result);
  CountingComparator cmp(stats.comparisons);
  baseline_split_merge(work, 0, result.size(), result, cmp, stats.moves);

  stats.elapsed = std::chrono::steady_clock::now() - start_time;
  return {KeySequence::from_distinct(std::move(result)), stats};
}

PipelineResult shuffled_adaptive_sort(const KeySequence& input, const ShuffleConfig& cfg) {
  KeySequence working = input;
  ShuffleReport shuffle_report = preprocess(working, cfg);
  auto [sorted, stats] = adaptive_merge_sort(working);
  return PipelineResult{std::move(sorted), std::move(shuffle_report), stats};
}

}  // namespace shufsort
