#include "core/disorder.hpp"

#include <stdexcept>

namespace shufsort {

std::uint64_t descent_count(std::span<const Key> keys) {
  std::uint64_t count = 0;
  for (std::size_t i = 0; i + 1 < keys.size(); ++i) {
    if (keys[i] > keys[i + 1]) ++count;
  }
  return count;
}

std::uint64_t descent_count(const KeySequence& seq) { return descent_count(seq.keys()); }

int swap_disorder_delta_within(std::span<const Key> keys, std::size_t i, std::size_t j,
                               std::size_t lo, std::size_t hi) {
  const std::size_t n = keys.size();
  if (j >= n || i >= j) throw std::out_of_range("swap_disorder_delta: need i < j < n");
  if (i < lo || j >= hi || hi > n) throw std::out_of_range("swap_disorder_delta: swap outside range");

  // Left endpoints of adjacencies that the swap can affect, deduplicated and
  // clipped to those lying fully inside [lo, hi).
  std::size_t cand[4];
  int m = 0;
  auto add = [&](std::size_t a, bool valid) {
    if (!valid || a < lo || a + 1 >= hi) return;
    for (int t = 0; t < m; ++t) {
      if (cand[t] == a) return;
    }
    cand[m++] = a;
  };
  add(i - 1, i > 0);
  add(i, true);
  add(j - 1, j > 0);
  add(j, true);

  auto after = [&](std::size_t p) { return p == i ? keys[j] : (p == j ? keys[i] : keys[p]); };
  int delta = 0;
  for (int t = 0; t < m; ++t) {
    std::size_t a = cand[t];
    delta += int(after(a) > after(a + 1)) - int(keys[a] > keys[a + 1]);
  }
  return delta;
}

int swap_disorder_delta(std::span<const Key> keys, std::size_t i, std::size_t j) {
  return swap_disorder_delta_within(keys, i, j, 0, keys.size());
}

PartitionView partition_bounds(std::size_t n, std::uint32_t parts) {
  if (parts == 0) throw std::invalid_argument("partition_bounds: parts must be >= 1");
  PartitionView view;
  const std::size_t k = std::min<std::size_t>(parts, n);
  if (k == 0) return view;
  const std::size_t base = n / k;
  const std::size_t rem = n % k;
  view.bounds.reserve(k);
  std::size_t start = 0;
  for (std::size_t p = 0; p < k; ++p) {
    std::size_t len = base + (p < rem ? 1 : 0);
    view.bounds.emplace_back(start, start + len);
    start += len;
  }
  return view;
}

DisorderReport part_disorders(const KeySequence& seq, const PartitionView& parts) {
  const auto keys = seq.keys();
  std::size_t covered = 0;
  std::size_t expect_start = 0;
  for (auto [start, end] : parts.bounds) {
    if (start != expect_start || end < start || end > keys.size()) {
      throw std::invalid_argument("part_disorders: partition does not cover the sequence");
    }
    covered += end - start;
    expect_start = end;
  }
  if (covered != keys.size()) {
    throw std::invalid_argument("part_disorders: partition does not cover the sequence");
  }

  DisorderReport report;
  report.total = descent_count(keys);
  report.per_part.reserve(parts.bounds.size());
  for (auto [start, end] : parts.bounds) {
    report.per_part.push_back(descent_count(keys.subspan(start, end - start)));
  }
  return report;
}

}  // namespace shufsort
