#include "core/shuffle.hpp"

#include <cassert>
#include <stdexcept>

namespace shufsort {

const char* policy_name(ShufflePolicy policy) {
  switch (policy) {
    case ShufflePolicy::blind: return "blind";
    case ShufflePolicy::guarded: return "guarded";
    case ShufflePolicy::fixed_count: return "fixed";
  }
  return "unknown";
}

void validate(const ShuffleConfig& cfg) {
  if (cfg.parts == 0) throw std::invalid_argument("ShuffleConfig: parts must be >= 1");
  if (cfg.budget_divisor == 0) {
    throw std::invalid_argument("ShuffleConfig: budget divisor must be >= 1");
  }
}

std::uint64_t swap_budget(std::size_t part_len, std::uint32_t divisor) {
  if (divisor == 0) throw std::invalid_argument("swap_budget: divisor must be >= 1");
  return part_len / divisor;
}

PartShuffle shuffle_part(KeySequence& seq, std::size_t lo, std::size_t hi, std::uint64_t budget,
                         ShufflePolicy policy, RngStream& rng, std::int64_t& whole_seq_delta) {
  if (lo > hi || hi > seq.size()) throw std::out_of_range("shuffle_part: bad range");
  const auto keys = seq.keys();
  const std::size_t len = hi - lo;

  PartShuffle part;
  part.disorder_before = descent_count(keys.subspan(lo, len));
  std::int64_t internal = static_cast<std::int64_t>(part.disorder_before);

  if (len >= 2) {
    for (std::uint64_t s = 0; s < budget; ++s) {
      auto [a, b] = draw_pair(rng, len);
      const std::size_t i = lo + a;
      const std::size_t j = lo + b;
      ++part.swaps_attempted;
      const int internal_delta = swap_disorder_delta_within(keys, i, j, lo, hi);
      if (policy == ShufflePolicy::guarded && internal_delta >= 0) continue;
      whole_seq_delta += swap_disorder_delta(keys, i, j);
      seq.swap_keys(i, j);
      internal += internal_delta;
      ++part.swaps_applied;
    }
  }

  part.disorder_after = static_cast<std::uint64_t>(internal);
  assert(part.disorder_after == descent_count(seq.keys().subspan(lo, len)));
  return part;
}

ShuffleReport preprocess(KeySequence& seq, const ShuffleConfig& cfg) {
  validate(cfg);
  const auto start_time = std::chrono::steady_clock::now();

  ShuffleReport report;
  report.total_before = descent_count(seq);
  std::int64_t whole_seq_delta = 0;

  const PartitionView parts = partition_bounds(seq.size(), cfg.parts);
  report.per_part.reserve(parts.part_count());
  for (std::size_t p = 0; p < parts.part_count(); ++p) {
    const auto [lo, hi] = parts.bounds[p];
    const std::uint64_t disorder = descent_count(seq.keys().subspan(lo, hi - lo));
    if (disorder > cfg.threshold) {
      const std::uint64_t budget = cfg.policy == ShufflePolicy::fixed_count
                                       ? cfg.fixed_swaps
                                       : swap_budget(hi - lo, cfg.budget_divisor);
      RngStream part_rng(derive_subseed(cfg.seed, p));
      report.per_part.push_back(
          shuffle_part(seq, lo, hi, budget, cfg.policy, part_rng, whole_seq_delta));
    } else {
      report.per_part.push_back(PartShuffle{disorder, disorder, 0, 0});
    }
  }

  report.total_after =
      static_cast<std::uint64_t>(static_cast<std::int64_t>(report.total_before) + whole_seq_delta);
  report.elapsed = std::chrono::steady_clock::now() - start_time;
  return report;
}

}  // namespace shufsort
