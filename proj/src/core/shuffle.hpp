#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "core/disorder.hpp"
#include "core/rng.hpp"
#include "core/sequence.hpp"

namespace shufsort {

enum class ShufflePolicy {
  blind,        // apply every drawn swap
  guarded,      // apply a swap only if it reduces the part's internal disorder
  fixed_count,  // apply exactly fixed_swaps unconditional swaps per flagged part
};

const char* policy_name(ShufflePolicy policy);

struct ShuffleConfig {
  std::uint32_t parts = 16;          // k
  std::uint64_t threshold = 10;      // z: shuffle parts with disorder > z
  std::uint32_t budget_divisor = 2;  // m: budget per flagged part = floor(part_len / m)
  ShufflePolicy policy = ShufflePolicy::guarded;
  std::uint64_t fixed_swaps = 2;     // budget when policy == fixed_count
  std::uint64_t seed = 1;            // master seed; part p gets derive_subseed(seed, p)
};

void validate(const ShuffleConfig& cfg);

// Swaps a flagged part may spend: floor(part_len / divisor).
std::uint64_t swap_budget(std::size_t part_len, std::uint32_t divisor);

struct PartShuffle {
  std::uint64_t disorder_before = 0;
  std::uint64_t disorder_after = 0;
  std::uint64_t swaps_attempted = 0;
  std::uint64_t swaps_applied = 0;
};

struct ShuffleReport {
  std::vector<PartShuffle> per_part;
  std::uint64_t total_before = 0;
  // Tracked incrementally from per-swap deltas, never recomputed; tests
  // compare it against a from-scratch recount.
  std::uint64_t total_after = 0;
  std::chrono::nanoseconds elapsed{0};
};

// Runs up to `budget` swap attempts on seq[lo, hi). Guarded acceptance looks
// only at adjacencies internal to the part; `whole_seq_delta` accumulates the
// disorder change over the full sequence, including part-boundary adjacencies.
PartShuffle shuffle_part(KeySequence& seq, std::size_t lo, std::size_t hi, std::uint64_t budget,
                         ShufflePolicy policy, RngStream& rng, std::int64_t& whole_seq_delta);

// Partitions seq, shuffles every part whose disorder exceeds cfg.threshold,
// and leaves the rest untouched.
ShuffleReport preprocess(KeySequence& seq, const ShuffleConfig& cfg);

}  // namespace shufsort
