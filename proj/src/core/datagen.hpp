#pragma once

#include <cstdint>

#include "core/sequence.hpp"

namespace shufsort {

// Uniformly random permutation of {1..n} (Fisher-Yates over an RngStream).
KeySequence uniform_permutation(std::size_t n, std::uint64_t seed);

// Permutation of {1..n} whose disorder is exactly `target` (0 <= target <= n-1
// for n >= 1): a uniformly random set of `target` descent positions is chosen,
// then values are assigned so that exactly those adjacencies descend. The
// result is re-measured before it is returned.
KeySequence with_target_disorder(std::size_t n, std::uint64_t target, std::uint64_t seed);

// Identity permutation perturbed by `swaps` random transpositions.
KeySequence nearly_sorted(std::size_t n, std::uint64_t swaps, std::uint64_t seed);

}  // namespace shufsort
