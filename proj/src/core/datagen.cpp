#include "core/datagen.hpp"

#include <numeric>
#include <stdexcept>

#include "core/disorder.hpp"
#include "core/rng.hpp"

namespace shufsort {

KeySequence uniform_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<Key> keys(n);
  std::iota(keys.begin(), keys.end(), Key{1});
  RngStream rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(keys[i - 1], keys[j]);
  }
  return KeySequence::from_distinct(std::move(keys));
}

KeySequence with_target_disorder(std::size_t n, std::uint64_t target, std::uint64_t seed) {
  if (n == 0 || target > n - 1) {
    throw std::invalid_argument("with_target_disorder: target must lie in [0, n-1]");
  }
  RngStream rng(seed);

  // Uniform `target`-subset of the n-1 adjacency positions (partial
  // Fisher-Yates: the first `target` entries are the chosen ones).
  std::vector<std::size_t> positions(n - 1);
  std::iota(positions.begin(), positions.end(), std::size_t{0});
  for (std::uint64_t i = 0; i < target; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - 1 - i));
    std::swap(positions[i], positions[j]);
  }
  std::vector<bool> descend(n, false);
  for (std::uint64_t i = 0; i < target; ++i) descend[positions[i]] = true;

  // level[i] = descents at or after position i. It drops by one exactly across
  // each chosen adjacency, so ranking positions by (level asc, index asc) and
  // handing out values 1..n in that order descends exactly there.
  std::vector<std::uint64_t> level(n, 0);
  for (std::size_t i = n - 1; i-- > 0;) {
    level[i] = level[i + 1] + (descend[i] ? 1 : 0);
  }

  std::vector<std::size_t> level_start(target + 2, 0);
  for (std::size_t i = 0; i < n; ++i) ++level_start[level[i] + 1];
  for (std::size_t l = 1; l < level_start.size(); ++l) level_start[l] += level_start[l - 1];

  std::vector<Key> keys(n);
  for (std::size_t i = 0; i < n; ++i) {
    keys[i] = static_cast<Key>(++level_start[level[i]]);
  }

  KeySequence seq = KeySequence::from_distinct(std::move(keys));
  if (descent_count(seq) != target) {
    throw std::logic_error("with_target_disorder: construction self-check failed");
  }
  return seq;
}

KeySequence nearly_sorted(std::size_t n, std::uint64_t swaps, std::uint64_t seed) {
  if (n > 0 && swaps > n - 1) {
    throw std::invalid_argument("nearly_sorted: swaps must lie in [0, n-1]");
  }
  std::vector<Key> keys(n);
  std::iota(keys.begin(), keys.end(), Key{1});
  if (n >= 2) {
    RngStream rng(seed);
    for (std::uint64_t s = 0; s < swaps; ++s) {
      auto [i, j] = draw_pair(rng, n);
      std::swap(keys[i], keys[j]);
    }
  }
  return KeySequence::from_distinct(std::move(keys));
}

}  // namespace shufsort
