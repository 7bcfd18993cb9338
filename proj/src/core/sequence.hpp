#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/errors.hpp"

namespace shufsort {

using Key = std::int64_t;

// First key value that appears more than once, if any.
std::optional<Key> find_duplicate(std::span<const Key> keys);

// A sequence of mutually distinct integer keys. The checked factory rejects
// duplicates; from_distinct trusts the caller (sorted outputs, generators).
class KeySequence {
 public:
  KeySequence() = default;

  static KeySequence of(std::vector<Key> keys);
  static KeySequence from_distinct(std::vector<Key> keys);

  std::size_t size() const { return keys_.size(); }
  bool empty() const { return keys_.empty(); }
  std::span<const Key> keys() const { return keys_; }
  Key operator[](std::size_t i) const { return keys_[i]; }

  void swap_keys(std::size_t i, std::size_t j);

  friend bool operator==(const KeySequence&, const KeySequence&) = default;

 private:
  explicit KeySequence(std::vector<Key> keys) : keys_(std::move(keys)) {}

  std::vector<Key> keys_;
};

// Newline-delimited decimal keys, one per line; blank lines are ignored.
// Parse failures throw ParseError with the 1-based line number.
KeySequence read_sequence(std::istream& in);
KeySequence read_sequence_file(const std::string& path);
void write_sequence(std::ostream& out, const KeySequence& seq);
void write_sequence_file(const KeySequence& seq, const std::string& path);

}  // namespace shufsort
