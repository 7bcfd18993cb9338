#include "core/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <utility>

namespace shufsort {

std::optional<Key> find_duplicate(std::span<const Key> keys) {
  std::vector<Key> sorted(keys.begin(), keys.end());
  std::sort(sorted.begin(), sorted.end());
  auto it = std::adjacent_find(sorted.begin(), sorted.end());
  if (it == sorted.end()) return std::nullopt;
  return *it;
}

KeySequence KeySequence::of(std::vector<Key> keys) {
  if (auto dup = find_duplicate(keys)) {
    throw DuplicateKeyError(*dup, "duplicate key " + std::to_string(*dup));
  }
  return KeySequence(std::move(keys));
}

KeySequence KeySequence::from_distinct(std::vector<Key> keys) {
  return KeySequence(std::move(keys));
}

void KeySequence::swap_keys(std::size_t i, std::size_t j) {
  if (i >= keys_.size() || j >= keys_.size()) {
    throw std::out_of_range("swap_keys: index out of range");
  }
  std::swap(keys_[i], keys_[j]);
}

KeySequence read_sequence(std::istream& in) {
  std::vector<Key> keys;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    std::size_t end = line.find_last_not_of(" \t") + 1;
    Key value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + begin, line.data() + end, value);
    if (ec != std::errc() || ptr != line.data() + end) {
      throw ParseError(line_no, "line " + std::to_string(line_no) + ": not a decimal integer: \"" +
                                    line.substr(begin, end - begin) + "\"");
    }
    keys.push_back(value);
  }
  return KeySequence::of(std::move(keys));
}

KeySequence read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path + " for reading");
  return read_sequence(in);
}

void write_sequence(std::ostream& out, const KeySequence& seq) {
  for (Key k : seq.keys()) out << k << '\n';
}

void write_sequence_file(const KeySequence& seq, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  write_sequence(out, seq);
  if (!out) throw IoError("write to " + path + " failed");
}

}  // namespace shufsort
