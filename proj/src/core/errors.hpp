#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace shufsort {

// Input violates the distinct-keys invariant.
class DuplicateKeyError : public std::runtime_error {
 public:
  DuplicateKeyError(std::int64_t key, std::string what)
      : std::runtime_error(std::move(what)), key_(key) {}
  std::int64_t key() const { return key_; }

 private:
  std::int64_t key_;
};

// Malformed text input; `line` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::string what)
      : std::runtime_error(std::move(what)), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace shufsort
