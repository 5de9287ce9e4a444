#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cacount {

// Malformed or inconsistent user input (bad polynomial text, mismatched
// variables, invalid scheme file, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A configurable guard was exceeded (state count, oracle term budget,
// exact-solve threshold).
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cacount
