#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace loopalg {

// Base of every error raised by the engine.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed polynomial text. position is a 0-based byte offset.
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class unknown_variable_error : public error {
 public:
  using error::error;
};

class dimension_error : public error {
 public:
  using error::error;
};

class zero_polynomial_error : public error {
 public:
  using error::error;
};

// A truncated computation would need coefficients beyond the known window.
class precision_exhausted : public error {
 public:
  using error::error;
};

class non_invertible_error : public error {
 public:
  using error::error;
};

// The localising element has a zero or undetermined semi-norm at some level.
class good_element_violation : public error {
 public:
  using error::error;
};

}  // namespace loopalg
