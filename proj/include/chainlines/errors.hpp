#ifndef CHAINLINES_ERRORS_HPP
#define CHAINLINES_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace chainlines {

// Operands live in different product spaces.
class space_mismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed the desk-scale budget (p^N > 1e8).
class budget_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed variety file; line() is 1-based, 0 when not tied to a line.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A chain count was requested for a problem whose expected dimension is not 0.
class expected_dimension_error : public std::domain_error {
 public:
  expected_dimension_error(std::int64_t dimension, const std::string& what)
      : std::domain_error(what), dimension_(dimension) {}

  std::int64_t dimension() const noexcept { return dimension_; }

 private:
  std::int64_t dimension_;
};

// More conditions than ambient dimensions: decrease l or increase N.
class overdetermined_error : public expected_dimension_error {
 public:
  explicit overdetermined_error(std::int64_t dimension)
      : expected_dimension_error(dimension, "expected dimension " + std::to_string(dimension) +
                                                " < 0: system is overdetermined") {}
};

// Fewer conditions than ambient dimensions: the solution set is positive dimensional.
class underdetermined_error : public expected_dimension_error {
 public:
  explicit underdetermined_error(std::int64_t dimension)
      : expected_dimension_error(dimension, "expected dimension " + std::to_string(dimension) +
                                                " > 0: chains are not finite in number") {}
};

}  // namespace chainlines

#endif  // CHAINLINES_ERRORS_HPP
