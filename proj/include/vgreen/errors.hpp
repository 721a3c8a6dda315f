#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vgreen {

// Operands of different degree, e.g. composing a map of IS_3 with one of IS_4.
class DimensionError : public std::invalid_argument {
 public:
  DimensionError(std::size_t lhs, std::size_t rhs)
      : std::invalid_argument("degree mismatch: " + std::to_string(lhs) +
                              " vs " + std::to_string(rhs)) {}
};

// Base for every way an image sequence can fail to describe an element.
class InvalidElement : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public InvalidElement {
 public:
  using InvalidElement::InvalidElement;
};

class InjectivityError : public InvalidElement {
 public:
  using InvalidElement::InvalidElement;
};

class TotalityError : public InvalidElement {
 public:
  using InvalidElement::InvalidElement;
};

// Raised before allocation when a universe or product budget would be exceeded.
class CapacityError : public std::length_error {
 public:
  CapacityError(const std::string& what, std::uint64_t cardinality)
      : std::length_error(what), cardinality_(cardinality) {}

  std::uint64_t cardinality() const noexcept { return cardinality_; }

 private:
  std::uint64_t cardinality_;
};

}  // namespace vgreen
