#pragma once

#include <stdexcept>

namespace radio {

// Cycle orders the labeling constructions do not cover (n == 0 or n == 2).
struct UnsupportedOrderError : std::domain_error {
  using std::domain_error::domain_error;
};

// Malformed textual input (labeling documents, DIMACS-like graph files).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace radio
