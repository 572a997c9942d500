#pragma once

#include <stdexcept>
#include <string>

namespace cyclotome {

/// Malformed or inconsistent input (bad table, non-monotone samples, level mismatch).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured cap (morphism count, chain rank, factorial cost) would be exceeded.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A level outside the truncation window was requested from an object
/// that has no lazy generator.
class GeneratorExhausted : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A homology degree outside the validity window of a truncated complex.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace cyclotome
