#pragma once

#include <stdexcept>
#include <string>

namespace ampli {

/// Input that violates a documented precondition (bad matrix, wrong shape,
/// point outside a chart, ...).
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A mathematical claim that the library verifies did not hold, e.g. an
/// interpolation kernel of the wrong dimension or a non-generic Z.
class ClaimError : public std::runtime_error {
 public:
  explicit ClaimError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ampli
