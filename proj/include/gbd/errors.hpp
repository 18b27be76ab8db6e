#pragma once

#include <stdexcept>

namespace gbd {

// Argument outside the mathematical domain (x outside [0,1], delta <= 0, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Index outside the range an operation accepts.
class IndexError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

// Operator parameters violate a normalization or degree constraint.
class ConstraintError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Request for an order, family or derivative that is not provided.
class UnsupportedError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Order fit impossible because every error sample underflowed.
class DegenerateFitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace gbd
