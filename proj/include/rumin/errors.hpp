#pragma once

#include <stdexcept>
#include <string>

namespace rumin {

/// Operands live in incompatible spaces (coordinate counts, models, sizes).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operand is outside the domain of an operator (non-vertical input to the
/// Lefschetz operator, uncertified Rumin element, bad parameter, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace rumin
