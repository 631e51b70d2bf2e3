#pragma once

#include <stdexcept>
#include <string>

namespace sato {

// Operand shapes disagree (generator tables, component index, graph).
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Parameters outside the domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class SingularSeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnsupportedInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An invariant that valid inputs can never break.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sato
