#pragma once

#include <stdexcept>
#include <string>

namespace univalent {

/// Argument outside the domain an operation is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The rational closed form is too close to one of its removable
/// singularities; evaluate with Horner instead.
class NearSingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Two consecutive polygon vertices coincide.
class DegenerateSegmentError : public DomainError {
 public:
  using DomainError::DomainError;
};

class IterationLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace univalent
