#pragma once

#include <stdexcept>
#include <string>

namespace polshare {

/// Input outside the mathematical domain of an operation (p > n, sigma > 1, k = 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A constructed state violates a physical constraint (negative eigenvalue,
/// broken trace).
class ValidityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The dense reference path refuses inputs it cannot hold in memory.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A closed form was asked for outside the range where it holds.
/// Concentration (k < p) has to go through the spectral path.
class UseSpectralPathError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Something that the mathematics says cannot happen did happen.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace polshare
