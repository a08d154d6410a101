#pragma once

#include <stdexcept>
#include <string>

namespace ofdrshape {

/// Base of every error raised by the library. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside an operation's domain (non-finite sample, zero radius, grid mismatch, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class InsufficientDataError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Least-squares design matrix without full column rank.
class RankDeficiencyError : public DomainError {
 public:
  using DomainError::DomainError;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ofdrshape
