#pragma once

#include <stdexcept>
#include <string>

namespace normkit {

/// Base class for all normkit errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid tensor shape (wrong rank, zero extent).
class ShapeError : public Error {
public:
  using Error::Error;
};

/// Multi-index coordinate outside its extent.
class IndexError : public Error {
public:
  using Error::Error;
};

/// Group policy cannot be applied (divisibility, non-positive counts).
class PolicyError : public Error {
public:
  using Error::Error;
};

/// API contract violation (mismatched shapes, wrong method for an op).
class ContractError : public Error {
public:
  using Error::Error;
};

/// Required state is missing (e.g. frozen BN without running statistics).
class StateError : public Error {
public:
  using Error::Error;
};

/// Non-finite value encountered during a numeric computation.
class NumericError : public Error {
public:
  using Error::Error;
};

/// Invalid configuration file, key, or CLI usage.
class ConfigError : public Error {
public:
  using Error::Error;
};

/// Layer chain is inconsistent (channel mismatch, misplaced layer).
class ArchitectureError : public Error {
public:
  using Error::Error;
};

/// Malformed or mismatched serialized data.
class IoError : public Error {
public:
  using Error::Error;
};

} // namespace normkit
