#pragma once

#include <stdexcept>
#include <string>

namespace wreath {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed portrait or signature text.
class ParseError : public Error {
public:
  using Error::Error;
};

/// An operation was called outside its domain: signature mismatch,
/// non-binary signature where one is required, depth out of range,
/// element outside the required subgroup.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// An enumeration or scan would exceed a configured size cap.
class CapExceeded : public Error {
public:
  using Error::Error;
};

/// A constructed witness failed its mandatory re-verification.
/// Signals an internal convention bug, never expected in normal use.
class VerificationError : public Error {
public:
  using Error::Error;
};

}  // namespace wreath
