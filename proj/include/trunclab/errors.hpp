#pragma once

#include <stdexcept>
#include <string>

namespace trunclab {

/// Base class for all structured failures raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A relation failed one of the partial-order laws; names the law.
struct PosetError : Error {
  using Error::Error;
};

/// An element does not belong to the frame it was used with.
struct MembershipError : Error {
  using Error::Error;
};

/// A subset of a frame failed one of the filter laws; names the law.
struct FilterLawError : Error {
  using Error::Error;
};

/// A value was outside the mathematical domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

/// Two values belong to different carriers.
struct CarrierMismatch : Error {
  using Error::Error;
};

/// A construction would exceed its configured size bound.
struct SizeError : Error {
  using Error::Error;
};

/// Malformed input file; carries line/column context in the message.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace trunclab
