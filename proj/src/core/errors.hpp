#pragma once

#include <stdexcept>
#include <string>

namespace critgrp {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (JSON, number strings, word strings, ...).
struct ParseError : Error {
  using Error::Error;
};

/// A precondition on an operation's arguments was violated.
struct InvalidArgument : Error {
  using Error::Error;
};

/// An invariant that is guaranteed by theory failed to hold at run time.
/// Seeing one of these means either corrupt input data or a bug.
struct IntegrityError : Error {
  using Error::Error;
};

}  // namespace critgrp
