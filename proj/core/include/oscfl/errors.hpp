#pragma once

#include <stdexcept>

namespace oscfl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid parameters or arguments outside an operation's domain.
struct DomainError : Error {
  using Error::Error;
};

/// A tolerance could not be met, or an internal magnitude guard tripped.
struct NumericError : Error {
  using Error::Error;
};

}  // namespace oscfl
