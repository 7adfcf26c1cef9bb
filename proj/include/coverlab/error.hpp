#pragma once

#include <stdexcept>
#include <string>

namespace coverlab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unknown labels, loops, parameters outside a family's range.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed the configured size guards.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Fiber-cone operations require a quasi-equigenerated ideal.
class NotQuasiEquigenerated : public Error {
 public:
  NotQuasiEquigenerated()
      : Error("ideal is not quasi-equigenerated; fiber cone is not the monomial subalgebra") {}
};

}  // namespace coverlab
