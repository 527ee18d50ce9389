#pragma once

#include <stdexcept>
#include <string>

namespace tfloc {

// Base for every error raised by the library. The CLI maps all of these to
// exit status 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : Error {
  using Error::Error;
};

struct InputError : Error {
  using Error::Error;
};

// A requested range reaches past the nodes a scheme actually stores.
struct ExtentError : Error {
  using Error::Error;
};

struct ResolutionError : Error {
  using Error::Error;
};

struct UnsupportedOrder : Error {
  using Error::Error;
};

struct DegenerateInput : Error {
  using Error::Error;
};

// Fitted decay rate came out non-positive.
struct DecayViolation : Error {
  using Error::Error;
};

}  // namespace tfloc
