#pragma once

#include <stdexcept>
#include <string>

namespace oscdx {

// Base for every library failure. Subclasses map onto CLI exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter is non-finite, out of range, or violates a type invariant.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// The fixed-step integrator would be unstable (or diverged) at the requested dt.
class StabilityError : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

// Zero variance or otherwise degenerate statistic.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

// Malformed input file. Messages carry row/column where known.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace oscdx
