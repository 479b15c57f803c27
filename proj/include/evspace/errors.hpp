#pragma once

#include <stdexcept>
#include <string>

namespace evspace {

// Base for every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input (parse failures, probabilities outside
// [0,1], arity mismatches).
class InputError : public Error {
 public:
  using Error::Error;
};

// Conditioning on an event of zero measure.
class ZeroMeasureError : public Error {
 public:
  using Error::Error;
};

// Bayes inversion produced a value above 1.
class IncoherentInputs : public Error {
 public:
  IncoherentInputs() : Error("incoherent-inputs") {}
  explicit IncoherentInputs(const std::string& what) : Error(what) {}
};

// A triple that admits no Hilbert-space realization.
class NotRepresentable : public Error {
 public:
  using Error::Error;
};

// Problem size above the configured cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace evspace
