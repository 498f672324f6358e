#pragma once

#include <stdexcept>
#include <string>

namespace dyadic {

// Base of everything thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caused by inputs that violate a documented precondition. The CLI maps these
// to exit code 2.
struct InputError : Error {
  using Error::Error;
};

// A violated internal invariant (for example the two alpha computations
// disagreeing). Never caused by user input; the CLI maps these to exit code 1.
struct InternalFault : Error {
  using Error::Error;
};

struct PrecisionLoss : InputError {
  PrecisionLoss() : InputError("insufficient precision to decide") {}
  explicit PrecisionLoss(const std::string& what) : InputError(what) {}
};

struct DivisionByZero : InputError {
  DivisionByZero() : InputError("division by zero") {}
};

struct NonEisenstein : InputError {
  explicit NonEisenstein(const std::string& what) : InputError(what) {}
};

struct ReducibleUnramifiedPoly : InputError {
  explicit ReducibleUnramifiedPoly(const std::string& what) : InputError(what) {}
};

struct DefectOutOfRange : InputError {
  explicit DefectOutOfRange(const std::string& what) : InputError(what) {}
};

struct SharpUndefined : InputError {
  explicit SharpUndefined(const std::string& what) : InputError(what) {}
};

struct NotAGoodBong : InputError {
  int index;  // 1-based position of the failing entry or junction
  NotAGoodBong(int idx, const std::string& what)
      : InputError("not a good BONG at index " + std::to_string(idx) + ": " + what),
        index(idx) {}
};

struct RankError : InputError {
  explicit RankError(const std::string& what) : InputError(what) {}
};

struct NotIntegral : InputError {
  explicit NotIntegral(const std::string& what) : InputError(what) {}
};

struct ParityMismatch : InputError {
  explicit ParityMismatch(const std::string& what) : InputError(what) {}
};

struct UndefinedSpace : InputError {
  explicit UndefinedSpace(const std::string& what) : InputError(what) {}
};

struct BadParams : InputError {
  explicit BadParams(const std::string& what) : InputError(what) {}
};

struct IndexError : InputError {
  explicit IndexError(const std::string& what) : InputError(what) {}
};

}  // namespace dyadic
