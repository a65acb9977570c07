/// @file errors.hpp
/// @brief Exception types raised by the library.
///
/// Every failure mode named by an operation has its own type so callers (and
/// tests) can dispatch on it. All of them derive from strateuler::Error.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace strateuler {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define STRATEULER_ERROR(Name)                      \
  class Name : public Error {                       \
   public:                                          \
    explicit Name(const std::string& what)          \
        : Error(std::string(#Name ": ") + what) {}  \
  }

// simplicial / euler_calculus
STRATEULER_ERROR(FaceClosureViolation);
STRATEULER_ERROR(MemberNotInHost);
STRATEULER_ERROR(NotASubcomplex);
STRATEULER_ERROR(HostMismatch);
STRATEULER_ERROR(InvalidMap);
STRATEULER_ERROR(DimensionCapExceeded);

// strata / obstruction
STRATEULER_ERROR(InvalidCensus);
STRATEULER_ERROR(MissingLinkEntry);
STRATEULER_ERROR(UnknownStratum);
STRATEULER_ERROR(NotEquidimensional);
STRATEULER_ERROR(NotAPointStratum);
STRATEULER_ERROR(NotUnitriangular);
STRATEULER_ERROR(IntegerOverflow);

// fibered / polar
STRATEULER_ERROR(UnknownValueLabel);
STRATEULER_ERROR(UnknownCriticalPoint);
STRATEULER_ERROR(PointNotInClosure);
STRATEULER_ERROR(NotSolvable);
STRATEULER_ERROR(MissingPolarData);
STRATEULER_ERROR(UnknownIdentity);

// catalog / io
STRATEULER_ERROR(UnknownEntry);

#undef STRATEULER_ERROR

/// Raised when a computation needs census fields that are absent or blank.
/// `fields` lists the field paths, e.g. "fiber_chi/V2/generic".
class InsufficientData : public Error {
 public:
  explicit InsufficientData(std::vector<std::string> fields);
  const std::vector<std::string>& fields() const noexcept { return fields_; }

 private:
  std::vector<std::string> fields_;
};

/// Schema violation found while loading JSON. `path` is a JSON pointer.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& message);
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace strateuler
