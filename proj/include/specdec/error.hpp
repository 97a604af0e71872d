#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace specdec {

enum class ErrorKind {
  kNotLatinSquare,
  kNonAssociative,
  kNoIdentityAtZero,
  kNoInverse,
  kInvalidPermutation,
  kOrderCapExceeded,
  kInvalidActionOrder,
  kUnsupportedParameter,
  kNotNormal,
  kInvalidMorphism,
  kInvalidRing,
  kNotAnIdeal,
  kInvalidArgument,
  kInputParseError,
  kClassifierInconsistency,
};

std::string_view error_kind_name(ErrorKind kind);

// All recoverable failures in the library are reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace specdec
