#include "specdec/error.hpp"

namespace specdec {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotLatinSquare: return "NotLatinSquare";
    case ErrorKind::kNonAssociative: return "NonAssociative";
    case ErrorKind::kNoIdentityAtZero: return "NoIdentityAtZero";
    case ErrorKind::kNoInverse: return "NoInverse";
    case ErrorKind::kInvalidPermutation: return "InvalidPermutation";
    case ErrorKind::kOrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::kInvalidActionOrder: return "InvalidActionOrder";
    case ErrorKind::kUnsupportedParameter: return "UnsupportedParameter";
    case ErrorKind::kNotNormal: return "NotNormal";
    case ErrorKind::kInvalidMorphism: return "InvalidMorphism";
    case ErrorKind::kInvalidRing: return "InvalidRing";
    case ErrorKind::kNotAnIdeal: return "NotAnIdeal";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kInputParseError: return "InputParseError";
    case ErrorKind::kClassifierInconsistency: return "ClassifierInconsistency";
  }
  return "Unknown";
}

}  // namespace specdec
