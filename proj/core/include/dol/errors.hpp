#pragma once

#include <stdexcept>
#include <string>

namespace dol {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionTooSmall : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct DegreeTooLarge : Error { using Error::Error; };
struct NegativeStructureValue : Error { using Error::Error; };
struct ZeroStructureValue : Error { using Error::Error; };
struct NonPositiveParameter : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct StructureMismatch : Error { using Error::Error; };
struct EpsilonOutOfRange : Error { using Error::Error; };
struct NonCanonicalSpec : Error { using Error::Error; };
struct OutsideAdmissibleRegion : Error { using Error::Error; };
struct BracketFailure : Error { using Error::Error; };
struct InvalidArgument : Error { using Error::Error; };

}  // namespace dol
