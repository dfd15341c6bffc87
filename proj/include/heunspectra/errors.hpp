#pragma once

#include <stdexcept>
#include <string>

namespace heunspectra {

// Base for all library failures. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HEUNSPECTRA_ERROR(Name)                  \
  class Name : public Error {                    \
   public:                                       \
    explicit Name(const std::string& what)       \
        : Error(std::string(#Name ": ") + what) {} \
  };

HEUNSPECTRA_ERROR(InvalidParams)
HEUNSPECTRA_ERROR(MismatchedRadicand)
HEUNSPECTRA_ERROR(DivisionByZero)
HEUNSPECTRA_ERROR(LengthMismatch)
HEUNSPECTRA_ERROR(ZeroDivisor)
HEUNSPECTRA_ERROR(NonPolynomialQuotient)
HEUNSPECTRA_ERROR(ConvergenceFailure)
HEUNSPECTRA_ERROR(NoSignChange)
HEUNSPECTRA_ERROR(DimensionTooSmall)
HEUNSPECTRA_ERROR(DegreeTooSmall)
HEUNSPECTRA_ERROR(ExcludedRepresentation)
HEUNSPECTRA_ERROR(DegenerateRecurrence)
HEUNSPECTRA_ERROR(IndexOutOfRange)
HEUNSPECTRA_ERROR(PoleEvaluation)
HEUNSPECTRA_ERROR(NonzeroRemainder)
HEUNSPECTRA_ERROR(ConstraintViolated)
HEUNSPECTRA_ERROR(NegativeRadicand)
HEUNSPECTRA_ERROR(NonIntegerLevel)
HEUNSPECTRA_ERROR(ConstraintRootLost)
HEUNSPECTRA_ERROR(DivergentLimit)
HEUNSPECTRA_ERROR(InvalidBox)

#undef HEUNSPECTRA_ERROR

}  // namespace heunspectra
