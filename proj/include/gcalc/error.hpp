#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcalc {

// Base of every error raised by the library. Input errors (bad manifests,
// malformed expressions, invalid arguments) and numerical domain errors both
// derive from it so that front ends can map them to a single exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

#define GCALC_DEFINE_ERROR(Name) \
  class Name : public Error {    \
   public:                       \
    using Error::Error;          \
  }

GCALC_DEFINE_ERROR(UnknownIdentifier);
GCALC_DEFINE_ERROR(DomainError);
GCALC_DEFINE_ERROR(DimMismatch);
GCALC_DEFINE_ERROR(SingularGram);
GCALC_DEFINE_ERROR(SingularFrame);
GCALC_DEFINE_ERROR(InvalidContorsion);
GCALC_DEFINE_ERROR(FrameMismatch);
GCALC_DEFINE_ERROR(JetBudgetExhausted);
GCALC_DEFINE_ERROR(GradeMismatch);
GCALC_DEFINE_ERROR(SignatureMismatch);
GCALC_DEFINE_ERROR(NonScalarOutput);
GCALC_DEFINE_ERROR(SlotGradeError);
GCALC_DEFINE_ERROR(MixedGrade);
GCALC_DEFINE_ERROR(ManifestError);

#undef GCALC_DEFINE_ERROR

}  // namespace gcalc
