#pragma once

#include <stdexcept>
#include <string>

namespace qfam {

// Base of every error raised by the library. `kind()` is a stable short name
// that the command line front-end prints alongside the message.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define QFAM_DEFINE_ERROR(Name, tag)                                   \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& what) : Error(tag, what) {}       \
  }

QFAM_DEFINE_ERROR(InvalidDimension, "invalid-dimension");
QFAM_DEFINE_ERROR(IncompatibleAlgebra, "incompatible-algebra");
QFAM_DEFINE_ERROR(InvalidMatrix, "invalid-matrix");
QFAM_DEFINE_ERROR(DegenerateState, "degenerate-state");
QFAM_DEFINE_ERROR(NotAHomomorphism, "not-a-homomorphism");
QFAM_DEFINE_ERROR(InvalidCharacter, "invalid-character");
QFAM_DEFINE_ERROR(ResourceLimit, "resource-limit");
QFAM_DEFINE_ERROR(InvalidSemigroup, "invalid-semigroup");
QFAM_DEFINE_ERROR(MissingComponent, "missing-component");
QFAM_DEFINE_ERROR(NotMagic, "not-magic");
QFAM_DEFINE_ERROR(PreconditionViolated, "precondition");
QFAM_DEFINE_ERROR(ParseError, "parse-error");

#undef QFAM_DEFINE_ERROR

}  // namespace qfam
