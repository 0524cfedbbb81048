#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tomita {

// Base of all domain errors. kind() is the stable name the CLI prints and
// tests match on; what() carries the detail.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

#define TOMITA_DEFINE_ERROR(Name)                                    \
  class Name : public Error {                                        \
  public:                                                            \
    explicit Name(const std::string& msg) : Error(#Name, msg) {}     \
  }

TOMITA_DEFINE_ERROR(ShapeMismatch);
TOMITA_DEFINE_ERROR(SingularInput);
TOMITA_DEFINE_ERROR(IllConditioned);
TOMITA_DEFINE_ERROR(NotUnitary);
TOMITA_DEFINE_ERROR(NotPositiveDefinite);
TOMITA_DEFINE_ERROR(NotCyclicSeparating);
TOMITA_DEFINE_ERROR(FormulaMismatch);
TOMITA_DEFINE_ERROR(InvalidSpectralData);
TOMITA_DEFINE_ERROR(IndexOutOfHead);
TOMITA_DEFINE_ERROR(EqualMultiplicities);
TOMITA_DEFINE_ERROR(TypeIForbidden);
TOMITA_DEFINE_ERROR(EpsTooLarge);
TOMITA_DEFINE_ERROR(DimensionTooLarge);
TOMITA_DEFINE_ERROR(UnsupportedTarget);
TOMITA_DEFINE_ERROR(ParseError);
TOMITA_DEFINE_ERROR(InvalidArgument);

#undef TOMITA_DEFINE_ERROR

}  // namespace tomita
