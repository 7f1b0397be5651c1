#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace closc {

// Base class for all domain errors. Carries a stable machine-readable code
// alongside the human-readable message, so front ends can map errors to
// structured output without string matching.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define CLOSC_DEFINE_ERROR(Name)                                 \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& message)                    \
        : Error(#Name, message) {}                               \
  }

CLOSC_DEFINE_ERROR(ConjugacyViolation);
CLOSC_DEFINE_ERROR(NonRealAlpha);
CLOSC_DEFINE_ERROR(RepresentationMissing);
CLOSC_DEFINE_ERROR(GammaPole);
CLOSC_DEFINE_ERROR(DimensionTooSmall);
CLOSC_DEFINE_ERROR(UnsupportedLambda);
CLOSC_DEFINE_ERROR(EtaOutOfRange);
CLOSC_DEFINE_ERROR(DegenerateSpectrum);
CLOSC_DEFINE_ERROR(InvalidSpec);

#undef CLOSC_DEFINE_ERROR

}  // namespace closc
