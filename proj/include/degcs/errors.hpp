#pragma once

#include <stdexcept>
#include <string>

namespace degcs {

/// Base for every error raised by the library. `kind()` is a stable short tag
/// (e.g. "ZeroDegeneracy") used by the CLI when reporting per-row failures.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define DEGCS_DEFINE_ERROR(Name)                                          \
  class Name : public Error {                                             \
   public:                                                                \
    explicit Name(const std::string& what) : Error(#Name, what) {}        \
  }

// spectrum
DEGCS_DEFINE_ERROR(MalformedLine);
DEGCS_DEFINE_ERROR(NonIncreasingEnergy);
DEGCS_DEFINE_ERROR(ZeroDegeneracy);
DEGCS_DEFINE_ERROR(EmptySpectrum);

// state
DEGCS_DEFINE_ERROR(TruncationNotConverged);
DEGCS_DEFINE_ERROR(NonFiniteInput);
DEGCS_DEFINE_ERROR(SpectrumTooShort);

// phase
DEGCS_DEFINE_ERROR(DegenerateCommutator);

// cli
DEGCS_DEFINE_ERROR(UnknownPreset);
DEGCS_DEFINE_ERROR(UnknownObservable);
DEGCS_DEFINE_ERROR(IoError);

#undef DEGCS_DEFINE_ERROR

}  // namespace degcs
