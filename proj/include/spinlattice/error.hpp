#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spinlattice {

enum class ErrorCode {
  DomainError,
  InvalidSector,
  DimensionMismatch,
  GraphMismatch,
  BiasUnsupported,
  NonzeroBias,
  ZeroHopping,
  NonSymmetric,
  NoCrossing,
  InconsistentFrequencies,
  SectorTooLarge,
  NonCommuting,
  EmptyBlock,
  InvalidArgument,
};

std::string_view error_name(ErrorCode code) noexcept;

// Every recoverable failure in the library is reported as an Error carrying
// one of the codes above. The CLI maps these to exit status 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spinlattice
