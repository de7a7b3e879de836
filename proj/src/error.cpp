#include "spinlattice/error.hpp"

namespace spinlattice {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::InvalidSector: return "InvalidSector";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::GraphMismatch: return "GraphMismatch";
    case ErrorCode::BiasUnsupported: return "BiasUnsupported";
    case ErrorCode::NonzeroBias: return "NonzeroBias";
    case ErrorCode::ZeroHopping: return "ZeroHopping";
    case ErrorCode::NonSymmetric: return "NonSymmetric";
    case ErrorCode::NoCrossing: return "NoCrossing";
    case ErrorCode::InconsistentFrequencies: return "InconsistentFrequencies";
    case ErrorCode::SectorTooLarge: return "SectorTooLarge";
    case ErrorCode::NonCommuting: return "NonCommuting";
    case ErrorCode::EmptyBlock: return "EmptyBlock";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace spinlattice
