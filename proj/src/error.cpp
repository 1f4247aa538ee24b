#include "infoagree/error.hpp"

namespace infoagree {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::NegativeCell: return "NegativeCell";
    case ErrorKind::AllZero: return "AllZero";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ZeroProbability: return "ZeroProbability";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::InconsistentTotal: return "InconsistentTotal";
    case ErrorKind::InconsistentMarginal: return "InconsistentMarginal";
    case ErrorKind::ContainsZero: return "ContainsZero";
    case ErrorKind::NonPositiveEpsilon: return "NonPositiveEpsilon";
    case ErrorKind::EmptySweep: return "EmptySweep";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Io: return "Io";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace infoagree
