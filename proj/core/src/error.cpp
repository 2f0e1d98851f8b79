#include "premet/error.hpp"

namespace premet {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::ElementNotInLattice: return "ElementNotInLattice";
    case ErrorKind::NotValueDistributive: return "NotValueDistributive";
    case ErrorKind::IdNotInGround: return "IdNotInGround";
    case ErrorKind::GroundMismatch: return "GroundMismatch";
    case ErrorKind::GroundTooLarge: return "GroundTooLarge";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::PointNotInSpace: return "PointNotInSpace";
    case ErrorKind::InvalidSpace: return "InvalidSpace";
    case ErrorKind::NotATopology: return "NotATopology";
    case ErrorKind::EpsNotPositive: return "EpsNotPositive";
    case ErrorKind::NTooLarge: return "NTooLarge";
    case ErrorKind::PointNotInImage: return "PointNotInImage";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::ProbeTooLarge: return "ProbeTooLarge";
    case ErrorKind::InvalidMap: return "InvalidMap";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace premet
