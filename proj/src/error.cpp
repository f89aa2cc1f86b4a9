#include "mysticum/error.hpp"

namespace mysticum {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::EqualPoints: return "EqualPoints";
    case ErrorKind::EqualLines: return "EqualLines";
    case ErrorKind::NotCollinear: return "NotCollinear";
    case ErrorKind::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorKind::SingularMap: return "SingularMap";
    case ErrorKind::DegenerateConic: return "DegenerateConic";
    case ErrorKind::NotOnConic: return "NotOnConic";
    case ErrorKind::TangentLine: return "TangentLine";
    case ErrorKind::NotInterior: return "NotInterior";
    case ErrorKind::NotExterior: return "NotExterior";
    case ErrorKind::MeetInsideDisk: return "MeetInsideDisk";
    case ErrorKind::MeetOnCircle: return "MeetOnCircle";
    case ErrorKind::NotConvex: return "NotConvex";
    case ErrorKind::DegenerateHexagon: return "DegenerateHexagon";
    case ErrorKind::ConcurrentDiagonals: return "ConcurrentDiagonals";
    case ErrorKind::DegenerateTangency: return "DegenerateTangency";
    case ErrorKind::TangentEncounter: return "TangentEncounter";
    case ErrorKind::RepeatedVertex: return "RepeatedVertex";
    case ErrorKind::DegenerateDiagonal: return "DegenerateDiagonal";
    case ErrorKind::OnBoundary: return "OnBoundary";
    case ErrorKind::NotConcurrent: return "NotConcurrent";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace mysticum
