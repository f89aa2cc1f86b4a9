#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mysticum {

enum class ErrorKind {
  ZeroVector,
  EqualPoints,
  EqualLines,
  NotCollinear,
  DegenerateConfiguration,
  SingularMap,
  DegenerateConic,
  NotOnConic,
  TangentLine,
  NotInterior,
  NotExterior,
  MeetInsideDisk,
  MeetOnCircle,
  NotConvex,
  DegenerateHexagon,
  ConcurrentDiagonals,
  DegenerateTangency,
  TangentEncounter,
  RepeatedVertex,
  DegenerateDiagonal,
  OnBoundary,
  NotConcurrent,
  InvalidSpec,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every precondition failure in the kernel is reported through this type;
/// callers branch on kind() rather than on the message.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mysticum
