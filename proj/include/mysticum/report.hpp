#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mysticum/projective.hpp"

namespace mysticum {

enum class Role { Vertex, Constructed, Side, Diagonal, Perpendicular, Certificate };

struct NamedPoint {
  std::string label;
  ProjPoint point;
  Role role = Role::Constructed;
};

struct NamedLine {
  std::string label;
  ProjLine line;
  Role role = Role::Constructed;
};

/// Approximate check attached to a report (distances are irrational).
struct NumericCheck {
  std::string name;
  double value;      // observed spread
  double tolerance;
  bool ok() const { return value < tolerance; }
};

/// Certificate for one verified instance. Exact witnesses must all be zero
/// for the statement to hold; numeric checks, if any, must be within tolerance.
struct VerificationReport {
  std::string theorem;
  std::vector<std::string> params;
  std::vector<NamedPoint> points;
  std::vector<NamedLine> lines;
  std::vector<Rat> witnesses;
  std::vector<NumericCheck> numeric;
  std::vector<int> signs;
  bool pass = false;

  /// Recomputes pass from witnesses and numeric checks.
  void finalize();

  const NamedPoint* find_point(std::string_view label) const;
  const NamedLine* find_line(std::string_view label) const;
};

}  // namespace mysticum
