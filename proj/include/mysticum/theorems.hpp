#pragma once

#include <array>
#include <span>
#include <vector>

#include "mysticum/klein.hpp"
#include "mysticum/report.hpp"

namespace mysticum {

/// Cyclic sequence of n >= 3 pairwise distinct points of the unit circle.
class IdealPolygon {
 public:
  explicit IdealPolygon(std::vector<IdealPoint> vertices);  // throws RepeatedVertex
  static IdealPolygon from_params(std::span<const Param> params);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<IdealPoint>& vertices() const { return vertices_; }
  /// Cyclic indexing.
  const IdealPoint& operator[](std::size_t i) const { return vertices_[i % vertices_.size()]; }
  /// Line through vertices i and i + 1.
  ProjLine side(std::size_t i) const;
  bool convex() const { return convex_; }

  std::vector<Param> params() const;
  std::vector<std::string> param_strings() const;

 private:
  std::vector<IdealPoint> vertices_;
  bool convex_;
};

/// Vertex labels: A..Z for up to 26 vertices, A1..An otherwise.
std::string vertex_label(std::size_t i, std::size_t n);

struct PascalPoints {
  ProjPoint x, y, z;
  std::optional<ProjLine> line;  // absent only if X = Y = Z
};

/// X = AB.DE, Y = BC.EF, Z = CD.FA. Throws DegenerateHexagon.
PascalPoints pascal_points(const IdealPolygon& hex);

VerificationReport verify_pascal(const IdealPolygon& hex);
/// Checks distinctness first (DegenerateHexagon on repeats).
VerificationReport verify_pascal(std::span<const IdealPoint> vertices);

VerificationReport verify_prop2(const IdealPolygon& hex);

VerificationReport verify_quadrilateral_lemma(const IdealPoint& a, const IdealPoint& b, const IdealPoint& d,
                                              const IdealPoint& e);

VerificationReport verify_bisector_concurrency(const IdealPolygon& hex, double epsilon = kDefaultEpsilon);

/// Hexagon circumscribed about the circle by the tangents at six ideal points.
VerificationReport verify_brianchon(std::span<const IdealPoint> tangency_points);

struct PascalLineEntry {
  std::array<int, 6> ordering;
  std::string label;  // e.g. "ACBDEF" in terms of the input order A..F
  ProjLine line;
  Rat witness;
};

/// The 60 hexagons on six points (orderings modulo rotation and reversal)
/// and their Pascal lines. Repeated lines are kept.
std::vector<PascalLineEntry> enumerate_pascal_lines(std::span<const IdealPoint> six_points);

}  // namespace mysticum
