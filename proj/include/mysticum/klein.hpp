#pragma once

#include "mysticum/conic.hpp"

namespace mysticum {

/// Absolute tolerance used for every comparison of (irrational) distances.
inline constexpr double kDefaultEpsilon = 1e-12;

/// A point of the open unit disk.
class HPoint {
 public:
  explicit HPoint(const ProjPoint& p);  // throws NotInterior
  static HPoint affine(const Rat& x, const Rat& y) { return HPoint(ProjPoint::affine(x, y)); }

  const ProjPoint& point() const { return point_; }

  friend bool operator==(const HPoint&, const HPoint&) = default;

 private:
  ProjPoint point_;
};

/// Hilbert distance 1/2 log (BP/BQ * AQ/AP), A and B the ideal endpoints of PQ.
///
/// The endpoints are the roots of F(P,P) + 2 r F(P,Q) + r^2 F(Q,Q) = 0 on the
/// pencil P + r Q, where F is the circle's bilinear form. In those pencil
/// coordinates the bracket equals r_B / r_A, which after clearing the
/// conjugate radical is (|F(P,Q)| + sqrt(D))^2 / (F(P,P) F(Q,Q)) with
/// D = F(P,Q)^2 - F(P,P) F(Q,Q). Everything up to D / (F(P,P) F(Q,Q)) is
/// exact; the only rounding is in one conversion, a sqrt and an asinh.
double hilbert_distance(const HPoint& p, const HPoint& q);

/// The bracket itself, exp(2 d(P, Q)).
double hilbert_bracket(const HPoint& p, const HPoint& q);

/// Pole of l lies on m. Symmetric; the symmetry is asserted.
bool is_orthogonal(const Chord& l, const Chord& m);

/// Polar of the meet of two chords that do not meet in the closed disk.
Chord common_perpendicular(const Chord& l, const Chord& m);

/// Harmonic homology with axis l and center pole(l).
struct Reflection {
  Chord axis;
  ProjMap map;
};

Reflection reflection_across_chord(const Chord& l);

/// Common perpendicular of AB and DE for A, B, D, E in convex cyclic order;
/// it bisects the angle between the diagonals AD and BE.
Chord bisector_of_ideal_quadrilateral(const IdealPoint& a, const IdealPoint& b, const IdealPoint& d,
                                      const IdealPoint& e);

/// Foot of the perpendicular from p to l: meet of l with join(p, pole(l)).
ProjPoint perpendicular_foot(const HPoint& p, const Chord& l);
double point_to_chord_distance(const HPoint& p, const Chord& l);

}  // namespace mysticum
