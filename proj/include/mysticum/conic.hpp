#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mysticum/projective.hpp"

namespace mysticum {

/// Non-degenerate conic x^T C x = 0 given by a symmetric matrix.
class Conic {
 public:
  explicit Conic(const Matrix3& m);

  /// x^2 + y^2 = w^2, the boundary of the Klein disk.
  static const Conic& unit_circle();

  const Matrix3& matrix() const { return m_; }

  /// Symmetric bilinear form u^T C v.
  Rat form(const Triple& u, const Triple& v) const { return dot(u, mul(m_, v)); }
  Rat form(const ProjPoint& p) const { return form(p.coords(), p.coords()); }

 private:
  Matrix3 m_;
  Matrix3 cofactor_;

  friend ProjPoint pole(const Conic& c, const ProjLine& l);
};

/// Position of a point relative to a conic, by the sign of p^T C p.
/// For the unit circle interior points give a negative value.
enum class Side { Interior, OnConic, Exterior };

Side classify(const Conic& c, const ProjPoint& p);
bool on_conic(const Conic& c, const ProjPoint& p);
ProjLine polar(const Conic& c, const ProjPoint& p);
ProjPoint pole(const Conic& c, const ProjLine& l);

/// Both characterizations of conjugacy. cross_ratio is present only when the
/// line pq meets the conic in two rational points.
struct ConjugacyCheck {
  bool incidence;
  std::optional<Rat> cross_ratio;
};

ConjugacyCheck conjugacy_detail(const Conic& c, const ProjPoint& p, const ProjPoint& q);

/// q lies on the polar of p; agrees with cross ratio -1 whenever the latter
/// is computable (checked, throws std::logic_error on disagreement).
bool conjugate(const Conic& c, const ProjPoint& p, const ProjPoint& q);

/// Second point of l on c, given one point a of l on c. Vieta extraction:
/// stays in the rationals.
ProjPoint second_intersection(const Conic& c, const ProjPoint& a, const ProjLine& l);

/// Collinear points have concurrent polars and conversely. Returns the
/// concurrency verdict; throws std::logic_error if the two sides disagree.
bool dual_check(const Conic& c, const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3);

/// Parameter of the rational parametrization t -> (1 - t^2, 2t, 1 + t^2) of
/// the unit circle; the infinite parameter maps to (-1, 0, 1).
class Param {
 public:
  Param(const Rat& t) : value_(t) {}  // NOLINT(google-explicit-constructor)
  Param(long t) : value_(Rat(t)) {}   // NOLINT(google-explicit-constructor)
  static Param infinity() { return Param(); }
  static Param parse(std::string_view text);

  bool is_infinite() const { return !value_.has_value(); }
  const Rat& value() const { return *value_; }

  /// Parameters of points rotated by the sum of the two angles.
  static Param angle_sum(const Param& a, const Param& b);
  Param angle_negated() const;

  std::string str() const { return value_ ? value_->str() : "inf"; }

  friend bool operator==(const Param&, const Param&) = default;
  /// Order along the circle starting just after (-1, 0): finite t increasing, then infinity.
  friend bool operator<(const Param& a, const Param& b);

 private:
  Param() = default;
  std::optional<Rat> value_;
};

/// A point of the unit circle.
class IdealPoint {
 public:
  explicit IdealPoint(const ProjPoint& p);  // throws NotOnConic
  static IdealPoint from_param(const Param& t);

  const ProjPoint& point() const { return point_; }
  /// Inverse of the parametrization, always defined: t = y / (x + w).
  Param param() const;

  friend bool operator==(const IdealPoint&, const IdealPoint&) = default;

 private:
  ProjPoint point_;
};

IdealPoint param_point(const Param& t);
IdealPoint second_intersection(const IdealPoint& a, const ProjLine& l);

/// True iff the sequence visits the circle in strictly monotone cyclic order
/// (either orientation). Requires pairwise distinct points.
bool in_convex_position(const std::vector<IdealPoint>& cyclic);

/// A hyperbolic line of the Klein model: its exact carrier line, plus exact
/// ideal endpoints when they happen to be rational.
class Chord {
 public:
  Chord(const IdealPoint& a, const IdealPoint& b);  // throws EqualPoints
  /// Throws NotInterior when the line misses the open disk.
  static Chord from_line(const ProjLine& line);

  const ProjLine& line() const { return line_; }
  const std::optional<std::pair<IdealPoint, IdealPoint>>& endpoints() const { return endpoints_; }

  /// Euclidean endpoints in the affine chart, for rendering.
  std::array<std::array<double, 2>, 2> numeric_endpoints() const;

 private:
  explicit Chord(const ProjLine& line);

  ProjLine line_;
  std::optional<std::pair<IdealPoint, IdealPoint>> endpoints_;
};

}  // namespace mysticum
