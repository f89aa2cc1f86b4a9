#pragma once

#include <array>
#include <string>

#include "mysticum/rational.hpp"

namespace mysticum {

using Triple = std::array<Rat, 3>;
using Matrix3 = std::array<Triple, 3>;

Triple cross(const Triple& u, const Triple& v);
Rat dot(const Triple& u, const Triple& v);
Rat det3(const Triple& r0, const Triple& r1, const Triple& r2);
bool is_zero(const Triple& v);

/// Sign convention applied when scaling a triple to coprime integers.
enum class SignConvention {
  LastNonzeroPositive,   // points: affine points end up with w > 0
  FirstNonzeroPositive,  // lines
};

/// Scales v to coprime integers with the given sign convention. Idempotent.
Triple canonicalize(const Triple& v, SignConvention convention);

/// Homogeneous point (x : y : w), stored in canonical integer form.
class ProjPoint {
 public:
  ProjPoint(const Rat& x, const Rat& y, const Rat& w);
  explicit ProjPoint(const Triple& coords);
  static ProjPoint affine(const Rat& x, const Rat& y) { return ProjPoint(x, y, Rat(1)); }

  const Triple& coords() const { return coords_; }
  const Rat& x() const { return coords_[0]; }
  const Rat& y() const { return coords_[1]; }
  const Rat& w() const { return coords_[2]; }

  bool at_infinity() const { return w().is_zero(); }
  Rat affine_x() const;
  Rat affine_y() const;

  std::string str() const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  Triple coords_;
};

/// Homogeneous line a*x + b*y + c*w = 0, stored in canonical integer form.
class ProjLine {
 public:
  ProjLine(const Rat& a, const Rat& b, const Rat& c);
  explicit ProjLine(const Triple& coeffs);

  static ProjLine at_infinity() { return ProjLine(0, 0, 1); }

  const Triple& coeffs() const { return coeffs_; }

  /// Value of the linear form on the canonical representative of p.
  Rat evaluate(const ProjPoint& p) const { return dot(coeffs_, p.coords()); }
  bool contains(const ProjPoint& p) const { return evaluate(p).is_zero(); }

  std::string str() const;

  friend bool operator==(const ProjLine&, const ProjLine&) = default;

 private:
  Triple coeffs_;
};

/// Result of an exact incidence predicate together with its certificate.
struct IncidenceTest {
  bool holds;
  Rat witness;
};

ProjLine join(const ProjPoint& p, const ProjPoint& q);
ProjPoint meet(const ProjLine& l, const ProjLine& m);
IncidenceTest collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);
IncidenceTest concurrent(const ProjLine& l, const ProjLine& m, const ProjLine& n);

/// Signed bracket (BP/BQ)*(AQ/AP) of four collinear points. Computed from
/// 2x2 minors of the homogeneous coordinates, so points at infinity are legal.
Rat cross_ratio(const ProjPoint& a, const ProjPoint& b, const ProjPoint& p, const ProjPoint& q);

/// Sum of squares of cross(p, q); zero iff p and q coincide. Used as an exact
/// witness for point equality inside certificates.
Rat coincidence_defect(const ProjPoint& p, const ProjPoint& q);

/// Invertible 3x3 matrix acting on points by M*p and on lines by M^{-T}*l.
class ProjMap {
 public:
  explicit ProjMap(const Matrix3& m);
  static ProjMap identity();

  const Matrix3& matrix() const { return m_; }
  const Rat& determinant() const { return det_; }

  ProjPoint apply(const ProjPoint& p) const;
  ProjLine apply(const ProjLine& l) const;

  ProjMap compose(const ProjMap& inner) const;  // this * inner
  ProjMap transpose() const;

  /// Equality up to a nonzero scalar factor.
  bool proportional_to(const ProjMap& other) const;

  friend bool operator==(const ProjMap&, const ProjMap&) = default;

 private:
  Matrix3 m_;
  Matrix3 cofactor_;  // cofactor(M) = det(M) * M^{-T}
  Rat det_;
};

Triple mul(const Matrix3& m, const Triple& v);
Matrix3 mul(const Matrix3& a, const Matrix3& b);
Matrix3 transpose(const Matrix3& m);
Matrix3 cofactor(const Matrix3& m);
Rat determinant(const Matrix3& m);

}  // namespace mysticum
