#include "mysticum/projective.hpp"

#include <optional>

#include "mysticum/error.hpp"

namespace mysticum {

Triple cross(const Triple& u, const Triple& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

Rat dot(const Triple& u, const Triple& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

Rat det3(const Triple& r0, const Triple& r1, const Triple& r2) { return dot(r0, cross(r1, r2)); }

bool is_zero(const Triple& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

Triple canonicalize(const Triple& v, SignConvention convention) {
  if (is_zero(v)) throw GeometryError(ErrorKind::ZeroVector, "all homogeneous coordinates are zero");
  BigInt l = 1;
  for (const auto& c : v) l = lcm(l, c.den());
  std::array<BigInt, 3> ints;
  BigInt g = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    ints[i] = v[i].num() * (l / v[i].den());
    g = gcd(g, ints[i]);
  }
  int sign = 0;
  if (convention == SignConvention::LastNonzeroPositive) {
    for (std::size_t i = 3; i-- > 0 && sign == 0;) sign = sgn(ints[i]);
  } else {
    for (std::size_t i = 0; i < 3 && sign == 0; ++i) sign = sgn(ints[i]);
  }
  if (sign < 0) g = -g;
  return {Rat(BigInt(ints[0] / g)), Rat(BigInt(ints[1] / g)), Rat(BigInt(ints[2] / g))};
}

namespace {

std::string triple_str(const Triple& t) {
  return "(" + t[0].str() + ", " + t[1].str() + ", " + t[2].str() + ")";
}

}  // namespace

ProjPoint::ProjPoint(const Rat& x, const Rat& y, const Rat& w) : ProjPoint(Triple{x, y, w}) {}

ProjPoint::ProjPoint(const Triple& coords)
    : coords_(canonicalize(coords, SignConvention::LastNonzeroPositive)) {}

Rat ProjPoint::affine_x() const {
  if (at_infinity()) throw GeometryError(ErrorKind::DegenerateConfiguration, "point at infinity has no affine x");
  return x() / w();
}

Rat ProjPoint::affine_y() const {
  if (at_infinity()) throw GeometryError(ErrorKind::DegenerateConfiguration, "point at infinity has no affine y");
  return y() / w();
}

std::string ProjPoint::str() const { return triple_str(coords_); }

ProjLine::ProjLine(const Rat& a, const Rat& b, const Rat& c) : ProjLine(Triple{a, b, c}) {}

ProjLine::ProjLine(const Triple& coeffs)
    : coeffs_(canonicalize(coeffs, SignConvention::FirstNonzeroPositive)) {}

std::string ProjLine::str() const { return triple_str(coeffs_); }

ProjLine join(const ProjPoint& p, const ProjPoint& q) {
  const Triple l = cross(p.coords(), q.coords());
  if (is_zero(l)) throw GeometryError(ErrorKind::EqualPoints, "join of " + p.str() + " with itself");
  return ProjLine(l);
}

ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  const Triple p = cross(l.coeffs(), m.coeffs());
  if (is_zero(p)) throw GeometryError(ErrorKind::EqualLines, "meet of " + l.str() + " with itself");
  return ProjPoint(p);
}

IncidenceTest collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  Rat d = det3(p.coords(), q.coords(), r.coords());
  const bool holds = d.is_zero();
  return {holds, std::move(d)};
}

IncidenceTest concurrent(const ProjLine& l, const ProjLine& m, const ProjLine& n) {
  Rat d = det3(l.coeffs(), m.coeffs(), n.coeffs());
  const bool holds = d.is_zero();
  return {holds, std::move(d)};
}

Rat cross_ratio(const ProjPoint& a, const ProjPoint& b, const ProjPoint& p, const ProjPoint& q) {
  const ProjPoint* pts[] = {&a, &b, &p, &q};
  // Carrier line from the first pair of distinct arguments.
  std::optional<ProjLine> line;
  for (int i = 0; i < 4 && !line; ++i)
    for (int j = i + 1; j < 4 && !line; ++j)
      if (*pts[i] != *pts[j]) line = join(*pts[i], *pts[j]);
  if (!line) throw GeometryError(ErrorKind::DegenerateConfiguration, "cross ratio of four equal points");
  for (const auto* pt : pts)
    if (!line->contains(*pt)) throw GeometryError(ErrorKind::NotCollinear, "cross ratio arguments are not collinear");
  if (a == b) throw GeometryError(ErrorKind::DegenerateConfiguration, "cross ratio needs distinct reference points");

  // Drop a coordinate the line depends on; the remaining two coordinates
  // parametrize the line injectively.
  std::size_t drop = 0;
  while (line->coeffs()[drop].is_zero()) ++drop;
  const std::size_t i0 = drop == 0 ? 1 : 0;
  const std::size_t i1 = drop == 2 ? 1 : 2;
  auto bracket = [&](const ProjPoint& u, const ProjPoint& v) {
    return u.coords()[i0] * v.coords()[i1] - u.coords()[i1] * v.coords()[i0];
  };
  const Rat bq = bracket(b, q);
  const Rat ap = bracket(a, p);
  if (bq.is_zero() || ap.is_zero())
    throw GeometryError(ErrorKind::DegenerateConfiguration, "cross ratio undefined: a zero signed length in the denominator");
  return (bracket(b, p) * bracket(a, q)) / (bq * ap);
}

Rat coincidence_defect(const ProjPoint& p, const ProjPoint& q) {
  const Triple c = cross(p.coords(), q.coords());
  return dot(c, c);
}

Triple mul(const Matrix3& m, const Triple& v) { return {dot(m[0], v), dot(m[1], v), dot(m[2], v)}; }

Matrix3 transpose(const Matrix3& m) {
  Matrix3 t;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t[i][j] = m[j][i];
  return t;
}

Matrix3 mul(const Matrix3& a, const Matrix3& b) {
  const Matrix3 bt = transpose(b);
  Matrix3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r[i][j] = dot(a[i], bt[j]);
  return r;
}

Matrix3 cofactor(const Matrix3& m) {
  // Row i of the cofactor matrix is the cross product of the other two rows.
  return {cross(m[1], m[2]), cross(m[2], m[0]), cross(m[0], m[1])};
}

Rat determinant(const Matrix3& m) { return det3(m[0], m[1], m[2]); }

ProjMap::ProjMap(const Matrix3& m) : m_(m), cofactor_(cofactor(m)), det_(mysticum::determinant(m)) {
  if (det_.is_zero()) throw GeometryError(ErrorKind::SingularMap, "projective map with zero determinant");
}

ProjMap ProjMap::identity() { return ProjMap(Matrix3{Triple{1, 0, 0}, Triple{0, 1, 0}, Triple{0, 0, 1}}); }

ProjPoint ProjMap::apply(const ProjPoint& p) const { return ProjPoint(mul(m_, p.coords())); }

ProjLine ProjMap::apply(const ProjLine& l) const { return ProjLine(mul(cofactor_, l.coeffs())); }

ProjMap ProjMap::compose(const ProjMap& inner) const { return ProjMap(mul(m_, inner.m_)); }

ProjMap ProjMap::transpose() const { return ProjMap(mysticum::transpose(m_)); }

bool ProjMap::proportional_to(const ProjMap& other) const {
  // Find a pivot entry and compare every entry against the induced scale.
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (m_[i][j].is_zero()) continue;
      if (other.m_[i][j].is_zero()) return false;
      const Rat scale = other.m_[i][j] / m_[i][j];
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
          if (m_[r][c] * scale != other.m_[r][c]) return false;
      return true;
    }
  return false;
}

}  // namespace mysticum
