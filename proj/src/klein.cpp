#include "mysticum/klein.hpp"

#include <cmath>
#include <stdexcept>

#include "mysticum/error.hpp"

namespace mysticum {

namespace {

const Conic& circle() { return Conic::unit_circle(); }

// sinh^2 d(P, Q) = D / (F(P,P) F(Q,Q)); zero iff P == Q.
Rat sinh_squared(const HPoint& p, const HPoint& q) {
  const Triple& u = p.point().coords();
  const Triple& v = q.point().coords();
  const Rat fpq = circle().form(u, v);
  const Rat fpp = circle().form(u, u);
  const Rat fqq = circle().form(v, v);
  return (fpq * fpq - fpp * fqq) / (fpp * fqq);
}

}  // namespace

HPoint::HPoint(const ProjPoint& p) : point_(p) {
  if (classify(circle(), p) != Side::Interior) throw GeometryError(ErrorKind::NotInterior, p.str() + " is not inside the unit disk");
}

double hilbert_distance(const HPoint& p, const HPoint& q) {
  const Rat s2 = sinh_squared(p, q);
  if (s2.is_zero()) return 0.0;
  // 1/2 log bracket = log(sqrt(K) + sqrt(K - 1)) = asinh(sqrt(K - 1)), K - 1 = s2.
  return static_cast<double>(std::asinh(std::sqrt(s2.to_long_double())));
}

double hilbert_bracket(const HPoint& p, const HPoint& q) { return std::exp(2.0 * hilbert_distance(p, q)); }

bool is_orthogonal(const Chord& l, const Chord& m) {
  const bool forward = m.line().contains(pole(circle(), l.line()));
  const bool backward = l.line().contains(pole(circle(), m.line()));
  if (forward != backward) throw std::logic_error("is_orthogonal: relation is not symmetric");
  return forward;
}

Chord common_perpendicular(const Chord& l, const Chord& m) {
  const ProjPoint x = meet(l.line(), m.line());
  switch (classify(circle(), x)) {
    case Side::Interior:
      throw GeometryError(ErrorKind::MeetInsideDisk, "chords cross at " + x.str() + " inside the disk");
    case Side::OnConic:
      throw GeometryError(ErrorKind::MeetOnCircle, "chords are asymptotic at " + x.str());
    case Side::Exterior:
      break;
  }
  return Chord::from_line(polar(circle(), x));
}

Reflection reflection_across_chord(const Chord& l) {
  const Triple& lc = l.line().coeffs();
  const Triple pc = pole(circle(), l.line()).coords();
  const Rat lp = dot(lc, pc);
  if (lp.is_zero()) throw std::logic_error("reflection_across_chord: pole lies on its polar");
  // I - 2 p l^T / (l^T p)
  Matrix3 m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = Rat(i == j ? 1 : 0) - Rat(2) * pc[i] * lc[j] / lp;
  return Reflection{l, ProjMap(m)};
}

Chord bisector_of_ideal_quadrilateral(const IdealPoint& a, const IdealPoint& b, const IdealPoint& d,
                                      const IdealPoint& e) {
  if (!in_convex_position({a, b, d, e}))
    throw GeometryError(ErrorKind::NotConvex, "ideal quadrilateral ABDE is not in convex position");
  return common_perpendicular(Chord(a, b), Chord(d, e));
}

ProjPoint perpendicular_foot(const HPoint& p, const Chord& l) {
  if (l.line().contains(p.point())) return p.point();
  const ProjLine perp = join(p.point(), pole(circle(), l.line()));
  return meet(perp, l.line());
}

double point_to_chord_distance(const HPoint& p, const Chord& l) {
  return hilbert_distance(p, HPoint(perpendicular_foot(p, l)));
}

}  // namespace mysticum
