#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_helpers.hpp"

#include <cmath>

#include "mysticum/klein.hpp"

using namespace testing_support;

namespace {

const Conic& C() { return Conic::unit_circle(); }

IdealPoint ideal(long x, long y, long w) { return IdealPoint(pt(x, y, w)); }

Chord chord(const ProjLine& l) { return Chord::from_line(l); }

/// Oracle: half log of the exact cross ratio, for a chord with rational endpoints.
double exact_oracle(const HPoint& p, const HPoint& qq) {
  const Chord c = Chord::from_line(join(p.point(), qq.point()));
  const auto ends = c.endpoints();
  REQUIRE(ends.has_value());
  const Rat cr = cross_ratio(ends->first.point(), ends->second.point(), p.point(), qq.point());
  return static_cast<double>(0.5L * std::fabs(std::log(std::fabs(cr.to_long_double()))));
}

HPoint random_on_chord(RandomRationalSampler& s, const IdealPoint& a, const IdealPoint& b) {
  // Convex combination of the affine endpoints with t in (0, 1).
  {
    const Rat t(BigInt(static_cast<long>(s.below(999)) + 1), BigInt(1000));
    const ProjPoint pa = a.point(), pb = b.point();
    const Rat x = t * pa.affine_x() + (Rat(1) - t) * pb.affine_x();
    const Rat y = t * pa.affine_y() + (Rat(1) - t) * pb.affine_y();
    return HPoint::affine(x, y);
  }
}

}  // namespace

TEST_CASE("HPoint requires interior points") {
  CHECK(error_of([] { HPoint(pt(1, 0, 1)); }) == ErrorKind::NotInterior);
  CHECK(error_of([] { HPoint(pt(1, 0, 0)); }) == ErrorKind::NotInterior);
  CHECK(error_of([] { HPoint::affine(2, 0); }) == ErrorKind::NotInterior);
}

TEST_CASE("hilbert distance examples") {
  const HPoint o = HPoint::affine(0, 0);
  CHECK(hilbert_distance(o, o) == 0.0);
  const double half_log3 = 0.5 * std::log(3.0);
  CHECK(std::fabs(hilbert_distance(o, HPoint::affine(0, q(1, 2))) - half_log3) < 1e-15);
  CHECK(std::fabs(hilbert_distance(o, HPoint::affine(q(1, 2), 0)) - half_log3) < 1e-15);
  CHECK(std::fabs(hilbert_distance(o, HPoint::affine(0, q(1, 2))) - 0.5493061) < 1e-7);
  CHECK(std::fabs(hilbert_bracket(o, HPoint::affine(0, q(1, 2))) - 3.0) < 1e-14);
}

TEST_CASE("hilbert distance matches the exact cross ratio on rational chords") {
  RandomRationalSampler s(31);
  for (int i = 0; i < 1000; ++i) {
    const IdealPoint a = s.ideal_point(), b = s.ideal_point();
    if (a == b) continue;
    const HPoint p = random_on_chord(s, a, b), r = random_on_chord(s, a, b);
    if (p == r) {
      CHECK(hilbert_distance(p, r) == 0.0);
      continue;
    }
    const double d = hilbert_distance(p, r);
    const double oracle = exact_oracle(p, r);
    CHECK(std::fabs(d - oracle) <= 1e-12 * std::max(1.0, oracle));
    CHECK(d > 0.0);
  }
}

TEST_CASE("hilbert distance is symmetric and satisfies the triangle inequality") {
  RandomRationalSampler s(32);
  for (int i = 0; i < 500; ++i) {
    const HPoint a = s.interior_point(), b = s.interior_point(), c = s.interior_point();
    CHECK(std::fabs(hilbert_distance(a, b) - hilbert_distance(b, a)) < kDefaultEpsilon);
    CHECK(hilbert_distance(a, c) <= hilbert_distance(a, b) + hilbert_distance(b, c) + kDefaultEpsilon);
  }
}

TEST_CASE("hilbert distance is invariant under reflections") {
  RandomRationalSampler s(33);
  for (int i = 0; i < 500; ++i) {
    const IdealPoint a = s.ideal_point(), b = s.ideal_point();
    if (a == b) continue;
    const ProjMap m = reflection_across_chord(Chord(a, b)).map;
    const HPoint p = s.interior_point(), r = s.interior_point();
    const HPoint mp(m.apply(p.point())), mr(m.apply(r.point()));
    const double d = hilbert_distance(p, r);
    CHECK(std::fabs(hilbert_distance(mp, mr) - d) < kDefaultEpsilon * std::max(1.0, d));
  }
}

TEST_CASE("orthogonality examples") {
  CHECK(is_orthogonal(chord(ln(1, 0, 0)), chord(ln(0, 1, 0))));
  CHECK(is_orthogonal(chord(ln(2, 1, -2)), chord(ln(0, 2, -1))));
  CHECK(is_orthogonal(chord(ln(0, 2, -1)), chord(ln(2, 1, -2))));
  CHECK_FALSE(is_orthogonal(chord(ln(1, 0, 0)), chord(ln(2, 0, -1))));
  RandomRationalSampler s(34);
  for (int i = 0; i < 300; ++i) {
    const IdealPoint a = s.ideal_point(), b = s.ideal_point(), c = s.ideal_point(), d = s.ideal_point();
    if (a == b || c == d) continue;
    const Chord l(a, b), m(c, d);
    CHECK(is_orthogonal(l, m) == is_orthogonal(m, l));
  }
}

TEST_CASE("common perpendicular examples") {
  const auto A = ideal(1, 0, 1), B = ideal(3, 4, 5), Cc = ideal(0, 1, 1), D = ideal(-3, 4, 5), E = ideal(-1, 0, 1),
             F = ideal(0, -1, 1);
  CHECK(common_perpendicular(Chord(A, B), Chord(D, E)).line() == ln(0, 2, -1));
  const ProjLine l2 = common_perpendicular(Chord(B, Cc), Chord(E, F)).line();
  CHECK(l2 == ln(3, -2, 1));
  CHECK(l2 == ln(-3, 2, -1));  // same line up to scale
  CHECK(common_perpendicular(chord(ln(1, 0, 0)), chord(ln(2, 0, -1))).line() == ln(0, 1, 0));
  CHECK(error_of([] { common_perpendicular(chord(ln(1, 0, 0)), chord(ln(0, 1, 0))); }) == ErrorKind::MeetInsideDisk);
  CHECK(error_of([&] { common_perpendicular(Chord(A, B), Chord(A, Cc)); }) == ErrorKind::MeetOnCircle);
  CHECK(error_of([&] { common_perpendicular(Chord(A, B), Chord(B, A)); }) == ErrorKind::EqualLines);
}

TEST_CASE("common perpendicular is orthogonal to both chords") {
  RandomRationalSampler s(35);
  int built = 0;
  for (int i = 0; i < 500; ++i) {
    auto ts = s.distinct_params(4, true);
    const auto pts = points_of(ts);
    // Opposite sides of a convex quadrilateral never meet in the closed disk.
    const Chord l(pts[0], pts[1]), m(pts[2], pts[3]);
    const ProjPoint x = meet(l.line(), m.line());
    const Chord p = common_perpendicular(l, m);
    CHECK(is_orthogonal(p, l));
    CHECK(is_orthogonal(p, m));
    CHECK(p.line() == polar(C(), x));
    ++built;
  }
  CHECK(built == 500);
}

TEST_CASE("reflection examples") {
  const Reflection r = reflection_across_chord(chord(ln(0, 2, -1)));
  const Matrix3 expected{Triple{1, 0, 0}, Triple{0, q(-5, 3), q(4, 3)}, Triple{0, q(-4, 3), q(5, 3)}};
  CHECK(r.map.proportional_to(ProjMap(expected)));
  CHECK(r.map.apply(pt(1, 0, 1)) == pt(3, 4, 5));
  CHECK(r.map.apply(pt(3, 4, 5)) == pt(1, 0, 1));
  CHECK(r.map.apply(pt(-1, 0, 1)) == pt(-3, 4, 5));
  const Reflection mirror = reflection_across_chord(chord(ln(1, 0, 0)));
  CHECK(mirror.map.proportional_to(ProjMap(Matrix3{Triple{-1, 0, 0}, Triple{0, 1, 0}, Triple{0, 0, 1}})));
  CHECK(mirror.map.apply(ProjPoint::affine(0, q(1, 3))) == ProjPoint::affine(0, q(1, 3)));
}

TEST_CASE("reflection invariants on random chords") {
  RandomRationalSampler s(36);
  const ProjMap circle(C().matrix());
  for (int i = 0; i < 1000; ++i) {
    const IdealPoint a = s.ideal_point(), b = s.ideal_point();
    if (a == b) continue;
    const Reflection r = reflection_across_chord(Chord(a, b));
    CHECK(r.map.compose(r.map).proportional_to(ProjMap(Matrix3{Triple{1, 0, 0}, Triple{0, 1, 0}, Triple{0, 0, 1}})));
    CHECK(r.map.transpose().compose(circle).compose(r.map).proportional_to(circle));
    CHECK(r.map.apply(a.point()) == a.point());
    CHECK(r.map.apply(b.point()) == b.point());
    const ProjLine other = r.axis.line() == ln(1, 1, 7) ? ln(1, -1, 7) : ln(1, 1, 7);
    const ProjPoint on_axis = meet(r.axis.line(), other);
    CHECK(r.map.apply(on_axis) == on_axis);
    CHECK(r.map.apply(pole(C(), r.axis.line())) == pole(C(), r.axis.line()));
  }
}

TEST_CASE("bisector of an ideal quadrilateral") {
  const auto A = ideal(1, 0, 1), B = ideal(3, 4, 5), D = ideal(-3, 4, 5), E = ideal(-1, 0, 1);
  const Chord l = bisector_of_ideal_quadrilateral(A, B, D, E);
  CHECK(l.line() == ln(0, 2, -1));
  const ProjMap m = reflection_across_chord(l).map;
  CHECK(m.apply(A.point()) == B.point());
  CHECK(m.apply(D.point()) == E.point());

  const auto A2 = ideal(-4, 3, 5), B2 = ideal(4, 3, 5), D2 = ideal(3, -4, 5), E2 = ideal(-3, -4, 5);
  CHECK(bisector_of_ideal_quadrilateral(A2, B2, D2, E2).line() == ln(1, 0, 0));
  // A and D exchanged leaves a convex order (reversed orientation); B and D
  // exchanged makes AB and DE cross.
  CHECK(error_of([&] { bisector_of_ideal_quadrilateral(A, D, B, E); }) == ErrorKind::NotConvex);
}

TEST_CASE("reflection across the bisector swaps the quadrilateral exactly") {
  RandomRationalSampler s(37);
  for (int i = 0; i < 1000; ++i) {
    const auto pts = points_of(s.distinct_params(4, true));
    const Chord l = bisector_of_ideal_quadrilateral(pts[0], pts[1], pts[2], pts[3]);
    const ProjMap m = reflection_across_chord(l).map;
    CHECK(m.apply(pts[0].point()) == pts[1].point());
    CHECK(m.apply(pts[1].point()) == pts[0].point());
    CHECK(m.apply(pts[2].point()) == pts[3].point());
    CHECK(m.apply(pts[3].point()) == pts[2].point());
  }
}

TEST_CASE("point to chord distance") {
  const Chord l = chord(ln(0, 2, -1));
  const HPoint o = HPoint::affine(0, 0);
  CHECK(perpendicular_foot(o, l) == ProjPoint::affine(0, q(1, 2)));
  CHECK(std::fabs(point_to_chord_distance(o, l) - 0.5 * std::log(3.0)) < 1e-15);
  CHECK(point_to_chord_distance(HPoint::affine(0, q(1, 2)), l) == 0.0);
  CHECK(point_to_chord_distance(HPoint::affine(q(1, 3), q(1, 2)), l) == 0.0);
  // Reflection preserves distance to the axis' image.
  RandomRationalSampler s(38);
  for (int i = 0; i < 200; ++i) {
    const IdealPoint a = s.ideal_point(), b = s.ideal_point(), c = s.ideal_point(), d = s.ideal_point();
    if (a == b || c == d) continue;
    const Chord axis(a, b), target(c, d);
    const ProjMap m = reflection_across_chord(axis).map;
    const HPoint p = s.interior_point();
    const Chord image = Chord::from_line(m.apply(target.line()));
    const double d0 = point_to_chord_distance(p, target);
    CHECK(std::fabs(point_to_chord_distance(HPoint(m.apply(p.point())), image) - d0) < 1e-11 * std::max(1.0, d0));
  }
}
