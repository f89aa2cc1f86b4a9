#include "mysticum/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mysticum/error.hpp"

namespace mysticum {

namespace {

const Conic& circle() { return Conic::unit_circle(); }

bool all_distinct(std::span<const IdealPoint> pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j]) return false;
  return true;
}

void require_hexagon(const IdealPolygon& hex) {
  if (hex.size() != 6) throw GeometryError(ErrorKind::DegenerateHexagon, "expected 6 vertices");
}

void add_vertices(VerificationReport& r, const IdealPolygon& poly) {
  for (std::size_t i = 0; i < poly.size(); ++i)
    r.points.push_back({vertex_label(i, poly.size()), poly[i].point(), Role::Vertex});
  r.params = poly.param_strings();
}

void add_sides(VerificationReport& r, const IdealPolygon& poly) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i)
    r.lines.push_back({vertex_label(i, n) + vertex_label(i + 1, n), poly.side(i), Role::Side});
}

std::array<Chord, 3> hexagon_perpendiculars(const IdealPolygon& hex) {
  return {common_perpendicular(Chord(hex[0], hex[1]), Chord(hex[3], hex[4])),
          common_perpendicular(Chord(hex[1], hex[2]), Chord(hex[4], hex[5])),
          common_perpendicular(Chord(hex[2], hex[3]), Chord(hex[5], hex[0]))};
}

Rat line_defect(const ProjLine& l, const ProjLine& m) {
  const Triple c = cross(l.coeffs(), m.coeffs());
  return dot(c, c);
}

}  // namespace

std::string vertex_label(std::size_t i, std::size_t n) {
  i %= n;
  if (n <= 26) return std::string(1, static_cast<char>('A' + i));
  return "A" + std::to_string(i + 1);
}

IdealPolygon::IdealPolygon(std::vector<IdealPoint> vertices) : vertices_(std::move(vertices)), convex_(false) {
  if (vertices_.size() < 3) throw GeometryError(ErrorKind::RepeatedVertex, "polygon needs at least 3 vertices");
  if (!all_distinct(vertices_)) throw GeometryError(ErrorKind::RepeatedVertex, "polygon vertices must be distinct");
  convex_ = in_convex_position(vertices_);
}

IdealPolygon IdealPolygon::from_params(std::span<const Param> params) {
  std::vector<IdealPoint> pts;
  pts.reserve(params.size());
  for (const auto& t : params) pts.push_back(param_point(t));
  return IdealPolygon(std::move(pts));
}

ProjLine IdealPolygon::side(std::size_t i) const { return join((*this)[i].point(), (*this)[i + 1].point()); }

std::vector<Param> IdealPolygon::params() const {
  std::vector<Param> out;
  out.reserve(size());
  for (const auto& v : vertices_) out.push_back(v.param());
  return out;
}

std::vector<std::string> IdealPolygon::param_strings() const {
  std::vector<std::string> out;
  for (const auto& t : params()) out.push_back(t.str());
  return out;
}

PascalPoints pascal_points(const IdealPolygon& hex) {
  require_hexagon(hex);
  try {
    PascalPoints pp{meet(hex.side(0), hex.side(3)), meet(hex.side(1), hex.side(4)), meet(hex.side(2), hex.side(5)),
                    std::nullopt};
    if (pp.x != pp.y) pp.line = join(pp.x, pp.y);
    else if (pp.y != pp.z) pp.line = join(pp.y, pp.z);
    else if (pp.x != pp.z) pp.line = join(pp.x, pp.z);
    return pp;
  } catch (const GeometryError& e) {
    throw GeometryError(ErrorKind::DegenerateHexagon, e.what());
  }
}

VerificationReport verify_pascal(const IdealPolygon& hex) {
  const PascalPoints pp = pascal_points(hex);
  VerificationReport r;
  r.theorem = "pascal";
  add_vertices(r, hex);
  add_sides(r, hex);
  r.points.push_back({"X", pp.x, Role::Constructed});
  r.points.push_back({"Y", pp.y, Role::Constructed});
  r.points.push_back({"Z", pp.z, Role::Constructed});
  if (pp.line) r.lines.push_back({"pascal", *pp.line, Role::Certificate});
  r.witnesses.push_back(collinear(pp.x, pp.y, pp.z).witness);
  r.finalize();
  return r;
}

VerificationReport verify_pascal(std::span<const IdealPoint> vertices) {
  if (vertices.size() != 6) throw GeometryError(ErrorKind::DegenerateHexagon, "expected 6 vertices");
  if (!all_distinct(vertices)) throw GeometryError(ErrorKind::DegenerateHexagon, "repeated vertex");
  return verify_pascal(IdealPolygon({vertices.begin(), vertices.end()}));
}

VerificationReport verify_prop2(const IdealPolygon& hex) {
  require_hexagon(hex);
  if (!hex.convex()) throw GeometryError(ErrorKind::NotConvex, "hexagon vertices are not in convex cyclic order");
  const auto perps = hexagon_perpendiculars(hex);
  const ProjLine& l1 = perps[0].line();
  const ProjLine& l2 = perps[1].line();
  const ProjLine& l3 = perps[2].line();

  VerificationReport r;
  r.theorem = "prop2";
  add_vertices(r, hex);
  add_sides(r, hex);
  r.lines.push_back({"l1", l1, Role::Perpendicular});
  r.lines.push_back({"l2", l2, Role::Perpendicular});
  r.lines.push_back({"l3", l3, Role::Perpendicular});
  r.witnesses.push_back(concurrent(l1, l2, l3).witness);

  const ProjPoint center = meet(l1, l2);
  r.points.push_back({"O", center, Role::Certificate});

  // The concurrency point is the pole of the Pascal line: witnessed by
  // incidence of that pole with l1 and l2, which already meet only at O.
  const PascalPoints pp = pascal_points(hex);
  if (pp.line) {
    const ProjPoint p = pole(circle(), *pp.line);
    r.lines.push_back({"pascal", *pp.line, Role::Constructed});
    r.points.push_back({"pole", p, Role::Constructed});
    r.witnesses.push_back(l1.evaluate(p));
    r.witnesses.push_back(l2.evaluate(p));
  }
  r.finalize();
  return r;
}

VerificationReport verify_quadrilateral_lemma(const IdealPoint& a, const IdealPoint& b, const IdealPoint& d,
                                              const IdealPoint& e) {
  const Chord axis = bisector_of_ideal_quadrilateral(a, b, d, e);
  const Reflection refl = reflection_across_chord(axis);
  const ProjLine ad = join(a.point(), d.point());
  const ProjLine be = join(b.point(), e.point());
  const ProjPoint vertex = meet(ad, be);

  VerificationReport r;
  r.theorem = "quadrilateral";
  for (const auto& p : {a, b, d, e}) r.params.push_back(p.param().str());
  r.points.push_back({"A", a.point(), Role::Vertex});
  r.points.push_back({"B", b.point(), Role::Vertex});
  r.points.push_back({"D", d.point(), Role::Vertex});
  r.points.push_back({"E", e.point(), Role::Vertex});
  r.points.push_back({"V", vertex, Role::Constructed});
  r.lines.push_back({"AB", join(a.point(), b.point()), Role::Side});
  r.lines.push_back({"DE", join(d.point(), e.point()), Role::Side});
  r.lines.push_back({"AD", ad, Role::Diagonal});
  r.lines.push_back({"BE", be, Role::Diagonal});
  r.lines.push_back({"bisector", axis.line(), Role::Certificate});

  r.witnesses.push_back(coincidence_defect(refl.map.apply(a.point()), b.point()));
  r.witnesses.push_back(coincidence_defect(refl.map.apply(b.point()), a.point()));
  r.witnesses.push_back(coincidence_defect(refl.map.apply(d.point()), e.point()));
  r.witnesses.push_back(coincidence_defect(refl.map.apply(e.point()), d.point()));
  r.witnesses.push_back(axis.line().evaluate(vertex));
  r.finalize();
  return r;
}

VerificationReport verify_bisector_concurrency(const IdealPolygon& hex, double epsilon) {
  require_hexagon(hex);
  if (!hex.convex()) throw GeometryError(ErrorKind::NotConvex, "hexagon vertices are not in convex cyclic order");
  const Chord ad(hex[0], hex[3]);
  const Chord be(hex[1], hex[4]);
  const Chord cf(hex[2], hex[5]);
  if (ad.line() == be.line() || be.line() == cf.line() || ad.line() == cf.line())
    throw GeometryError(ErrorKind::DegenerateHexagon, "coincident diagonals");
  if (concurrent(ad.line(), be.line(), cf.line()).holds)
    throw GeometryError(ErrorKind::ConcurrentDiagonals, "AD, BE and CF pass through one point");

  // Triangle cut out by the diagonals.
  const ProjPoint p = meet(be.line(), cf.line());
  const ProjPoint q = meet(ad.line(), cf.line());
  const ProjPoint rv = meet(ad.line(), be.line());

  const auto perps = hexagon_perpendiculars(hex);
  const ProjLine& l1 = perps[0].line();  // bisects AD, BE: through R
  const ProjLine& l2 = perps[1].line();  // bisects BE, CF: through P
  const ProjLine& l3 = perps[2].line();  // bisects CF, AD: through Q

  VerificationReport r;
  r.theorem = "bisectors";
  add_vertices(r, hex);
  r.points.push_back({"P", p, Role::Constructed});
  r.points.push_back({"Q", q, Role::Constructed});
  r.points.push_back({"R", rv, Role::Constructed});
  r.lines.push_back({"AD", ad.line(), Role::Diagonal});
  r.lines.push_back({"BE", be.line(), Role::Diagonal});
  r.lines.push_back({"CF", cf.line(), Role::Diagonal});
  r.lines.push_back({"l1", l1, Role::Perpendicular});
  r.lines.push_back({"l2", l2, Role::Perpendicular});
  r.lines.push_back({"l3", l3, Role::Perpendicular});

  r.witnesses.push_back(l1.evaluate(rv));
  r.witnesses.push_back(l2.evaluate(p));
  r.witnesses.push_back(l3.evaluate(q));
  r.witnesses.push_back(concurrent(l1, l2, l3).witness);

  const ProjPoint center = meet(l1, l2);
  r.points.push_back({"I", center, Role::Certificate});
  const HPoint incenter(center);
  const std::array<double, 3> d{point_to_chord_distance(incenter, ad), point_to_chord_distance(incenter, be),
                                point_to_chord_distance(incenter, cf)};
  const auto [lo, hi] = std::minmax_element(d.begin(), d.end());
  r.numeric.push_back({"equidistance", *hi - *lo, epsilon});
  r.finalize();
  return r;
}

VerificationReport verify_brianchon(std::span<const IdealPoint> tangency_points) {
  if (tangency_points.size() != 6) throw GeometryError(ErrorKind::DegenerateTangency, "expected 6 tangency points");
  if (!all_distinct(tangency_points)) throw GeometryError(ErrorKind::DegenerateTangency, "repeated tangency point");
  const IdealPolygon hex({tangency_points.begin(), tangency_points.end()});

  VerificationReport r;
  r.theorem = "brianchon";
  r.params = hex.param_strings();
  std::array<ProjLine, 6> tangents{polar(circle(), hex[0].point()), polar(circle(), hex[1].point()),
                                   polar(circle(), hex[2].point()), polar(circle(), hex[3].point()),
                                   polar(circle(), hex[4].point()), polar(circle(), hex[5].point())};
  std::vector<ProjPoint> corners;
  for (std::size_t i = 0; i < 6; ++i) {
    r.points.push_back({"T" + vertex_label(i, 6), hex[i].point(), Role::Vertex});
    r.lines.push_back({"t" + vertex_label(i, 6), tangents[i], Role::Side});
    corners.push_back(meet(tangents[i], tangents[(i + 1) % 6]));
    r.points.push_back({"V" + std::to_string(i + 1), corners.back(), Role::Constructed});
  }

  // Dual route: the main diagonals are the polars of the Pascal points.
  const PascalPoints pp = pascal_points(hex);
  const std::array<ProjLine, 3> diagonals{polar(circle(), pp.x), polar(circle(), pp.y), polar(circle(), pp.z)};
  for (std::size_t i = 0; i < 3; ++i)
    r.lines.push_back({"d" + std::to_string(i + 1), diagonals[i], Role::Diagonal});
  r.witnesses.push_back(concurrent(diagonals[0], diagonals[1], diagonals[2]).witness);

  // The corners joined directly must give the same three lines.
  for (std::size_t i = 0; i < 3; ++i) r.witnesses.push_back(line_defect(join(corners[i], corners[i + 3]), diagonals[i]));

  if (pp.line) {
    const ProjPoint brianchon = pole(circle(), *pp.line);
    r.points.push_back({"brianchon", brianchon, Role::Certificate});
    r.witnesses.push_back(diagonals[0].evaluate(brianchon));
    r.witnesses.push_back(diagonals[1].evaluate(brianchon));
  }
  r.finalize();
  return r;
}

std::vector<PascalLineEntry> enumerate_pascal_lines(std::span<const IdealPoint> six_points) {
  if (six_points.size() != 6 || !all_distinct(six_points))
    throw GeometryError(ErrorKind::DegenerateHexagon, "need six distinct points");
  std::vector<PascalLineEntry> out;
  std::array<int, 6> order{0, 1, 2, 3, 4, 5};
  // Fix the first vertex (rotation) and require order[1] < order[5] (reversal).
  do {
    if (order[1] > order[5]) continue;
    std::vector<IdealPoint> verts;
    std::string label;
    for (int i : order) {
      verts.push_back(six_points[static_cast<std::size_t>(i)]);
      label.push_back(static_cast<char>('A' + i));
    }
    const IdealPolygon hex(std::move(verts));
    const PascalPoints pp = pascal_points(hex);
    if (!pp.line) throw GeometryError(ErrorKind::DegenerateHexagon, "Pascal line undefined for " + label);
    out.push_back({order, label, *pp.line, collinear(pp.x, pp.y, pp.z).witness});
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return out;
}

}  // namespace mysticum
