#include "mysticum/conic.hpp"

#include <cmath>
#include <stdexcept>

#include "mysticum/error.hpp"

namespace mysticum {

Conic::Conic(const Matrix3& m) : m_(m), cofactor_(cofactor(m)) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (m_[i][j] != m_[j][i]) throw GeometryError(ErrorKind::DegenerateConic, "conic matrix is not symmetric");
  if (determinant(m_).is_zero()) throw GeometryError(ErrorKind::DegenerateConic, "conic matrix is singular");
}

const Conic& Conic::unit_circle() {
  static const Conic circle(Matrix3{Triple{1, 0, 0}, Triple{0, 1, 0}, Triple{0, 0, -1}});
  return circle;
}

Side classify(const Conic& c, const ProjPoint& p) {
  const int s = c.form(p).sign();
  return s < 0 ? Side::Interior : (s == 0 ? Side::OnConic : Side::Exterior);
}

bool on_conic(const Conic& c, const ProjPoint& p) { return c.form(p).is_zero(); }

ProjLine polar(const Conic& c, const ProjPoint& p) { return ProjLine(mul(c.matrix(), p.coords())); }

ProjPoint pole(const Conic& c, const ProjLine& l) { return ProjPoint(mul(c.cofactor_, l.coeffs())); }

ConjugacyCheck conjugacy_detail(const Conic& c, const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw GeometryError(ErrorKind::EqualPoints, "conjugacy of a point with itself");
  const Rat fpq = c.form(p.coords(), q.coords());
  ConjugacyCheck out{fpq.is_zero(), std::nullopt};

  const Rat fpp = c.form(p);
  const Rat fqq = c.form(q);
  if (fpp.is_zero() || fqq.is_zero()) return out;
  // Points lambda*p + mu*q on the conic: lambda^2 fpp + 2 lambda mu fpq + mu^2 fqq = 0.
  const Rat disc = fpq * fpq - fpp * fqq;
  Rat root;
  if (disc.sign() <= 0 || !rational_sqrt(disc, root)) return out;
  auto combo = [&](const Rat& lambda) {
    return ProjPoint(Triple{lambda * p.x() + fpp * q.x(), lambda * p.y() + fpp * q.y(),
                            lambda * p.w() + fpp * q.w()});
  };
  const ProjPoint a = combo(-fpq + root);
  const ProjPoint b = combo(-fpq - root);
  out.cross_ratio = cross_ratio(a, b, p, q);
  return out;
}

bool conjugate(const Conic& c, const ProjPoint& p, const ProjPoint& q) {
  const ConjugacyCheck check = conjugacy_detail(c, p, q);
  if (check.cross_ratio && (*check.cross_ratio == Rat(-1)) != check.incidence)
    throw std::logic_error("conjugacy: polar incidence and harmonic cross ratio disagree");
  return check.incidence;
}

ProjPoint second_intersection(const Conic& c, const ProjPoint& a, const ProjLine& l) {
  if (!on_conic(c, a)) throw GeometryError(ErrorKind::NotOnConic, a.str() + " is not on the conic");
  if (!l.contains(a)) throw GeometryError(ErrorKind::DegenerateConfiguration, "line does not pass through " + a.str());
  // Any point of l other than a: l x e_k for a suitable axis vector e_k.
  static const Triple axes[] = {Triple{1, 0, 0}, Triple{0, 1, 0}, Triple{0, 0, 1}};
  for (const auto& e : axes) {
    const Triple qc = cross(l.coeffs(), e);
    if (is_zero(qc)) continue;
    const ProjPoint q(qc);
    if (q == a) continue;
    // On lambda*a + mu*q the quadratic is mu * (2 lambda F(a,q) + mu F(q,q)).
    const Rat faq = c.form(a.coords(), q.coords());
    if (faq.is_zero()) throw GeometryError(ErrorKind::TangentLine, l.str() + " is tangent at " + a.str());
    const Rat fqq = c.form(q);
    const Rat two_faq = Rat(2) * faq;
    return ProjPoint(Triple{fqq * a.x() - two_faq * q.x(), fqq * a.y() - two_faq * q.y(),
                            fqq * a.w() - two_faq * q.w()});
  }
  throw std::logic_error("second_intersection: no auxiliary point found");
}

bool dual_check(const Conic& c, const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3) {
  const bool lines = concurrent(polar(c, p1), polar(c, p2), polar(c, p3)).holds;
  const bool points = collinear(p1, p2, p3).holds;
  if (lines != points) throw std::logic_error("dual_check: polarity failed to preserve incidence");
  return lines;
}

Param Param::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "oo") return infinity();
  return Param(Rat::parse(text));
}

Param Param::angle_sum(const Param& a, const Param& b) {
  if (a.is_infinite() && b.is_infinite()) return Param(0);
  if (a.is_infinite() || b.is_infinite()) {
    const Rat& t = a.is_infinite() ? b.value() : a.value();
    if (t.is_zero()) return infinity();
    return Param(-t.reciprocal());
  }
  const Rat den = Rat(1) - a.value() * b.value();
  if (den.is_zero()) return infinity();
  return Param((a.value() + b.value()) / den);
}

Param Param::angle_negated() const { return is_infinite() ? infinity() : Param(-value()); }

bool operator<(const Param& a, const Param& b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return a.value() < b.value();
}

IdealPoint::IdealPoint(const ProjPoint& p) : point_(p) {
  if (!on_conic(Conic::unit_circle(), p)) throw GeometryError(ErrorKind::NotOnConic, p.str() + " is not on the unit circle");
}

IdealPoint IdealPoint::from_param(const Param& t) {
  if (t.is_infinite()) return IdealPoint(ProjPoint(-1, 0, 1));
  const Rat& v = t.value();
  return IdealPoint(ProjPoint(Rat(1) - v * v, Rat(2) * v, Rat(1) + v * v));
}

Param IdealPoint::param() const {
  const Rat s = point_.x() + point_.w();
  if (s.is_zero()) return Param::infinity();
  return Param(point_.y() / s);
}

IdealPoint param_point(const Param& t) { return IdealPoint::from_param(t); }

IdealPoint second_intersection(const IdealPoint& a, const ProjLine& l) {
  return IdealPoint(second_intersection(Conic::unit_circle(), a.point(), l));
}

bool in_convex_position(const std::vector<IdealPoint>& cyclic) {
  const std::size_t n = cyclic.size();
  std::vector<Param> ts;
  ts.reserve(n);
  for (const auto& p : cyclic) ts.push_back(p.param());
  std::size_t ascents = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Param& a = ts[i];
    const Param& b = ts[(i + 1) % n];
    if (a == b) throw GeometryError(ErrorKind::RepeatedVertex, "convexity test needs distinct points");
    if (a < b) ++ascents;
  }
  return ascents == 1 || ascents == n - 1;
}

Chord::Chord(const IdealPoint& a, const IdealPoint& b)
    : line_(join(a.point(), b.point())), endpoints_(std::make_pair(a, b)) {}

Chord::Chord(const ProjLine& line) : line_(line) {}

Chord Chord::from_line(const ProjLine& line) {
  const auto& [a, b, c] = line.coeffs();
  const Rat norm2 = a * a + b * b;
  const Rat disc = norm2 - c * c;
  if (disc.sign() <= 0) throw GeometryError(ErrorKind::NotInterior, line.str() + " misses the open disk");
  Chord chord(line);
  Rat s;
  if (rational_sqrt(disc, s)) {
    // Foot of the origin plus/minus s times the direction (-b, a, 0).
    const Triple foot{-a * c, -b * c, norm2};
    auto end = [&](const Rat& k) { return IdealPoint(ProjPoint(Triple{foot[0] - k * b, foot[1] + k * a, foot[2]})); };
    chord.endpoints_ = std::make_pair(end(s), end(-s));
  }
  return chord;
}

std::array<std::array<double, 2>, 2> Chord::numeric_endpoints() const {
  if (endpoints_) {
    const auto& [p, q] = *endpoints_;
    return {{{p.point().affine_x().to_double(), p.point().affine_y().to_double()},
             {q.point().affine_x().to_double(), q.point().affine_y().to_double()}}};
  }
  const auto& [a, b, c] = line_.coeffs();
  const Rat norm2 = a * a + b * b;
  const double fx = (-a * c / norm2).to_double();
  const double fy = (-b * c / norm2).to_double();
  const double h = std::sqrt(((norm2 - c * c) / (norm2 * norm2)).to_double());
  const double dx = -b.to_double();
  const double dy = a.to_double();
  const double dn = std::hypot(dx, dy);
  const double half = h * std::sqrt(norm2.to_double()) / dn;
  return {{{fx + half * dx, fy + half * dy}, {fx - half * dx, fy - half * dy}}};
}

}  // namespace mysticum
