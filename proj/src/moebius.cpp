#include "mysticum/moebius.hpp"

#include <algorithm>

#include "mysticum/error.hpp"

namespace mysticum {

namespace {

const Conic& circle() { return Conic::unit_circle(); }

std::size_t half(const IdealPolygon& polygon) {
  if (polygon.size() % 2 != 0) throw GeometryError(ErrorKind::DegenerateConfiguration, "polygon needs an even vertex count");
  return polygon.size() / 2;
}

}  // namespace

bool MoebiusConfig::perpendiculars_exist() const {
  return std::all_of(opposite_meets.begin(), opposite_meets.end(),
                     [](const ProjPoint& x) { return classify(circle(), x) == Side::Exterior; });
}

std::vector<ProjPoint> opposite_meets(const IdealPolygon& polygon) {
  const std::size_t k = half(polygon);
  std::vector<ProjPoint> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(meet(polygon.side(i), polygon.side(i + k)));
  return out;
}

MoebiusConfig build_chain_polygon(int n, const ProjLine& line, std::span<const ProjPoint> xs, const IdealPoint& a1,
                                  const IdealPoint& a_mid) {
  if (n < 1) throw GeometryError(ErrorKind::DegenerateConfiguration, "n must be positive");
  const auto steps = static_cast<std::size_t>(2 * n);
  if (xs.size() != steps) throw GeometryError(ErrorKind::DegenerateConfiguration, "need exactly 2n points on the line");
  for (const auto& x : xs) {
    if (!line.contains(x)) throw GeometryError(ErrorKind::DegenerateConfiguration, x.str() + " is not on the line");
    if (classify(circle(), x) != Side::Exterior)
      throw GeometryError(ErrorKind::NotExterior, x.str() + " is not outside the closed disk");
  }

  std::vector<IdealPoint> verts;
  verts.reserve(2 * steps + 2);
  auto propagate = [&](const IdealPoint& start) {
    verts.push_back(start);
    for (std::size_t k = 0; k < steps; ++k) {
      const IdealPoint& cur = verts.back();
      try {
        verts.push_back(second_intersection(cur, join(cur.point(), xs[k])));
      } catch (const GeometryError& e) {
        if (e.kind() == ErrorKind::TangentLine) throw GeometryError(ErrorKind::TangentEncounter, e.what());
        throw;
      }
    }
  };
  propagate(a1);
  propagate(a_mid);

  try {
    IdealPolygon polygon(std::move(verts));
    auto meets = opposite_meets(polygon);
    return MoebiusConfig{n, std::move(polygon), line, std::move(meets)};
  } catch (const GeometryError& e) {
    throw GeometryError(ErrorKind::RepeatedVertex, e.what());
  }
}

MoebiusConfig with_vertex_replaced(const MoebiusConfig& cfg, std::size_t index, const IdealPoint& replacement) {
  std::vector<IdealPoint> verts = cfg.polygon.vertices();
  verts.at(index) = replacement;
  IdealPolygon polygon(std::move(verts));
  auto meets = opposite_meets(polygon);
  return MoebiusConfig{cfg.n, std::move(polygon), cfg.line, std::move(meets)};
}

VerificationReport verify_moebius(const MoebiusConfig& cfg) {
  const auto meets = opposite_meets(cfg.polygon);
  VerificationReport r;
  r.theorem = "moebius";
  r.params = cfg.polygon.param_strings();
  const std::size_t nv = cfg.polygon.size();
  for (std::size_t i = 0; i < nv; ++i) r.points.push_back({vertex_label(i, nv), cfg.polygon[i].point(), Role::Vertex});
  for (std::size_t i = 0; i < nv; ++i)
    r.lines.push_back({vertex_label(i, nv) + vertex_label(i + 1, nv), cfg.polygon.side(i), Role::Side});
  for (std::size_t i = 0; i < meets.size(); ++i) {
    r.points.push_back({"X" + std::to_string(i + 1), meets[i], Role::Constructed});
    r.witnesses.push_back(cfg.line.evaluate(meets[i]));
  }
  r.lines.push_back({"L", cfg.line, Role::Certificate});
  r.finalize();
  return r;
}

Rat SignedLineForm::evaluate(const ProjPoint& p) const {
  if (p.at_infinity()) throw GeometryError(ErrorKind::DegenerateConfiguration, "sign evaluation at a point at infinity");
  return coeffs[0] * p.affine_x() + coeffs[1] * p.affine_y() + coeffs[2];
}

std::vector<SignedLineForm> normalized_line_forms(const IdealPolygon& polygon) {
  const std::size_t k = half(polygon);
  std::vector<SignedLineForm> forms;
  forms.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    SignedLineForm m{i, join(polygon[i].point(), polygon[i + k].point()).coeffs()};
    const int s = m.evaluate(polygon[i + 1].point()).sign();
    if (s == 0) throw GeometryError(ErrorKind::DegenerateDiagonal, "next vertex lies on diagonal " + std::to_string(i + 1));
    if (s < 0)
      for (auto& c : m.coeffs) c = -c;
    forms.push_back(std::move(m));
  }
  return forms;
}

std::vector<SignedLineForm> normalized_line_forms(const MoebiusConfig& cfg) {
  return normalized_line_forms(cfg.polygon);
}

namespace {

std::vector<int> evaluation_signs(std::span<const SignedLineForm> forms, const ProjPoint& p) {
  std::vector<int> signs;
  signs.reserve(forms.size());
  for (const auto& m : forms) {
    const int s = m.evaluate(p).sign();
    if (s == 0) throw GeometryError(ErrorKind::OnBoundary, p.str() + " lies on diagonal " + std::to_string(m.index + 1));
    signs.push_back(s);
  }
  return signs;
}

bool member(const std::vector<int>& signs, std::size_t i) {
  const std::size_t k = signs.size();
  if (i + 1 < k) return signs[i] * signs[i + 1] < 0;
  return signs[k - 1] * signs[0] > 0;
}

}  // namespace

bool region_membership(std::span<const SignedLineForm> forms, const ProjPoint& p, std::size_t i) {
  if (forms.size() < 2 || i >= forms.size())
    throw GeometryError(ErrorKind::DegenerateConfiguration, "region index out of range");
  const std::size_t j = (i + 1) % forms.size();
  const std::array<SignedLineForm, 2> pair{forms[i], forms[j]};
  const auto s = evaluation_signs(pair, p);
  return i + 1 < forms.size() ? s[0] * s[1] < 0 : s[0] * s[1] > 0;
}

VerificationReport verify_region_lemma(std::span<const SignedLineForm> forms, const ProjPoint& p) {
  if (forms.size() < 2) throw GeometryError(ErrorKind::DegenerateConfiguration, "need at least two line forms");
  const auto signs = evaluation_signs(forms, p);
  const std::size_t k = forms.size();
  bool hypotheses = true;
  for (std::size_t i = 0; i + 1 < k; ++i) hypotheses = hypotheses && member(signs, i);
  const bool conclusion = member(signs, k - 1);

  VerificationReport r;
  r.theorem = "region-lemma";
  r.params.push_back(std::to_string(k));
  r.points.push_back({"P", p, Role::Certificate});
  for (const auto& m : forms) r.lines.push_back({"m" + std::to_string(m.index + 1), ProjLine(m.coeffs), Role::Diagonal});
  r.signs = signs;
  if (hypotheses && !conclusion) r.witnesses.push_back(forms[k - 1].evaluate(p) * forms[0].evaluate(p));
  else r.witnesses.push_back(Rat(0));
  r.finalize();
  return r;
}

std::vector<ProjLine> hypothesis_perpendiculars(const MoebiusConfig& cfg) {
  std::vector<ProjLine> out;
  const auto steps = static_cast<std::size_t>(2 * cfg.n);
  for (std::size_t i = 0; i < steps; ++i) {
    const ProjPoint& x = cfg.opposite_meets.at(i);
    if (classify(circle(), x) != Side::Exterior)
      throw GeometryError(ErrorKind::NotExterior, "opposite sides " + std::to_string(i + 1) + " have no common perpendicular");
    out.push_back(polar(circle(), x));
  }
  return out;
}

double diagonal_distance_spread(const MoebiusConfig& cfg, const HPoint& p) {
  const std::size_t k = half(cfg.polygon);
  std::vector<double> d;
  for (std::size_t i = 0; i < k; ++i) d.push_back(point_to_chord_distance(p, Chord(cfg.polygon[i], cfg.polygon[i + k])));
  const auto [lo, hi] = std::minmax_element(d.begin(), d.end());
  return *hi - *lo;
}

bool bisector_equidistance_check(const MoebiusConfig& cfg, const HPoint& p, double epsilon) {
  for (const auto& l : hypothesis_perpendiculars(cfg))
    if (!l.contains(p.point())) throw GeometryError(ErrorKind::NotConcurrent, "point is not on every common perpendicular");
  return diagonal_distance_spread(cfg, p) < epsilon;
}

}  // namespace mysticum
