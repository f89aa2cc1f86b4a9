#include "mysticum/campaign.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <thread>

#include "mysticum/error.hpp"

namespace mysticum {

namespace {

constexpr std::uint64_t kMaxResamples = 10000;

constexpr std::array<std::pair<TheoremId, std::string_view>, 8> kNames{{
    {TheoremId::Pascal, "pascal"},
    {TheoremId::Prop2, "prop2"},
    {TheoremId::Quadrilateral, "quadrilateral"},
    {TheoremId::Bisectors, "bisectors"},
    {TheoremId::Brianchon, "brianchon"},
    {TheoremId::Moebius, "moebius"},
    {TheoremId::RegionLemma, "region-lemma"},
    {TheoremId::PascalLines, "pascal-lines"},
}};

std::vector<IdealPoint> to_points(const std::vector<Param>& params) {
  std::vector<IdealPoint> pts;
  for (const auto& t : params) pts.push_back(param_point(t));
  return pts;
}

VerificationReport region_lemma_trial(RandomRationalSampler& sampler, const CampaignSpec& spec) {
  const MoebiusConfig cfg = sample_moebius_config(sampler, spec.n);
  const auto forms = normalized_line_forms(cfg);
  std::uint64_t violations = 0;
  for (std::uint64_t i = 0; i < spec.points;) {
    const HPoint p = sampler.interior_point();
    try {
      if (!verify_region_lemma(forms, p.point()).pass) ++violations;
      ++i;
    } catch (const GeometryError& e) {
      if (e.kind() != ErrorKind::OnBoundary) throw;
    }
  }
  VerificationReport r;
  r.theorem = "region-lemma";
  r.params = cfg.polygon.param_strings();
  for (std::size_t i = 0; i < cfg.polygon.size(); ++i)
    r.points.push_back({vertex_label(i, cfg.polygon.size()), cfg.polygon[i].point(), Role::Vertex});
  for (const auto& m : forms) r.lines.push_back({"m" + std::to_string(m.index + 1), ProjLine(m.coeffs), Role::Diagonal});
  r.witnesses.push_back(Rat(BigInt(std::to_string(violations))));
  r.finalize();
  return r;
}

VerificationReport draw_and_verify(RandomRationalSampler& sampler, const CampaignSpec& spec) {
  switch (spec.theorem) {
    case TheoremId::Pascal:
      return verify_pascal(to_points(sample_hexagon_params(sampler, spec.convex)));
    case TheoremId::Prop2:
      return verify_prop2(IdealPolygon::from_params(sample_hexagon_params(sampler, true)));
    case TheoremId::Quadrilateral: {
      const auto pts = to_points(sampler.distinct_params(4, true));
      return verify_quadrilateral_lemma(pts[0], pts[1], pts[2], pts[3]);
    }
    case TheoremId::Bisectors:
      return verify_bisector_concurrency(IdealPolygon::from_params(sampler.distinct_params(6, true)), spec.epsilon);
    case TheoremId::Brianchon:
      return verify_brianchon(to_points(sampler.distinct_params(6, spec.convex)));
    case TheoremId::Moebius: {
      MoebiusConfig cfg = sample_moebius_config(sampler, spec.n);
      if (spec.mutate) {
        const std::size_t index = sampler.below(cfg.polygon.size());
        cfg = with_vertex_replaced(cfg, index, sampler.ideal_point());
      }
      return verify_moebius(cfg);
    }
    case TheoremId::RegionLemma:
      return region_lemma_trial(sampler, spec);
    case TheoremId::PascalLines: {
      const auto pts = to_points(sampler.distinct_params(6, false));
      const auto entries = enumerate_pascal_lines(pts);
      VerificationReport r;
      r.theorem = "pascal-lines";
      for (const auto& p : pts) r.params.push_back(p.param().str());
      for (std::size_t i = 0; i < pts.size(); ++i) r.points.push_back({vertex_label(i, 6), pts[i].point(), Role::Vertex});
      for (const auto& e : entries) {
        r.lines.push_back({e.label, e.line, Role::Certificate});
        r.witnesses.push_back(e.witness);
      }
      r.witnesses.push_back(Rat(static_cast<long>(entries.size()) - 60));
      r.finalize();
      return r;
    }
  }
  throw GeometryError(ErrorKind::InvalidSpec, "unknown theorem");
}

}  // namespace

std::optional<TheoremId> parse_theorem(std::string_view name) {
  for (const auto& [id, n] : kNames)
    if (n == name) return id;
  return std::nullopt;
}

std::string_view to_string(TheoremId id) {
  for (const auto& [i, n] : kNames)
    if (i == id) return n;
  return "unknown";
}

void validate(const CampaignSpec& spec) {
  if (spec.trials < 1) throw GeometryError(ErrorKind::InvalidSpec, "trials must be at least 1");
  if (!(spec.epsilon > 0.0)) throw GeometryError(ErrorKind::InvalidSpec, "epsilon must be positive");
  if (spec.n < 1) throw GeometryError(ErrorKind::InvalidSpec, "n must be positive");
  if (spec.theorem == TheoremId::RegionLemma && spec.points < 1)
    throw GeometryError(ErrorKind::InvalidSpec, "points must be at least 1");
}

std::vector<Param> sample_hexagon_params(RandomRationalSampler& sampler, bool force_convex) {
  const std::uint64_t kind = sampler.below(8);
  if (kind == 7) {
    // Centrally symmetric: t and its antipode -1/t.
    auto half = sampler.distinct_params(3, false);
    std::vector<Param> params = half;
    for (const auto& t : half) params.push_back(Param::angle_sum(t, Param::infinity()));
    std::sort(params.begin(), params.end());
    return params;
  }
  if (force_convex || kind < 2) return sampler.distinct_params(6, true);
  auto params = sampler.distinct_params(6, false);
  if (kind == 6) {
    // Make DE parallel to AB: half-angle sums of the two chords agree.
    params[4] = Param::angle_sum(Param::angle_sum(params[0], params[1]), params[3].angle_negated());
    return params;
  }
  sampler.shuffle(params);
  return params;
}

MoebiusConfig sample_moebius_config(RandomRationalSampler& sampler, int n) {
  // Centered frame: reflecting across diameters sends angle a to 2b - a, so
  // the hypothesis holds iff vertex k + 2n + 1 sits at the antipode of
  // vertex k turned by +d, -d, +d, ... alternately. The first 2n + 1
  // vertices lie on the upper half circle (positive parameters).
  const auto half = static_cast<std::size_t>(2 * n + 1);
  std::vector<Param> first;
  while (first.size() < half) {
    const Rat t = sampler.rational().abs();
    if (t.is_zero() || std::find(first.begin(), first.end(), Param(t)) != first.end()) continue;
    first.emplace_back(t);
  }
  std::sort(first.begin(), first.end());

  const Rat step(BigInt(static_cast<long>(sampler.integer(1, 100))), BigInt(1000));
  Param turn(sampler.below(2) == 0 ? step : -step);
  std::vector<IdealPoint> verts;
  for (int tries = 0;; ++tries) {
    if (tries == 8) throw GeometryError(ErrorKind::DegenerateConfiguration, "no convex chain polygon for this draw");
    verts.clear();
    for (const auto& t : first) verts.push_back(param_point(t));
    for (std::size_t k = 0; k < half; ++k) {
      const Param antipode = Param::angle_sum(first[k], Param::infinity());
      verts.push_back(param_point(Param::angle_sum(antipode, k % 2 == 0 ? turn : turn.angle_negated())));
    }
    if (in_convex_position(verts)) break;
    turn = Param(turn.value() / Rat(2));
  }

  // Move the center by two reflections across random chords.
  ProjMap move(Matrix3{Triple{1, 0, 0}, Triple{0, 1, 0}, Triple{0, 0, 1}});
  for (int k = 0; k < 2; ++k) {
    const IdealPoint a = sampler.ideal_point(), b = sampler.ideal_point();
    if (a != b) move = reflection_across_chord(Chord(a, b)).map.compose(move);
  }
  for (auto& v : verts) v = IdealPoint(move.apply(v.point()));
  const ProjLine line = polar(Conic::unit_circle(), move.apply(ProjPoint(Triple{0, 0, 1})));

  const IdealPolygon polygon(verts);
  std::vector<ProjPoint> xs;
  for (std::size_t k = 0; k + 1 < half; ++k) xs.push_back(meet(polygon.side(k), line));
  return build_chain_polygon(n, line, xs, verts[0], verts[half]);
}

TrialResult run_trial(const CampaignSpec& spec, std::uint64_t trial) {
  for (std::uint64_t attempt = 0; attempt < kMaxResamples; ++attempt) {
    RandomRationalSampler sampler(derive_seed(spec.seed, trial, attempt));
    try {
      return TrialResult{trial, attempt, draw_and_verify(sampler, spec)};
    } catch (const GeometryError&) {
      // degenerate draw: resample with the next derived seed
    }
  }
  throw GeometryError(ErrorKind::InvalidSpec, "trial " + std::to_string(trial) + " stayed degenerate after resampling");
}

CampaignResult run_campaign(const CampaignSpec& spec) {
  validate(spec);
  std::vector<std::optional<TrialResult>> slots(spec.trials);
  const unsigned workers = std::max(1u, spec.threads == 0 ? std::thread::hardware_concurrency() : spec.threads);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::uint64_t i; (i = next.fetch_add(1)) < spec.trials && !failed;) {
      try {
        slots[i] = run_trial(spec, i);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  CampaignResult out{{spec.theorem, spec.seed, spec.trials, 0, 0, 0}, {}};
  out.trials.reserve(spec.trials);
  for (auto& s : slots) {
    out.summary.degenerate_resampled += s->resampled;
    (s->report.pass ? out.summary.passed : out.summary.failed) += 1;
    out.trials.push_back(std::move(*s));
  }
  return out;
}

}  // namespace mysticum
