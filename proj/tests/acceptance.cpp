// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "mysticum/campaign.hpp"
#include "mysticum/error.hpp"
#include "mysticum/report_io.hpp"
#include "mysticum/theorems.hpp"

using namespace mysticum;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

const Conic& circle() { return Conic::unit_circle(); }

ProjPoint pt(long x, long y, long w) { return ProjPoint(Rat(x), Rat(y), Rat(w)); }
ProjLine ln(long a, long b, long c) { return ProjLine(Rat(a), Rat(b), Rat(c)); }
Rat q(long n, long d) { return Rat(BigInt(n), BigInt(d)); }

std::vector<Param> worked_params() {
  return {Param(0), Param(q(1, 2)), Param(1), Param(2), Param::infinity(), Param(-1)};
}

std::vector<IdealPoint> points_of(const std::vector<Param>& ts) {
  std::vector<IdealPoint> out;
  for (const auto& t : ts) out.push_back(param_point(t));
  return out;
}

CampaignSpec spec(TheoremId id, std::uint64_t trials, std::uint64_t seed) {
  CampaignSpec s;
  s.theorem = id;
  s.trials = trials;
  s.seed = seed;
  s.threads = 0;
  return s;
}

std::string counts(const CampaignSummary& s) {
  return std::to_string(s.passed) + "/" + std::to_string(s.trials) + " pass, " +
         std::to_string(s.degenerate_resampled) + " degenerate draws resampled";
}

Outcome pascal_exactness() {
  const auto r = run_campaign(spec(TheoremId::Pascal, 10000, 1));
  std::uint64_t at_infinity = 0, convex = 0;
  bool zero = true;
  for (const auto& t : r.trials) {
    zero = zero && std::all_of(t.report.witnesses.begin(), t.report.witnesses.end(), [](const Rat& w) { return w.is_zero(); });
    const auto* x = t.report.find_point("X");
    const auto* y = t.report.find_point("Y");
    const auto* z = t.report.find_point("Z");
    if (x->point.at_infinity() || y->point.at_infinity() || z->point.at_infinity()) ++at_infinity;
    std::vector<Param> ps;
    for (const auto& s : t.report.params) ps.push_back(Param::parse(s));
    if (in_convex_position(points_of(ps))) ++convex;
  }
  const bool mixed = convex > 0 && convex < r.summary.trials && at_infinity > 0;
  return {zero && r.summary.failed == 0 && mixed,
          counts(r.summary) + "; " + std::to_string(convex) + " convex, " + std::to_string(at_infinity) +
              " with a meet at infinity"};
}

Outcome worked_example() {
  const IdealPolygon hex = IdealPolygon::from_params(worked_params());
  const auto pascal = verify_pascal(hex);
  const auto prop2 = verify_prop2(hex);
  const Reflection refl = reflection_across_chord(Chord::from_line(ln(0, 2, -1)));
  const Matrix3 expected{Triple{1, 0, 0}, Triple{0, q(-5, 3), q(4, 3)}, Triple{0, q(-4, 3), q(5, 3)}};
  std::vector<std::pair<std::string, bool>> checks{
      {"X", pascal.find_point("X")->point.coords() == Triple{0, 2, 1}},
      {"Y", pascal.find_point("Y")->point.coords() == Triple{-3, 2, 1}},
      {"Z", pascal.find_point("Z")->point.coords() == Triple{3, 2, 1}},
      {"pascal line", pascal.find_line("pascal")->line == ln(0, 1, -2)},
      {"det", pascal.pass && pascal.witnesses.at(0).is_zero()},
      // Lines are equal up to scale; the canonical sign puts the first nonzero entry positive.
      {"l1", prop2.find_line("l1")->line == ln(0, 2, -1)},
      {"l2", prop2.find_line("l2")->line == ln(-3, 2, -1)},
      {"l3", prop2.find_line("l3")->line == ln(3, 2, -1)},
      {"O", prop2.find_point("O")->point == ProjPoint::affine(0, q(1, 2)) &&
                prop2.find_point("O")->point == pole(circle(), ln(0, 1, -2))},
      {"reflection", refl.map.proportional_to(ProjMap(expected))},
      {"A->B", refl.map.apply(pt(1, 0, 1)).coords() == Triple{3, 4, 5}},
  };
  std::string failed;
  for (const auto& [name, ok] : checks)
    if (!ok) failed += " " + name;
  return {failed.empty(), failed.empty() ? "all 11 values exact" : "mismatch:" + failed};
}

Outcome polarity_bridge() {
  auto s = spec(TheoremId::Prop2, 1000, 3);
  const auto r = run_campaign(s);
  std::uint64_t bridged = 0;
  for (const auto& t : r.trials) {
    std::vector<Param> ps;
    for (const auto& p : t.report.params) ps.push_back(Param::parse(p));
    const auto pp = pascal_points(IdealPolygon::from_params(ps));
    if (pp.line && t.report.find_point("O")->point == pole(circle(), *pp.line)) ++bridged;
  }
  return {r.summary.failed == 0 && bridged == 1000, std::to_string(bridged) + "/1000 concurrency points equal the pole"};
}

Outcome lemma4() {
  RandomRationalSampler sampler(4);
  int swapped = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto p = points_of(sampler.distinct_params(4, true));
    const ProjMap m = reflection_across_chord(bisector_of_ideal_quadrilateral(p[0], p[1], p[2], p[3])).map;
    if (m.apply(p[0].point()) == p[1].point() && m.apply(p[1].point()) == p[0].point() &&
        m.apply(p[2].point()) == p[3].point() && m.apply(p[3].point()) == p[2].point())
      ++swapped;
  }
  const auto r = run_campaign(spec(TheoremId::Quadrilateral, 1000, 4));
  return {swapped == 1000 && r.summary.failed == 0,
          std::to_string(swapped) + "/1000 exact swaps; lemma campaign " + counts(r.summary)};
}

Outcome moebius() {
  std::ostringstream out;
  bool ok = true;
  for (int n : {1, 2, 3}) {
    auto s = spec(TheoremId::Moebius, 1000, 50 + static_cast<std::uint64_t>(n));
    s.n = n;
    const auto r = run_campaign(s);
    bool last_zero = true;
    for (const auto& t : r.trials) last_zero = last_zero && t.report.witnesses.back().is_zero();
    ok = ok && r.summary.failed == 0 && last_zero;
    out << "n=" << n << ": " << r.summary.passed << "/1000; ";
  }
  std::uint64_t caught = 0, total = 0;
  for (int n : {1, 2, 3}) {
    auto s = spec(TheoremId::Moebius, 1000, 60 + static_cast<std::uint64_t>(n));
    s.n = n;
    s.mutate = true;
    const auto r = run_campaign(s);
    caught += r.summary.failed;
    total += r.summary.trials;
  }
  const double rate = static_cast<double>(caught) / static_cast<double>(total);
  ok = ok && rate >= 0.99;
  out << "mutations detected " << caught << "/" << total;
  return {ok, out.str()};
}

Outcome region_lemma() {
  auto s = spec(TheoremId::RegionLemma, 1000, 6);
  s.n = 2;
  s.points = 1000;
  const auto r = run_campaign(s);
  Rat violations(0);
  for (const auto& t : r.trials) violations = violations + t.report.witnesses.at(0);

  // Even number of diagonals (octagons): any point inside the first three
  // regions violates the closing inequality.
  RandomRationalSampler sampler(66);
  int parity_violations = 0;
  for (int i = 0; i < 100 && parity_violations == 0; ++i) {
    std::vector<SignedLineForm> forms;
    try {
      forms = normalized_line_forms(IdealPolygon::from_params(sampler.distinct_params(8, true)));
    } catch (const GeometryError&) {
      continue;
    }
    for (int j = 0; j < 1000; ++j) {
      try {
        if (!verify_region_lemma(forms, sampler.interior_point().point()).pass) ++parity_violations;
      } catch (const GeometryError&) {
      }
    }
  }
  return {r.summary.failed == 0 && violations.is_zero() && parity_violations > 0,
          "decagons " + counts(r.summary) + ", " + violations.str() + " violations in 10^6 points; octagon demo " +
              std::to_string(parity_violations) + " violations"};
}

Outcome hilbert() {
  constexpr double eps = 1e-12;
  const HPoint o = HPoint::affine(0, 0);
  const double err = std::fabs(hilbert_distance(o, HPoint::affine(0, q(1, 2))) - 0.5 * std::log(3.0));
  bool ok = err < eps;
  RandomRationalSampler sampler(7);
  int bad = 0;
  for (int i = 0; i < 500; ++i) {
    const HPoint a = sampler.interior_point(), b = sampler.interior_point(), c = sampler.interior_point();
    const double ab = hilbert_distance(a, b), ba = hilbert_distance(b, a);
    const double bc = hilbert_distance(b, c), ac = hilbert_distance(a, c);
    if (std::fabs(ab - ba) >= eps) ++bad;
    if (hilbert_distance(a, a) != 0.0 || (a != b && !(ab > 0.0))) ++bad;
    if (ac > ab + bc + eps) ++bad;
    IdealPoint e = sampler.ideal_point(), f = sampler.ideal_point();
    while (e == f) f = sampler.ideal_point();
    const ProjMap m = reflection_across_chord(Chord(e, f)).map;
    const double image = hilbert_distance(HPoint(m.apply(a.point())), HPoint(m.apply(b.point())));
    if (std::fabs(image - ab) >= eps) ++bad;
  }
  ok = ok && bad == 0;
  std::ostringstream out;
  out << "|d - log(3)/2| = " << err << "; " << bad << " property violations in 500 samples";
  return {ok, out.str()};
}

Outcome bisectors() {
  auto s = spec(TheoremId::Bisectors, 200, 8);
  s.epsilon = 1e-10;
  const auto r = run_campaign(s);
  double worst = 0.0;
  for (const auto& t : r.trials) {
    const HPoint in(t.report.find_point("I")->point);
    std::array<double, 3> d{};
    int k = 0;
    for (const char* name : {"AD", "BE", "CF"})
      d[k++] = point_to_chord_distance(in, Chord::from_line(t.report.find_line(name)->line));
    worst = std::max(worst, *std::max_element(d.begin(), d.end()) - *std::min_element(d.begin(), d.end()));
  }
  std::ostringstream out;
  out << counts(r.summary) << "; worst spread " << worst;
  return {r.summary.failed == 0 && worst < 1e-10, out.str()};
}

Outcome enumeration() {
  RandomRationalSampler sampler(9);
  int matched = 0;
  constexpr int kSextuples = 20;
  for (int i = 0; i < kSextuples; ++i) {
    const auto pts = points_of(sampler.distinct_params(6, false));
    const auto entries = enumerate_pascal_lines(pts);
    // Brute force: every permutation, keyed by its unordered side set.
    std::map<std::set<std::pair<int, int>>, std::string> lines;
    std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
    bool consistent = true;
    do {
      std::set<std::pair<int, int>> sides;
      std::vector<IdealPoint> verts;
      for (int k = 0; k < 6; ++k) {
        sides.insert(std::minmax(perm[k], perm[(k + 1) % 6]));
        verts.push_back(pts[static_cast<std::size_t>(perm[k])]);
      }
      const std::string line = pascal_points(IdealPolygon(verts)).line->str();
      const auto [it, inserted] = lines.emplace(sides, line);
      if (!inserted && it->second != line) consistent = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::set<std::set<std::pair<int, int>>> emitted;
    bool same_lines = true;
    for (const auto& e : entries) {
      std::set<std::pair<int, int>> sides;
      for (int k = 0; k < 6; ++k) sides.insert(std::minmax(e.ordering[k], e.ordering[(k + 1) % 6]));
      emitted.insert(sides);
      const auto it = lines.find(sides);
      same_lines = same_lines && it != lines.end() && it->second == e.line.str() && e.witness.is_zero();
    }
    if (entries.size() == 60 && lines.size() == 60 && emitted.size() == 60 && consistent && same_lines) ++matched;
  }
  return {matched == kSextuples, std::to_string(matched) + "/" + std::to_string(kSextuples) +
                                     " sextuples: 60 orderings matching the 720-permutation dedup"};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome determinism() {
  const std::filesystem::path work = MYSTICUM_WORK_DIR;
  std::filesystem::create_directories(work);
  const std::string cli = MYSTICUM_CLI;
  const std::vector<std::pair<std::string, std::string>> runs{
      {"pascal", "verify pascal --trials 200 --seed 101"},
      {"moebius", "verify moebius --n 3 --trials 50 --seed 102 --threads 4"},
      {"region", "verify region-lemma --n 2 --trials 5 --points 100 --seed 103"},
      {"enumerate", "enumerate-pascal-lines --seed 104"},
  };
  int identical = 0;
  for (const auto& [name, args] : runs) {
    std::array<std::string, 2> text;
    bool ran = true;
    for (int k = 0; k < 2; ++k) {
      const auto path = work / (name + "_" + std::to_string(k) + ".json");
      std::filesystem::remove(path);
      const std::string cmd = "\"" + cli + "\" " + args + " --json \"" + path.string() + "\" > /dev/null";
      ran = ran && std::system(cmd.c_str()) == 0;
      text[static_cast<std::size_t>(k)] = slurp(path);
    }
    if (ran && !text[0].empty() && text[0] == text[1]) ++identical;
  }
  return {identical == static_cast<int>(runs.size()),
          std::to_string(identical) + "/" + std::to_string(runs.size()) + " CLI commands byte-identical across runs"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"pascal exactness", pascal_exactness},
      {"worked example", worked_example},
      {"polarity bridge", polarity_bridge},
      {"quadrilateral lemma", lemma4},
      {"moebius", moebius},
      {"region lemma", region_lemma},
      {"hilbert distance", hilbert},
      {"bisector equidistance", bisectors},
      {"pascal line enumeration", enumeration},
      {"determinism", determinism},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.ok) ++failures;
    std::printf("[%s] %2d %-24s %s (%.1fs)\n", o.ok ? "PASS" : "FAIL", index, name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
