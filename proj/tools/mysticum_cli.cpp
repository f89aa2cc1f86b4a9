// Command-line front end: seeded verification campaigns, single-instance
// rendering and Pascal-line enumeration.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "mysticum/campaign.hpp"
#include "mysticum/error.hpp"
#include "mysticum/report_io.hpp"

namespace {

using namespace mysticum;

std::vector<Param> parse_params(const std::string& text) {
  std::vector<Param> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(Param::parse(item));
  }
  return out;
}

std::vector<IdealPoint> to_points(const std::vector<Param>& params) {
  std::vector<IdealPoint> pts;
  for (const auto& t : params) pts.push_back(param_point(t));
  return pts;
}

/// Report for a user-supplied parameter list.
VerificationReport explicit_report(TheoremId id, const std::vector<Param>& params, int n, double epsilon) {
  const auto pts = to_points(params);
  switch (id) {
    case TheoremId::Pascal: return verify_pascal(pts);
    case TheoremId::Prop2: return verify_prop2(IdealPolygon(pts));
    case TheoremId::Quadrilateral:
      if (pts.size() != 4) throw GeometryError(ErrorKind::InvalidSpec, "quadrilateral needs 4 parameters");
      return verify_quadrilateral_lemma(pts[0], pts[1], pts[2], pts[3]);
    case TheoremId::Bisectors: return verify_bisector_concurrency(IdealPolygon(pts), epsilon);
    case TheoremId::Brianchon: return verify_brianchon(pts);
    case TheoremId::Moebius: {
      IdealPolygon polygon(pts);
      const auto meets = opposite_meets(polygon);
      if (meets.size() != static_cast<std::size_t>(2 * n + 1))
        throw GeometryError(ErrorKind::InvalidSpec, "moebius needs 4n+2 parameters");
      const ProjLine line = join(meets[0], meets[1]);
      return verify_moebius(MoebiusConfig{n, std::move(polygon), line, meets});
    }
    default: throw GeometryError(ErrorKind::InvalidSpec, "explicit parameters are not supported for this theorem");
  }
}

int print_summary(const CampaignSummary& s) {
  std::cout << to_string(s.theorem) << ": trials=" << s.trials << " pass=" << s.passed << " fail=" << s.failed
            << " degenerate_resampled=" << s.degenerate_resampled << " seed=" << s.seed << '\n';
  return s.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact projective and Klein-model verifier for Pascal, Brianchon and Moebius configurations"};
  app.require_subcommand(1);

  CampaignSpec spec;
  std::string theorem;
  std::string json_path;
  std::string svg_path;
  std::string params_text;
  std::uint64_t trial = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", spec.seed, "64-bit campaign seed");
    cmd->add_option("--n", spec.n, "Moebius order: polygons have 4n+2 vertices")->check(CLI::PositiveNumber);
    cmd->add_option("--epsilon", spec.epsilon, "tolerance for distance comparisons");
    cmd->add_flag("--convex", spec.convex, "sample vertices in convex cyclic order");
    cmd->add_option("--json", json_path, "write the JSON certificate here");
    cmd->add_option("--svg", svg_path, "write an SVG figure here");
    cmd->add_option("--params", params_text, "explicit circle parameters, e.g. 0,1/2,1,2,inf,-1");
  };

  auto* verify = app.add_subcommand("verify", "run a seeded verification campaign");
  verify->add_option("theorem", theorem,
                     "pascal | prop2 | quadrilateral | bisectors | brianchon | moebius | region-lemma | pascal-lines")
      ->required();
  verify->add_option("--trials", spec.trials, "number of trials");
  verify->add_option("--points", spec.points, "interior sample points per region-lemma trial");
  verify->add_option("--threads", spec.threads, "worker threads (0 = all cores)");
  verify->add_flag("--mutate", spec.mutate, "moebius negative control: replace one vertex per trial");
  add_common(verify);

  auto* render = app.add_subcommand("render", "render one instance as SVG");
  render->add_option("theorem", theorem, "theorem id")->required();
  render->add_option("--trial", trial, "trial index within the seeded campaign");
  add_common(render);

  auto* enumerate = app.add_subcommand("enumerate-pascal-lines", "list the 60 Pascal lines of six points");
  add_common(enumerate);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed() || render->parsed()) {
      const auto id = parse_theorem(theorem);
      if (!id) throw GeometryError(ErrorKind::InvalidSpec, "unknown theorem '" + theorem + "'");
      spec.theorem = *id;
      validate(spec);
    }

    if (verify->parsed()) {
      if (!params_text.empty()) {
        const auto report = explicit_report(spec.theorem, parse_params(params_text), spec.n, spec.epsilon);
        if (!json_path.empty()) emit_json(report_to_json(report, spec.seed, 0), json_path);
        if (!svg_path.empty()) write_svg(report, svg_path);
        std::cout << report.theorem << ": " << (report.pass ? "pass" : "FAIL") << '\n';
        return report.pass ? 0 : 1;
      }
      const CampaignResult result = run_campaign(spec);
      if (!json_path.empty()) emit_json(campaign_to_json(result), json_path);
      if (!svg_path.empty()) write_svg(result.trials.front().report, svg_path);
      return print_summary(result.summary);
    }

    if (render->parsed()) {
      if (svg_path.empty()) throw GeometryError(ErrorKind::InvalidSpec, "render needs --svg");
      const VerificationReport report = params_text.empty()
                                            ? run_trial(spec, trial).report
                                            : explicit_report(spec.theorem, parse_params(params_text), spec.n,
                                                              spec.epsilon);
      write_svg(report, svg_path);
      if (!json_path.empty()) emit_json(report_to_json(report, spec.seed, trial), json_path);
      return 0;
    }

    if (enumerate->parsed()) {
      std::vector<IdealPoint> pts;
      if (params_text.empty()) {
        RandomRationalSampler sampler(derive_seed(spec.seed, 0, 0));
        pts = to_points(sampler.distinct_params(6, false));
      } else {
        pts = to_points(parse_params(params_text));
      }
      const auto entries = enumerate_pascal_lines(pts);
      nlohmann::json lines = nlohmann::json::array();
      bool ok = entries.size() == 60;
      for (const auto& e : entries) {
        std::cout << e.label << "  " << e.line.str() << "  det=" << e.witness.str() << '\n';
        lines.push_back({{"ordering", e.label},
                         {"line", {e.line.coeffs()[0].str(), e.line.coeffs()[1].str(), e.line.coeffs()[2].str()}},
                         {"witness", e.witness.str()}});
        ok = ok && e.witness.is_zero();
      }
      if (!json_path.empty()) {
        nlohmann::json params = nlohmann::json::array();
        for (const auto& p : pts) params.push_back(p.param().str());
        emit_json({{"theorem", "pascal-lines"}, {"seed", spec.seed}, {"params", params}, {"count", entries.size()},
                   {"lines", lines}, {"pass", ok}},
                  json_path);
      }
      return ok ? 0 : 1;
    }
  } catch (const GeometryError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
