#include "mysticum/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mysticum/error.hpp"

namespace mysticum {

namespace {

using nlohmann::json;

json triple_json(const Triple& t) { return json::array({t[0].str(), t[1].str(), t[2].str()}); }

std::string_view role_name(Role r) {
  switch (r) {
    case Role::Vertex: return "vertex";
    case Role::Constructed: return "constructed";
    case Role::Side: return "side";
    case Role::Diagonal: return "diagonal";
    case Role::Perpendicular: return "perpendicular";
    case Role::Certificate: return "certificate";
  }
  return "constructed";
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GeometryError(ErrorKind::IoError, "cannot open " + path.string());
  out << text;
  if (!out) throw GeometryError(ErrorKind::IoError, "cannot write " + path.string());
}

}  // namespace

json report_to_json(const VerificationReport& report, std::uint64_t seed, std::uint64_t trial) {
  json points = json::array();
  json point_labels = json::array();
  for (const auto& p : report.points) {
    points.push_back(triple_json(p.point.coords()));
    point_labels.push_back({{"label", p.label}, {"role", role_name(p.role)}});
  }
  json lines = json::array();
  json line_labels = json::array();
  for (const auto& l : report.lines) {
    lines.push_back(triple_json(l.line.coeffs()));
    line_labels.push_back({{"label", l.label}, {"role", role_name(l.role)}});
  }
  json witnesses = json::array();
  for (const auto& w : report.witnesses) witnesses.push_back(w.str());

  json doc{{"theorem", report.theorem},
           {"seed", seed},
           {"trial", trial},
           {"params", report.params},
           {"objects", {{"points", points}, {"lines", lines}}},
           {"labels", {{"points", point_labels}, {"lines", line_labels}}},
           {"witnesses", witnesses},
           {"pass", report.pass}};
  if (!report.numeric.empty()) {
    json numeric = json::array();
    for (const auto& c : report.numeric)
      numeric.push_back({{"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance}, {"ok", c.ok()}});
    doc["numeric"] = numeric;
  }
  if (!report.signs.empty()) doc["signs"] = report.signs;
  return doc;
}

json summary_to_json(const CampaignSummary& s) {
  return {{"theorem", to_string(s.theorem)}, {"seed", s.seed},     {"trials", s.trials},
          {"pass", s.passed},                {"fail", s.failed}, {"degenerate_resampled", s.degenerate_resampled}};
}

json campaign_to_json(const CampaignResult& result) {
  json reports = json::array();
  for (const auto& t : result.trials) reports.push_back(report_to_json(t.report, result.summary.seed, t.trial));
  return {{"summary", summary_to_json(result.summary)}, {"reports", reports}};
}

std::string dump_json(const json& doc) { return doc.dump(2) + "\n"; }

void emit_json(const json& doc, const std::filesystem::path& path) { write_text(path, dump_json(doc)); }

namespace {

struct Viewport {
  double xmin, xmax, ymin, ymax, scale;
  double px(double x) const { return (x - xmin) * scale; }
  double py(double y) const { return (ymax - y) * scale; }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Clip the infinite line a x + b y + c = 0 to the viewport rectangle.
std::optional<std::array<double, 4>> clip_line(const ProjLine& line, const Viewport& vp) {
  const double a = line.coeffs()[0].to_double();
  const double b = line.coeffs()[1].to_double();
  const double c = line.coeffs()[2].to_double();
  const double norm = std::hypot(a, b);
  if (norm == 0.0 || !std::isfinite(norm)) return std::nullopt;
  std::vector<std::array<double, 2>> hits;
  auto add = [&](double x, double y) {
    constexpr double slack = 1e-9;
    if (x >= vp.xmin - slack && x <= vp.xmax + slack && y >= vp.ymin - slack && y <= vp.ymax + slack)
      hits.push_back({x, y});
  };
  if (b != 0.0) {
    add(vp.xmin, -(a * vp.xmin + c) / b);
    add(vp.xmax, -(a * vp.xmax + c) / b);
  }
  if (a != 0.0) {
    add(-(b * vp.ymin + c) / a, vp.ymin);
    add(-(b * vp.ymax + c) / a, vp.ymax);
  }
  if (hits.size() < 2) return std::nullopt;
  // Farthest pair among the hits.
  std::array<double, 4> best{};
  double best_d = -1.0;
  for (std::size_t i = 0; i < hits.size(); ++i)
    for (std::size_t j = i + 1; j < hits.size(); ++j) {
      const double d = std::hypot(hits[i][0] - hits[j][0], hits[i][1] - hits[j][1]);
      if (d > best_d) {
        best_d = d;
        best = {hits[i][0], hits[i][1], hits[j][0], hits[j][1]};
      }
    }
  return best;
}

std::string_view line_color(Role r) {
  switch (r) {
    case Role::Certificate: return "#ff6600";
    case Role::Perpendicular: return "#ff9900";
    case Role::Diagonal: return "#996633";
    case Role::Side: return "#333333";
    default: return "#4d4dff";
  }
}

}  // namespace

std::string render_svg(const VerificationReport& report, const SvgOptions& options) {
  double xmin = options.xmin, xmax = options.xmax, ymin = options.ymin, ymax = options.ymax;
  if (options.fit_points) {
    for (const auto& p : report.points) {
      if (p.point.at_infinity()) continue;
      const double x = p.point.affine_x().to_double();
      const double y = p.point.affine_y().to_double();
      if (std::abs(x) > options.max_extent || std::abs(y) > options.max_extent) continue;
      xmin = std::min(xmin, x - 0.5);
      xmax = std::max(xmax, x + 0.5);
      ymin = std::min(ymin, y - 0.5);
      ymax = std::max(ymax, y + 0.5);
    }
  }
  const double scale = options.size / std::max(xmax - xmin, ymax - ymin);
  const Viewport vp{xmin, xmax, ymin, ymax, scale};
  const double width = (xmax - xmin) * scale;
  const double height = (ymax - ymin) * scale;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
  svg << "  <title>" << escape(report.theorem.empty() ? "unit circle" : report.theorem) << "</title>\n";
  svg << "  <rect x=\"0\" y=\"0\" width=\"" << fmt(width) << "\" height=\"" << fmt(height) << "\" fill=\"white\"/>\n";
  svg << "  <circle cx=\"" << fmt(vp.px(0)) << "\" cy=\"" << fmt(vp.py(0)) << "\" r=\"" << fmt(scale)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";

  // Certificate lines last so they sit on top.
  std::vector<const NamedLine*> ordered;
  for (const auto& l : report.lines) ordered.push_back(&l);
  std::stable_partition(ordered.begin(), ordered.end(), [](const NamedLine* l) { return l->role != Role::Certificate; });
  for (const NamedLine* l : ordered) {
    const auto seg = clip_line(l->line, vp);
    if (!seg) continue;
    const bool cert = l->role == Role::Certificate;
    svg << "  <line x1=\"" << fmt(vp.px((*seg)[0])) << "\" y1=\"" << fmt(vp.py((*seg)[1])) << "\" x2=\""
        << fmt(vp.px((*seg)[2])) << "\" y2=\"" << fmt(vp.py((*seg)[3])) << "\" stroke=\"" << line_color(l->role)
        << "\" stroke-width=\"" << (cert ? "3" : "1.5") << "\"><title>" << escape(l->label) << "</title></line>\n";
  }
  for (const auto& p : report.points) {
    if (p.point.at_infinity()) continue;
    const double x = p.point.affine_x().to_double();
    const double y = p.point.affine_y().to_double();
    if (x < xmin || x > xmax || y < ymin || y > ymax) continue;
    const bool vertex = p.role == Role::Vertex;
    svg << "  <circle cx=\"" << fmt(vp.px(x)) << "\" cy=\"" << fmt(vp.py(y)) << "\" r=\"" << (vertex ? "4" : "3")
        << "\" fill=\"" << (vertex ? "#4d4dff" : "#444444") << "\"/>\n";
    svg << "  <text x=\"" << fmt(vp.px(x) + 6) << "\" y=\"" << fmt(vp.py(y) - 6)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(p.label) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void write_svg(const VerificationReport& report, const std::filesystem::path& path, const SvgOptions& options) {
  write_text(path, render_svg(report, options));
}

}  // namespace mysticum
