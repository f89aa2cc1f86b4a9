#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "mysticum/campaign.hpp"

namespace mysticum {

/// { theorem, seed, trial, params, objects: {points, lines}, labels,
///   witnesses, pass } plus "numeric" and "signs" when present. Rationals and
/// coordinates are exact decimal strings.
nlohmann::json report_to_json(const VerificationReport& report, std::uint64_t seed, std::uint64_t trial);
nlohmann::json summary_to_json(const CampaignSummary& summary);
/// { summary, reports: [...] } with reports ordered by trial index.
nlohmann::json campaign_to_json(const CampaignResult& result);

/// Stable serialization: sorted keys, two-space indent, trailing newline.
std::string dump_json(const nlohmann::json& doc);
void emit_json(const nlohmann::json& doc, const std::filesystem::path& path);  // throws IoError

struct SvgOptions {
  double xmin = -3.5, xmax = 3.5, ymin = -3.5, ymax = 3.5;  // viewport in model units
  double size = 640.0;                                        // pixels along the longer side
  /// Enlarge the viewport to show every finite constructed point (capped).
  bool fit_points = true;
  double max_extent = 12.0;
};

std::string render_svg(const VerificationReport& report, const SvgOptions& options = {});
void write_svg(const VerificationReport& report, const std::filesystem::path& path, const SvgOptions& options = {});

}  // namespace mysticum
