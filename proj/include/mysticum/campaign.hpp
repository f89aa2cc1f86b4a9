#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mysticum/moebius.hpp"
#include "mysticum/sampler.hpp"

namespace mysticum {

enum class TheoremId { Pascal, Prop2, Quadrilateral, Bisectors, Brianchon, Moebius, RegionLemma, PascalLines };

std::optional<TheoremId> parse_theorem(std::string_view name);
std::string_view to_string(TheoremId id);

struct CampaignSpec {
  TheoremId theorem = TheoremId::Pascal;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  int n = 1;                         // moebius / region-lemma
  double epsilon = kDefaultEpsilon;  // numeric checks
  bool convex = false;               // force convex order where optional
  bool mutate = false;               // moebius negative control
  std::uint64_t points = 1000;       // region-lemma sample points per config
  unsigned threads = 1;              // 0 = hardware concurrency
};

/// Throws InvalidSpec.
void validate(const CampaignSpec& spec);

struct TrialResult {
  std::uint64_t trial;
  std::uint64_t resampled;  // degenerate draws replaced before this one
  VerificationReport report;
};

struct CampaignSummary {
  TheoremId theorem;
  std::uint64_t seed;
  std::uint64_t trials;
  std::uint64_t passed;
  std::uint64_t failed;
  std::uint64_t degenerate_resampled;
};

struct CampaignResult {
  CampaignSummary summary;
  std::vector<TrialResult> trials;  // ordered by trial index
};

/// One trial; depends only on (spec, trial), never on scheduling.
TrialResult run_trial(const CampaignSpec& spec, std::uint64_t trial);
CampaignResult run_campaign(const CampaignSpec& spec);

/// Seeded chain-built (4n+2)-gon with its line missing the closed disk.
MoebiusConfig sample_moebius_config(RandomRationalSampler& sampler, int n);

/// Hexagon parameters: convex, shuffled, with a pair of parallel opposite
/// sides, or centrally symmetric (all meets at infinity).
std::vector<Param> sample_hexagon_params(RandomRationalSampler& sampler, bool force_convex);

}  // namespace mysticum
