#pragma once

#include <span>
#include <vector>

#include "mysticum/theorems.hpp"

namespace mysticum {

/// A (4n+2)-gon whose first 2n opposite-side meets lie on a common line.
///
/// Indices are 0-based throughout: vertex i is A_{i+1}, opposite_meets[i]
/// is X_{i+1} = side(i) . side(i + 2n + 1).
struct MoebiusConfig {
  int n;
  IdealPolygon polygon;
  ProjLine line;
  std::vector<ProjPoint> opposite_meets;

  /// All meets strictly outside the closed disk, so every pair of opposite
  /// sides has a common perpendicular.
  bool perpendiculars_exist() const;
};

/// side(i) . side(i + k) for a polygon with 2k vertices.
std::vector<ProjPoint> opposite_meets(const IdealPolygon& polygon);

/// Chain construction: A_{k+1} is the second intersection of the circle with
/// the line A_k X_k; the first half starts at a1, the second at a_mid.
/// Throws NotExterior, TangentEncounter, RepeatedVertex.
MoebiusConfig build_chain_polygon(int n, const ProjLine& line, std::span<const ProjPoint> xs, const IdealPoint& a1,
                                  const IdealPoint& a_mid);

/// Same line and n, vertex `index` replaced; meets are recomputed.
MoebiusConfig with_vertex_replaced(const MoebiusConfig& cfg, std::size_t index, const IdealPoint& replacement);

/// Witnesses L(X_1), ..., L(X_{2n+1}) with X_i recomputed from the vertices.
/// The first 2n restate the hypothesis; the last one is the conclusion.
VerificationReport verify_moebius(const MoebiusConfig& cfg);

/// Diagonal m_i through A_i and A_{i+k}, signed so that m_i(A_{i+1}) > 0.
struct SignedLineForm {
  std::size_t index;
  Triple coeffs;

  /// Value at the affine representative (w = 1) of p.
  Rat evaluate(const ProjPoint& p) const;
};

std::vector<SignedLineForm> normalized_line_forms(const IdealPolygon& polygon);
std::vector<SignedLineForm> normalized_line_forms(const MoebiusConfig& cfg);

/// Region i (0-based) of k forms: m_i m_{i+1} < 0 for i < k - 1, and
/// m_{k-1} m_0 > 0 for the closing region. Throws OnBoundary.
bool region_membership(std::span<const SignedLineForm> forms, const ProjPoint& p, std::size_t i);

/// Checks: p in regions 0..k-2 implies p in region k-1. Holds whenever k is
/// odd; with an even number of forms the report exposes the parity failure.
VerificationReport verify_region_lemma(std::span<const SignedLineForm> forms, const ProjPoint& p);

/// Polars of X_1..X_{2n}, the common perpendiculars of the first 2n pairs.
std::vector<ProjLine> hypothesis_perpendiculars(const MoebiusConfig& cfg);

/// If p lies on every hypothesis perpendicular (exact; NotConcurrent
/// otherwise), checks that p is equidistant from all 2n+1 diagonals within
/// epsilon.
bool bisector_equidistance_check(const MoebiusConfig& cfg, const HPoint& p, double epsilon = kDefaultEpsilon);

/// Largest minus smallest distance from p to the diagonals.
double diagonal_distance_spread(const MoebiusConfig& cfg, const HPoint& p);

}  // namespace mysticum
