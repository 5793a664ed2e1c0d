#pragma once

#include "fuzzyspline/fuzzy_core.hpp"

namespace fuzzyspline {

/// A fuzzy data point after the alpha-cut, tagged with the cut level.
struct AlphaCutPoint {
  FuzzyDataPoint point;
  double alpha = 0.0;

  bool operator==(const AlphaCutPoint&) const = default;
};

/// Type-1 triple left by centroid-min type reduction.
struct ReducedPoint {
  CrispPoint left;
  CrispPoint crisp;
  CrispPoint right;
  double alpha = 0.0;

  bool operator==(const ReducedPoint&) const = default;
};

/// Output of all three point-level stages.
struct StageRecord {
  AlphaCutPoint alpha_cut;
  ReducedPoint reduced;
  CrispPoint defuzzified;
};

/// Affine blend `(1 - alpha) * v + alpha * target`.
///
/// Exact at alpha = 0 (returns v) and alpha = 1 (returns target). The result
/// is kept inside the closed segment [v, target] per coordinate so rounding
/// can never break the ordering of the lateral points.
CrispPoint shrink_toward(const CrispPoint& v, const CrispPoint& target, double alpha) noexcept;

/// Mean of three points, clamped per coordinate into the range of its inputs.
CrispPoint mean_of_three(const CrispPoint& a, const CrispPoint& b, const CrispPoint& c) noexcept;

/// Moves every lateral point toward the crisp point by factor alpha.
/// Throws DomainError for alpha outside [0, 1], ValidationError for invalid p.
AlphaCutPoint alpha_cut(const FuzzyDataPoint& p, double alpha);

/// left = mean(ll, l, rl), right = mean(lr, r, rr); crisp carried through.
ReducedPoint type_reduce(const AlphaCutPoint& a);

/// Mean of (left, crisp, right).
CrispPoint defuzzify(const ReducedPoint& r);

StageRecord run_point_pipeline(const FuzzyDataPoint& p, double alpha);

/// Per-coordinate monotonicity of (left, crisp, right).
ValidationReport validate_reduced(const ReducedPoint& r);

}  // namespace fuzzyspline
