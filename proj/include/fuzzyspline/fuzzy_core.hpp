#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzyspline/validation.hpp"

namespace fuzzyspline {

/// A plain 2D point in model units.
struct CrispPoint {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const CrispPoint&) const = default;

  CrispPoint& operator+=(const CrispPoint& o) noexcept {
    x += o.x;
    y += o.y;
    return *this;
  }
  friend CrispPoint operator+(CrispPoint a, const CrispPoint& b) noexcept { return a += b; }
  friend CrispPoint operator-(const CrispPoint& a, const CrispPoint& b) noexcept {
    return {a.x - b.x, a.y - b.y};
  }
  friend CrispPoint operator*(double s, const CrispPoint& p) noexcept { return {s * p.x, s * p.y}; }
  friend CrispPoint operator*(const CrispPoint& p, double s) noexcept { return s * p; }
};

/// Positions of the seven lateral points, left to right.
enum class Lateral : std::size_t { ll = 0, l, rl, crisp, lr, r, rr };

inline constexpr std::size_t kLateralCount = 7;

inline constexpr std::array<std::string_view, kLateralCount> kLateralNames = {
    "ll", "l", "rl", "crisp", "lr", "r", "rr"};

constexpr std::string_view lateral_name(Lateral which) noexcept {
  return kLateralNames[static_cast<std::size_t>(which)];
}

/// Perfectly normal type-2 fuzzy data point.
///
/// The left footprint (ll, l, rl) and the right footprint (lr, r, rr) sit on
/// either side of the crisp point. Primary memberships are the triangular
/// functions with apex grade 1 at the crisp point, so only the seven
/// abscissae are stored.
struct FuzzyDataPoint {
  CrispPoint ll;
  CrispPoint l;
  CrispPoint rl;
  CrispPoint crisp;
  CrispPoint lr;
  CrispPoint r;
  CrispPoint rr;

  bool operator==(const FuzzyDataPoint&) const = default;

  std::array<CrispPoint, kLateralCount> lateral() const { return {ll, l, rl, crisp, lr, r, rr}; }

  static FuzzyDataPoint from_lateral(const std::array<CrispPoint, kLateralCount>& v) {
    return {v[0], v[1], v[2], v[3], v[4], v[5], v[6]};
  }

  const CrispPoint& operator[](Lateral which) const noexcept;
  CrispPoint& operator[](Lateral which) noexcept;

  /// Every lateral position collapsed onto `p`.
  static FuzzyDataPoint crisp_only(const CrispPoint& p) { return {p, p, p, p, p, p, p}; }
};

/// Ordered fuzzy data points to be interpolated.
struct Dataset {
  std::vector<FuzzyDataPoint> points;
  std::string label;

  bool operator==(const Dataset&) const = default;

  std::vector<CrispPoint> crisp_points() const;
  std::vector<CrispPoint> channel(Lateral which) const;
};

/// Checks finiteness and per-coordinate monotonicity of the 7-sequence.
ValidationReport validate_point(const FuzzyDataPoint& p);

/// Per-point checks plus dataset-level ones (length, repeated crisp points).
ValidationReport validate_dataset(const Dataset& d);

/// Throws ValidationError when the report is not ok.
void require_valid(const FuzzyDataPoint& p);
void require_valid(const Dataset& d);

}  // namespace fuzzyspline
