#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "fuzzyspline/fuzzy_core.hpp"

namespace fuzzyspline {

enum class ParamChoice { uniform, chord_length, centripetal };

std::string_view to_string(ParamChoice choice) noexcept;

/// Parses "uniform", "chord-length" or "centripetal" (underscores accepted).
/// Throws DomainError otherwise.
ParamChoice parse_param_choice(std::string_view text);

inline constexpr int kMinDegree = 1;
inline constexpr int kMaxDegree = 5;

/// Clamped, non-decreasing knot vector of a given degree.
class KnotVector {
 public:
  /// Throws DomainError unless the knots are finite, non-decreasing, clamped
  /// at both ends, have a non-empty range and leave at least degree + 1
  /// control points.
  KnotVector(int degree, std::vector<double> knots);

  int degree() const noexcept { return degree_; }
  const std::vector<double>& knots() const noexcept { return knots_; }
  std::size_t size() const noexcept { return knots_.size(); }
  double operator[](std::size_t i) const noexcept { return knots_[i]; }

  std::size_t control_count() const noexcept { return knots_.size() - degree_ - 1; }
  double front() const noexcept { return knots_.front(); }
  double back() const noexcept { return knots_.back(); }

  /// Index s with knots[s] <= t < knots[s + 1], restricted to
  /// [degree, control_count - 1]. At t == back() the last non-empty span is
  /// returned, which closes the final span on the right.
  std::size_t find_span(double t) const;

  bool operator==(const KnotVector&) const = default;

 private:
  int degree_;
  std::vector<double> knots_;
};

/// A crisp B-spline curve.
class SplineCurve {
 public:
  /// Throws ArityError if the control count does not match the knot vector.
  SplineCurve(KnotVector knots, std::vector<CrispPoint> control);

  int degree() const noexcept { return knots_.degree(); }
  const KnotVector& knots() const noexcept { return knots_; }
  const std::vector<CrispPoint>& control() const noexcept { return control_; }

  bool operator==(const SplineCurve&) const = default;

 private:
  KnotVector knots_;
  std::vector<CrispPoint> control_;
};

/// Parameter values in [0, 1] for interpolation, first 0 and last 1.
/// Throws ArityError for fewer than 2 points and DegenerateChordError when
/// a chord-based choice meets two identical consecutive points.
std::vector<double> parametrize(std::span<const CrispPoint> points, ParamChoice choice);

/// Clamped knot vector by averaging `degree` consecutive parameters.
std::vector<double> average_knot_values(std::span<const double> params, int degree);
KnotVector average_knots(std::span<const double> params, int degree);

/// B_{i,degree}(t) by the Cox-de Boor recursion. Throws DomainError when t
/// lies outside the knot range or i is not a valid basis index.
double basis(const KnotVector& knots, std::size_t i, double t);

/// All control_count() basis values at t.
std::vector<double> basis_row(const KnotVector& knots, double t);

/// Global interpolation: finds control points with curve(params[i]) == data[i].
/// Throws ArityError on mismatched lengths and SolverError on a singular
/// collocation matrix or a residual above kInterpolationTolerance.
SplineCurve solve_interpolation(std::span<const CrispPoint> data, std::span<const double> params,
                                const KnotVector& knots);

inline constexpr double kInterpolationTolerance = 1e-9;

/// de Boor evaluation. Throws DomainError for t outside the knot range.
CrispPoint eval_curve(const SplineCurve& c, double t);

/// Evaluates at n uniformly spaced parameters spanning the knot range,
/// both ends included. Throws ArityError for n < 2.
std::vector<double> sample_parameters(const SplineCurve& c, std::size_t n);
std::vector<CrispPoint> sample_curve(const SplineCurve& c, std::size_t n);

}  // namespace fuzzyspline
