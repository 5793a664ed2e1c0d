#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzyspline/bspline.hpp"
#include "fuzzyspline/fuzzy_core.hpp"

namespace fuzzyspline {

enum class Stage { fuzzy, alpha_cut, reduced, defuzzified };

std::string_view to_string(Stage stage) noexcept;

/// Number of channels a bundle carries at each stage: 7, 7, 3, 1.
std::size_t channel_count(Stage stage) noexcept;

/// Channel names in order for a stage.
std::vector<std::string> channel_names(Stage stage);

/// One lateral channel: its stage data at the shared parameters and the
/// curve interpolating them.
struct ChannelCurve {
  std::string name;
  std::vector<CrispPoint> data;
  SplineCurve curve;

  bool operator==(const ChannelCurve&) const = default;
};

/// Interpolating B-spline curves, one per lateral channel, sharing one set
/// of parameters and one knot vector.
class FuzzyCurveBundle {
 public:
  /// Throws StageError when the channel set does not match the stage and
  /// ArityError when the channels disagree on knots or data length.
  FuzzyCurveBundle(Stage stage, std::optional<double> alpha, std::vector<double> params,
                   KnotVector knots, std::vector<ChannelCurve> channels);

  Stage stage() const noexcept { return stage_; }
  std::optional<double> alpha() const noexcept { return alpha_; }
  const std::vector<double>& params() const noexcept { return params_; }
  const KnotVector& knots() const noexcept { return knots_; }
  int degree() const noexcept { return knots_.degree(); }
  const std::vector<ChannelCurve>& channels() const noexcept { return channels_; }

  /// Throws std::out_of_range for an unknown name.
  const ChannelCurve& channel(std::string_view name) const;
  bool has_channel(std::string_view name) const noexcept;

  bool operator==(const FuzzyCurveBundle&) const = default;

 private:
  Stage stage_;
  std::optional<double> alpha_;
  std::vector<double> params_;
  KnotVector knots_;
  std::vector<ChannelCurve> channels_;
};

/// Interpolates each of the seven channels against parameters and knots
/// computed once from the crisp channel.
FuzzyCurveBundle build_bundle(const Dataset& d, int degree, ParamChoice choice);

/// Stage transitions. Each acts on control points through the same affine
/// combination the point pipeline applies to data, and carries the stage
/// data along. Out-of-order use throws StageError.
FuzzyCurveBundle apply_alpha_cut(const FuzzyCurveBundle& b, double alpha);
FuzzyCurveBundle apply_type_reduction(const FuzzyCurveBundle& b);
FuzzyCurveBundle apply_defuzzification(const FuzzyCurveBundle& b);

/// The four bundles for one run, in stage order.
struct StageBundles {
  FuzzyCurveBundle fuzzy;
  FuzzyCurveBundle alpha_cut;
  FuzzyCurveBundle reduced;
  FuzzyCurveBundle defuzzified;

  std::vector<const FuzzyCurveBundle*> all() const { return {&fuzzy, &alpha_cut, &reduced, &defuzzified}; }
};

StageBundles run_curve_pipeline(const Dataset& d, double alpha, int degree, ParamChoice choice);

}  // namespace fuzzyspline
