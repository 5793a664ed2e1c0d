#include "fuzzyspline/curve_pipeline.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "fuzzyspline/errors.hpp"
#include "fuzzyspline/fuzzy_ops.hpp"

namespace fuzzyspline {

std::string_view to_string(Stage stage) noexcept {
  switch (stage) {
    case Stage::fuzzy:
      return "fuzzy";
    case Stage::alpha_cut:
      return "alpha-cut";
    case Stage::reduced:
      return "reduced";
    case Stage::defuzzified:
      return "defuzzified";
  }
  return "unknown";
}

std::size_t channel_count(Stage stage) noexcept {
  switch (stage) {
    case Stage::fuzzy:
    case Stage::alpha_cut:
      return kLateralCount;
    case Stage::reduced:
      return 3;
    case Stage::defuzzified:
      return 1;
  }
  return 0;
}

std::vector<std::string> channel_names(Stage stage) {
  switch (stage) {
    case Stage::fuzzy:
    case Stage::alpha_cut:
      return {kLateralNames.begin(), kLateralNames.end()};
    case Stage::reduced:
      return {"left", "crisp", "right"};
    case Stage::defuzzified:
      return {"defuzzified"};
  }
  return {};
}

FuzzyCurveBundle::FuzzyCurveBundle(Stage stage, std::optional<double> alpha,
                                   std::vector<double> params, KnotVector knots,
                                   std::vector<ChannelCurve> channels)
    : stage_(stage),
      alpha_(alpha),
      params_(std::move(params)),
      knots_(std::move(knots)),
      channels_(std::move(channels)) {
  const auto names = channel_names(stage_);
  if (channels_.size() != names.size()) {
    throw StageError("stage " + std::string(to_string(stage_)) + " needs " +
                     std::to_string(names.size()) + " channels, got " +
                     std::to_string(channels_.size()));
  }
  for (std::size_t c = 0; c < names.size(); ++c) {
    const auto& ch = channels_[c];
    if (ch.name != names[c]) {
      throw StageError("stage " + std::string(to_string(stage_)) + " expects channel '" + names[c] +
                       "' at position " + std::to_string(c) + ", got '" + ch.name + "'");
    }
    if (ch.curve.knots() != knots_) {
      throw ArityError("channel '" + ch.name + "' does not share the bundle knot vector");
    }
    if (ch.data.size() != params_.size()) {
      throw ArityError("channel '" + ch.name + "' data length does not match the parameters");
    }
  }
  if (params_.size() != knots_.control_count()) {
    throw ArityError("parameter count does not match the knot vector");
  }
}

const ChannelCurve& FuzzyCurveBundle::channel(std::string_view name) const {
  const auto it = std::find_if(channels_.begin(), channels_.end(),
                               [&](const ChannelCurve& c) { return c.name == name; });
  if (it == channels_.end()) {
    throw std::out_of_range("no channel '" + std::string(name) + "' at stage " +
                            std::string(to_string(stage_)));
  }
  return *it;
}

bool FuzzyCurveBundle::has_channel(std::string_view name) const noexcept {
  return std::any_of(channels_.begin(), channels_.end(),
                     [&](const ChannelCurve& c) { return c.name == name; });
}

namespace {

void require_stage(const FuzzyCurveBundle& b, Stage expected, std::string_view op) {
  if (b.stage() != expected) {
    throw StageError(std::string(op) + " needs a bundle at stage " +
                     std::string(to_string(expected)) + ", got " +
                     std::string(to_string(b.stage())));
  }
}

// Reassembles the per-index lateral point from the seven channel data rows.
FuzzyDataPoint lateral_at(const FuzzyCurveBundle& b, std::size_t i) {
  std::array<CrispPoint, kLateralCount> v{};
  for (std::size_t c = 0; c < kLateralCount; ++c) v[c] = b.channels()[c].data[i];
  return FuzzyDataPoint::from_lateral(v);
}

template <typename Combine>
std::vector<CrispPoint> combine_control(const std::vector<const SplineCurve*>& curves,
                                        Combine&& combine) {
  const std::size_t n = curves.front()->control().size();
  std::vector<CrispPoint> out(n);
  std::vector<CrispPoint> column(curves.size());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t c = 0; c < curves.size(); ++c) column[c] = curves[c]->control()[j];
    out[j] = combine(column);
  }
  return out;
}

CrispPoint plain_mean(const std::vector<CrispPoint>& v) {
  CrispPoint sum{};
  for (const auto& p : v) sum += p;
  const auto n = static_cast<double>(v.size());
  return {sum.x / n, sum.y / n};
}

}  // namespace

FuzzyCurveBundle build_bundle(const Dataset& d, int degree, ParamChoice choice) {
  if (degree < kMinDegree || degree > kMaxDegree) {
    throw DomainError("degree must lie in [" + std::to_string(kMinDegree) + ", " +
                      std::to_string(kMaxDegree) + "], got " + std::to_string(degree));
  }
  require_valid(d);

  auto params = parametrize(d.crisp_points(), choice);
  KnotVector knots = average_knots(params, degree);

  std::vector<ChannelCurve> channels;
  channels.reserve(kLateralCount);
  for (std::size_t c = 0; c < kLateralCount; ++c) {
    auto data = d.channel(static_cast<Lateral>(c));
    SplineCurve curve = solve_interpolation(data, params, knots);
    channels.push_back({std::string(kLateralNames[c]), std::move(data), std::move(curve)});
  }
  return FuzzyCurveBundle(Stage::fuzzy, std::nullopt, std::move(params), std::move(knots),
                          std::move(channels));
}

FuzzyCurveBundle apply_alpha_cut(const FuzzyCurveBundle& b, double alpha) {
  require_stage(b, Stage::fuzzy, "alpha-cut");
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("alpha must lie in [0, 1], got " + std::to_string(alpha));
  }

  const std::size_t n = b.params().size();
  std::vector<FuzzyDataPoint> cut(n);
  for (std::size_t i = 0; i < n; ++i) cut[i] = alpha_cut(lateral_at(b, i), alpha).point;

  const auto crisp_index = static_cast<std::size_t>(Lateral::crisp);
  const auto& crisp_ctrl = b.channels()[crisp_index].curve.control();

  std::vector<ChannelCurve> channels;
  channels.reserve(kLateralCount);
  for (std::size_t c = 0; c < kLateralCount; ++c) {
    const auto& src = b.channels()[c];
    std::vector<CrispPoint> data(n);
    for (std::size_t i = 0; i < n; ++i) data[i] = cut[i][static_cast<Lateral>(c)];

    std::vector<CrispPoint> ctrl = src.curve.control();
    if (c != crisp_index) {
      for (std::size_t j = 0; j < ctrl.size(); ++j) {
        ctrl[j] = (1.0 - alpha) * ctrl[j] + alpha * crisp_ctrl[j];
      }
    }
    channels.push_back({src.name, std::move(data), SplineCurve(b.knots(), std::move(ctrl))});
  }
  return FuzzyCurveBundle(Stage::alpha_cut, alpha, b.params(), b.knots(), std::move(channels));
}

FuzzyCurveBundle apply_type_reduction(const FuzzyCurveBundle& b) {
  require_stage(b, Stage::alpha_cut, "type reduction");
  const double alpha = b.alpha().value_or(0.0);

  const std::size_t n = b.params().size();
  std::vector<CrispPoint> left(n), crisp(n), right(n);
  for (std::size_t i = 0; i < n; ++i) {
    const ReducedPoint r = type_reduce({lateral_at(b, i), alpha});
    left[i] = r.left;
    crisp[i] = r.crisp;
    right[i] = r.right;
  }

  const auto& ch = b.channels();
  auto left_ctrl = combine_control({&ch[0].curve, &ch[1].curve, &ch[2].curve}, plain_mean);
  auto right_ctrl = combine_control({&ch[4].curve, &ch[5].curve, &ch[6].curve}, plain_mean);

  std::vector<ChannelCurve> channels;
  channels.push_back({"left", std::move(left), SplineCurve(b.knots(), std::move(left_ctrl))});
  channels.push_back({"crisp", std::move(crisp), ch[3].curve});
  channels.push_back({"right", std::move(right), SplineCurve(b.knots(), std::move(right_ctrl))});
  return FuzzyCurveBundle(Stage::reduced, b.alpha(), b.params(), b.knots(), std::move(channels));
}

FuzzyCurveBundle apply_defuzzification(const FuzzyCurveBundle& b) {
  require_stage(b, Stage::reduced, "defuzzification");
  const double alpha = b.alpha().value_or(0.0);
  const auto& ch = b.channels();

  const std::size_t n = b.params().size();
  std::vector<CrispPoint> data(n);
  for (std::size_t i = 0; i < n; ++i) {
    data[i] = defuzzify({ch[0].data[i], ch[1].data[i], ch[2].data[i], alpha});
  }
  auto ctrl = combine_control({&ch[0].curve, &ch[1].curve, &ch[2].curve}, plain_mean);

  std::vector<ChannelCurve> channels;
  channels.push_back({"defuzzified", std::move(data), SplineCurve(b.knots(), std::move(ctrl))});
  return FuzzyCurveBundle(Stage::defuzzified, b.alpha(), b.params(), b.knots(),
                          std::move(channels));
}

StageBundles run_curve_pipeline(const Dataset& d, double alpha, int degree, ParamChoice choice) {
  auto fuzzy = build_bundle(d, degree, choice);
  auto cut = apply_alpha_cut(fuzzy, alpha);
  auto reduced = apply_type_reduction(cut);
  auto defuzzified = apply_defuzzification(reduced);
  return {std::move(fuzzy), std::move(cut), std::move(reduced), std::move(defuzzified)};
}

}  // namespace fuzzyspline
