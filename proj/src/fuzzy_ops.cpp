#include "fuzzyspline/fuzzy_ops.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fuzzyspline/errors.hpp"

namespace fuzzyspline {

namespace {

double blend(double v, double target, double alpha) noexcept {
  if (v == target) return v;
  const double mixed = (1.0 - alpha) * v + alpha * target;
  return std::clamp(mixed, std::min(v, target), std::max(v, target));
}

double mean3(double a, double b, double c) noexcept {
  const double lo = std::min({a, b, c});
  const double hi = std::max({a, b, c});
  return std::clamp((a + b + c) / 3.0, lo, hi);
}

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
}

bool monotone3(double a, double b, double c) noexcept {
  return (a <= b && b <= c) || (a >= b && b >= c);
}

}  // namespace

CrispPoint shrink_toward(const CrispPoint& v, const CrispPoint& target, double alpha) noexcept {
  return {blend(v.x, target.x, alpha), blend(v.y, target.y, alpha)};
}

CrispPoint mean_of_three(const CrispPoint& a, const CrispPoint& b, const CrispPoint& c) noexcept {
  return {mean3(a.x, b.x, c.x), mean3(a.y, b.y, c.y)};
}

AlphaCutPoint alpha_cut(const FuzzyDataPoint& p, double alpha) {
  check_alpha(alpha);
  require_valid(p);
  auto seq = p.lateral();
  for (auto& v : seq) v = shrink_toward(v, p.crisp, alpha);
  // crisp maps to itself through blend(); restate it so no rounding path exists.
  seq[static_cast<std::size_t>(Lateral::crisp)] = p.crisp;
  return {FuzzyDataPoint::from_lateral(seq), alpha};
}

ReducedPoint type_reduce(const AlphaCutPoint& a) {
  check_alpha(a.alpha);
  require_valid(a.point);
  const auto& p = a.point;
  return {mean_of_three(p.ll, p.l, p.rl), p.crisp, mean_of_three(p.lr, p.r, p.rr), a.alpha};
}

ValidationReport validate_reduced(const ReducedPoint& r) {
  ValidationReport report;
  for (const auto* q : {&r.left, &r.crisp, &r.right}) {
    if (!std::isfinite(q->x) || !std::isfinite(q->y)) {
      report.add("reduced point has a non-finite coordinate");
      return report;
    }
  }
  if (!monotone3(r.left.x, r.crisp.x, r.right.x)) report.add("x not monotone across (left, crisp, right)");
  if (!monotone3(r.left.y, r.crisp.y, r.right.y)) report.add("y not monotone across (left, crisp, right)");
  return report;
}

CrispPoint defuzzify(const ReducedPoint& r) {
  if (auto report = validate_reduced(r); !report.ok()) throw ValidationError(std::move(report));
  return mean_of_three(r.left, r.crisp, r.right);
}

StageRecord run_point_pipeline(const FuzzyDataPoint& p, double alpha) {
  StageRecord rec;
  rec.alpha_cut = alpha_cut(p, alpha);
  rec.reduced = type_reduce(rec.alpha_cut);
  rec.defuzzified = defuzzify(rec.reduced);
  return rec;
}

}  // namespace fuzzyspline
