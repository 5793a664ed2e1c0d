#include "fuzzyspline/fuzzy_core.hpp"

#include <cmath>
#include <string>

#include "fuzzyspline/errors.hpp"

namespace fuzzyspline {

namespace {

constexpr std::array<CrispPoint FuzzyDataPoint::*, kLateralCount> kMembers = {
    &FuzzyDataPoint::ll, &FuzzyDataPoint::l,  &FuzzyDataPoint::rl, &FuzzyDataPoint::crisp,
    &FuzzyDataPoint::lr, &FuzzyDataPoint::r,  &FuzzyDataPoint::rr};

std::string pair_name(std::size_t k) {
  return "(" + std::string(kLateralNames[k]) + ", " + std::string(kLateralNames[k + 1]) + ")";
}

// The direction is fixed by the endpoints; every adjacent pair that moves
// against it is reported.
void check_monotone(const std::array<double, kLateralCount>& seq, const char* axis,
                    ValidationReport& report) {
  const bool increasing = seq.front() <= seq.back();
  for (std::size_t k = 0; k + 1 < kLateralCount; ++k) {
    const bool bad = increasing ? seq[k] > seq[k + 1] : seq[k] < seq[k + 1];
    if (bad) {
      report.add(std::string(axis) + " not monotone at pair " + pair_name(k) + ": " +
                 std::to_string(seq[k]) + (increasing ? " > " : " < ") +
                 std::to_string(seq[k + 1]));
    }
  }
}

}  // namespace

const CrispPoint& FuzzyDataPoint::operator[](Lateral which) const noexcept {
  return this->*kMembers[static_cast<std::size_t>(which)];
}

CrispPoint& FuzzyDataPoint::operator[](Lateral which) noexcept {
  return this->*kMembers[static_cast<std::size_t>(which)];
}

std::vector<CrispPoint> Dataset::crisp_points() const { return channel(Lateral::crisp); }

std::vector<CrispPoint> Dataset::channel(Lateral which) const {
  std::vector<CrispPoint> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p[which]);
  return out;
}

ValidationReport validate_point(const FuzzyDataPoint& p) {
  ValidationReport report;
  const auto seq = p.lateral();

  bool finite = true;
  for (std::size_t k = 0; k < kLateralCount; ++k) {
    if (!std::isfinite(seq[k].x)) {
      report.add("x of " + std::string(kLateralNames[k]) + " is not finite");
      finite = false;
    }
    if (!std::isfinite(seq[k].y)) {
      report.add("y of " + std::string(kLateralNames[k]) + " is not finite");
      finite = false;
    }
  }
  if (!finite) return report;

  std::array<double, kLateralCount> xs{};
  std::array<double, kLateralCount> ys{};
  for (std::size_t k = 0; k < kLateralCount; ++k) {
    xs[k] = seq[k].x;
    ys[k] = seq[k].y;
  }
  check_monotone(xs, "x", report);
  check_monotone(ys, "y", report);
  return report;
}

ValidationReport validate_dataset(const Dataset& d) {
  ValidationReport report;
  if (d.points.size() < 2) {
    report.add("length < 2 (got " + std::to_string(d.points.size()) + " points)");
  }
  for (std::size_t i = 0; i < d.points.size(); ++i) {
    for (auto& v : validate_point(d.points[i]).violations) {
      report.add(std::move(v.message), i);
    }
  }
  for (std::size_t i = 0; i + 1 < d.points.size(); ++i) {
    if (d.points[i].crisp == d.points[i + 1].crisp) {
      report.add("repeated crisp point at indices " + std::to_string(i) + " and " +
                 std::to_string(i + 1));
    }
  }
  return report;
}

void require_valid(const FuzzyDataPoint& p) {
  if (auto report = validate_point(p); !report.ok()) throw ValidationError(std::move(report));
}

void require_valid(const Dataset& d) {
  if (auto report = validate_dataset(d); !report.ok()) throw ValidationError(std::move(report));
}

}  // namespace fuzzyspline
