#include "fuzzyspline/bspline.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fuzzyspline/errors.hpp"
#include "fuzzyspline/linalg.hpp"

namespace fuzzyspline {

std::string_view to_string(ParamChoice choice) noexcept {
  switch (choice) {
    case ParamChoice::uniform:
      return "uniform";
    case ParamChoice::chord_length:
      return "chord-length";
    case ParamChoice::centripetal:
      return "centripetal";
  }
  return "unknown";
}

ParamChoice parse_param_choice(std::string_view text) {
  if (text == "uniform") return ParamChoice::uniform;
  if (text == "chord-length" || text == "chord_length") return ParamChoice::chord_length;
  if (text == "centripetal") return ParamChoice::centripetal;
  throw DomainError("unknown parametrization '" + std::string(text) +
                    "' (expected uniform, chord-length or centripetal)");
}

KnotVector::KnotVector(int degree, std::vector<double> knots)
    : degree_(degree), knots_(std::move(knots)) {
  if (degree_ < 1) throw DomainError("degree must be >= 1, got " + std::to_string(degree_));
  const auto p = static_cast<std::size_t>(degree_);
  if (knots_.size() < 2 * (p + 1)) {
    throw DomainError("knot vector of degree " + std::to_string(degree_) + " needs at least " +
                      std::to_string(2 * (p + 1)) + " knots, got " + std::to_string(knots_.size()));
  }
  for (double k : knots_) {
    if (!std::isfinite(k)) throw DomainError("knot vector contains a non-finite value");
  }
  if (!std::is_sorted(knots_.begin(), knots_.end())) {
    throw DomainError("knot vector is not non-decreasing");
  }
  const std::size_t m = knots_.size();
  if (!(front() < back())) throw DomainError("knot vector has an empty range");
  for (std::size_t i = 0; i <= p; ++i) {
    if (knots_[i] != front() || knots_[m - 1 - i] != back()) {
      throw DomainError("knot vector is not clamped: the first and last " + std::to_string(p + 1) +
                        " knots must coincide");
    }
  }
  if (knots_[p + 1] == front() || knots_[m - p - 2] == back()) {
    throw DomainError("end knot multiplicity exceeds degree + 1");
  }
}

std::size_t KnotVector::find_span(double t) const {
  const std::size_t p = static_cast<std::size_t>(degree_);
  const std::size_t n = control_count();
  if (t >= knots_[n]) return n - 1;
  if (t <= knots_[p]) return p;
  // Last index s in [p, n - 1] with knots[s] <= t.
  const auto it = std::upper_bound(knots_.begin() + static_cast<std::ptrdiff_t>(p),
                                   knots_.begin() + static_cast<std::ptrdiff_t>(n) + 1, t);
  return static_cast<std::size_t>(it - knots_.begin()) - 1;
}

SplineCurve::SplineCurve(KnotVector knots, std::vector<CrispPoint> control)
    : knots_(std::move(knots)), control_(std::move(control)) {
  if (control_.size() != knots_.control_count()) {
    throw ArityError("curve needs " + std::to_string(knots_.control_count()) +
                     " control points for its knot vector, got " + std::to_string(control_.size()));
  }
}

std::vector<double> parametrize(std::span<const CrispPoint> points, ParamChoice choice) {
  const std::size_t count = points.size();
  if (count < 2) throw ArityError("parametrization needs at least 2 points");

  std::vector<double> params(count, 0.0);
  if (choice == ParamChoice::uniform) {
    const double n = static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) params[i] = static_cast<double>(i) / n;
    params.back() = 1.0;
    return params;
  }

  for (std::size_t i = 1; i < count; ++i) {
    const CrispPoint d = points[i] - points[i - 1];
    double len = std::hypot(d.x, d.y);
    if (!(len > 0.0)) {
      throw DegenerateChordError(i - 1, "degenerate chord: points " + std::to_string(i - 1) +
                                            " and " + std::to_string(i) + " coincide");
    }
    if (choice == ParamChoice::centripetal) len = std::sqrt(len);
    params[i] = params[i - 1] + len;
  }
  const double total = params.back();
  for (double& u : params) u /= total;
  params.back() = 1.0;
  for (std::size_t i = 1; i < count; ++i) {
    if (!(params[i] > params[i - 1])) {
      throw DegenerateChordError(i - 1, "degenerate chord: parameters " + std::to_string(i - 1) +
                                            " and " + std::to_string(i) + " collapse");
    }
  }
  return params;
}

std::vector<double> average_knot_values(std::span<const double> params, int degree) {
  if (degree < 1) throw DomainError("degree must be >= 1, got " + std::to_string(degree));
  const auto p = static_cast<std::size_t>(degree);
  const std::size_t n = params.size();
  if (n < p + 1) {
    throw ArityError("degree " + std::to_string(degree) + " needs at least " +
                     std::to_string(p + 1) + " parameters, got " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(params[i]) || (i > 0 && !(params[i] > params[i - 1]))) {
      throw DomainError("parameters must be finite and strictly increasing");
    }
  }

  std::vector<double> knots;
  knots.reserve(n + p + 1);
  knots.insert(knots.end(), p + 1, params.front());
  for (std::size_t j = 1; j + p < n; ++j) {
    double sum = 0.0;
    for (std::size_t i = j; i < j + p; ++i) sum += params[i];
    knots.push_back(sum / static_cast<double>(p));
  }
  knots.insert(knots.end(), p + 1, params.back());
  return knots;
}

KnotVector average_knots(std::span<const double> params, int degree) {
  return KnotVector(degree, average_knot_values(params, degree));
}

namespace {

void check_parameter(const KnotVector& kv, double t) {
  if (!(t >= kv.front() && t <= kv.back())) {
    throw DomainError("parameter " + std::to_string(t) + " outside knot range [" +
                      std::to_string(kv.front()) + ", " + std::to_string(kv.back()) + "]");
  }
}

double ratio(double num, double den) noexcept { return den == 0.0 ? 0.0 : num / den; }

double cox_de_boor(const std::vector<double>& k, std::size_t i, std::size_t p, double t,
                   std::size_t span) {
  if (p == 0) return i == span ? 1.0 : 0.0;
  double value = 0.0;
  const double left = ratio(t - k[i], k[i + p] - k[i]);
  if (left != 0.0) value += left * cox_de_boor(k, i, p - 1, t, span);
  const double right = ratio(k[i + p + 1] - t, k[i + p + 1] - k[i + 1]);
  if (right != 0.0) value += right * cox_de_boor(k, i + 1, p - 1, t, span);
  return value;
}

}  // namespace

double basis(const KnotVector& kv, std::size_t i, double t) {
  check_parameter(kv, t);
  if (i >= kv.control_count()) {
    throw DomainError("basis index " + std::to_string(i) + " out of range (" +
                      std::to_string(kv.control_count()) + " functions)");
  }
  const auto p = static_cast<std::size_t>(kv.degree());
  const std::size_t span = kv.find_span(t);
  // Outside [span - p, span] the function vanishes identically.
  if (i + p < span || i > span) return 0.0;
  return cox_de_boor(kv.knots(), i, p, t, span);
}

std::vector<double> basis_row(const KnotVector& kv, double t) {
  std::vector<double> row(kv.control_count());
  for (std::size_t j = 0; j < row.size(); ++j) row[j] = basis(kv, j, t);
  return row;
}

SplineCurve solve_interpolation(std::span<const CrispPoint> data, std::span<const double> params,
                                const KnotVector& knots) {
  const std::size_t n = data.size();
  if (params.size() != n) {
    throw ArityError("got " + std::to_string(n) + " data points but " +
                     std::to_string(params.size()) + " parameters");
  }
  if (knots.control_count() != n) {
    throw ArityError("knot vector supports " + std::to_string(knots.control_count()) +
                     " control points, data has " + std::to_string(n));
  }

  linalg::Matrix collocation(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = basis_row(knots, params[i]);
    for (std::size_t j = 0; j < n; ++j) collocation(i, j) = row[j];
  }

  std::vector<std::vector<double>> rhs(2, std::vector<double>(n));
  double scale = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    rhs[0][i] = data[i].x;
    rhs[1][i] = data[i].y;
    scale = std::max({scale, std::abs(data[i].x), std::abs(data[i].y)});
  }
  linalg::solve_in_place(collocation, rhs);

  std::vector<CrispPoint> control(n);
  for (std::size_t j = 0; j < n; ++j) control[j] = {rhs[0][j], rhs[1][j]};
  SplineCurve curve(knots, std::move(control));

  for (std::size_t i = 0; i < n; ++i) {
    const CrispPoint e = eval_curve(curve, params[i]) - data[i];
    const double residual = std::max(std::abs(e.x), std::abs(e.y));
    if (!(residual <= kInterpolationTolerance * scale)) {
      throw SolverError(i, "interpolation residual " + std::to_string(residual) +
                               " exceeds tolerance at data point " + std::to_string(i));
    }
  }
  return curve;
}

CrispPoint eval_curve(const SplineCurve& c, double t) {
  const KnotVector& kv = c.knots();
  check_parameter(kv, t);
  const auto p = static_cast<std::size_t>(kv.degree());
  const std::size_t s = kv.find_span(t);

  std::vector<CrispPoint> d(c.control().begin() + static_cast<std::ptrdiff_t>(s - p),
                            c.control().begin() + static_cast<std::ptrdiff_t>(s + 1));
  for (std::size_t r = 1; r <= p; ++r) {
    for (std::size_t j = p; j >= r; --j) {
      const double lo = kv[j + s - p];
      const double a = (t - lo) / (kv[j + 1 + s - r] - lo);
      d[j] = (1.0 - a) * d[j - 1] + a * d[j];
    }
  }
  return d[p];
}

std::vector<double> sample_parameters(const SplineCurve& c, std::size_t n) {
  if (n < 2) throw ArityError("sampling needs at least 2 samples, got " + std::to_string(n));
  const double a = c.knots().front();
  const double b = c.knots().back();
  std::vector<double> ts(n);
  const double last = static_cast<double>(n - 1);
  for (std::size_t k = 0; k < n; ++k) ts[k] = a + (b - a) * (static_cast<double>(k) / last);
  ts.front() = a;
  ts.back() = b;
  return ts;
}

std::vector<CrispPoint> sample_curve(const SplineCurve& c, std::size_t n) {
  std::vector<CrispPoint> out;
  out.reserve(n);
  for (double t : sample_parameters(c, n)) out.push_back(eval_curve(c, t));
  return out;
}

}  // namespace fuzzyspline
