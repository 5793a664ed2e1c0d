#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "fuzzyspline/bspline.hpp"
#include "fuzzyspline/errors.hpp"
#include "fuzzyspline/linalg.hpp"
#include "fuzzyspline/reference_example.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace fuzzyspline;

namespace {

const std::vector<CrispPoint> kReferenceCrisp{{-5, 0}, {15, 20}, {10, -20}, {40, 10}};

// Computed by the cumulative-distance oracle (oracle::chord_params) and frozen.
const std::vector<double> kReferenceChord{0.0, 0.25476283700766283, 0.6178557444885058, 1.0};
const std::vector<double> kReferenceCentripetal{0.0, 0.29251994156562366, 0.6417377017877351, 1.0};

// Control points of the cubic interpolant of the reference crisp points,
// from a 40-digit Cramer's-rule solve on the Bernstein collocation matrix.
const std::vector<CrispPoint> kReferenceCubicControl{{-5.0, 0.0},
                                                     {48.183580531738342, 81.404985040887526},
                                                     {-27.871986583313632, -101.43747820753898},
                                                     {40.0, 10.0}};

std::vector<oracle::Pt> as_oracle(const std::vector<CrispPoint>& v) {
  std::vector<oracle::Pt> out;
  for (const auto& p : v) out.push_back({p.x, p.y});
  return out;
}

CrispPoint naive_eval(const SplineCurve& c, double t) {
  CrispPoint sum{};
  for (std::size_t j = 0; j < c.control().size(); ++j) sum += basis(c.knots(), j, t) * c.control()[j];
  return sum;
}

}  // namespace

TEST(Parametrize, Uniform) {
  const auto u = parametrize(kReferenceCrisp, ParamChoice::uniform);
  ASSERT_EQ(u.size(), 4u);
  EXPECT_DOUBLE_EQ(u[0], 0.0);
  EXPECT_DOUBLE_EQ(u[1], 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(u[2], 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(u[3], 1.0);
}

TEST(Parametrize, ChordLengthOnLine) {
  const std::vector<CrispPoint> pts{{0, 0}, {1, 0}, {3, 0}, {4, 0}};
  const auto u = parametrize(pts, ParamChoice::chord_length);
  const std::vector<double> want{0, 0.25, 0.75, 1};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(u[i], want[i]);
}

TEST(Parametrize, ReferenceChordLengthMatchesOracle) {
  const auto u = parametrize(kReferenceCrisp, ParamChoice::chord_length);
  const auto o = oracle::chord_params(as_oracle(kReferenceCrisp));
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(u[i], kReferenceChord[i], 1e-15);
    EXPECT_NEAR(u[i], o[i], 1e-15);
  }
}

TEST(Parametrize, ReferenceCentripetalMatchesOracle) {
  const auto u = parametrize(kReferenceCrisp, ParamChoice::centripetal);
  const auto o = oracle::chord_params(as_oracle(kReferenceCrisp), true);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(u[i], kReferenceCentripetal[i], 1e-15);
    EXPECT_NEAR(u[i], o[i], 1e-15);
  }
}

TEST(Parametrize, Errors) {
  const std::vector<CrispPoint> one{{0, 0}};
  EXPECT_THROW(parametrize(one, ParamChoice::uniform), ArityError);
  const std::vector<CrispPoint> repeated{{0, 0}, {1, 1}, {1, 1}};
  EXPECT_THROW(parametrize(repeated, ParamChoice::chord_length), DegenerateChordError);
  EXPECT_THROW(parametrize(repeated, ParamChoice::centripetal), DegenerateChordError);
  EXPECT_NO_THROW(parametrize(repeated, ParamChoice::uniform));
  try {
    parametrize(repeated, ParamChoice::chord_length);
  } catch (const DegenerateChordError& e) {
    EXPECT_EQ(e.index(), 1u);
  }
}

TEST(Parametrize, ParseChoice) {
  EXPECT_EQ(parse_param_choice("chord-length"), ParamChoice::chord_length);
  EXPECT_EQ(parse_param_choice("centripetal"), ParamChoice::centripetal);
  EXPECT_EQ(parse_param_choice("uniform"), ParamChoice::uniform);
  EXPECT_THROW(parse_param_choice("foley"), DomainError);
}

TEST(AverageKnots, NoInteriorKnots) {
  const std::vector<double> u{0, 1.0 / 3, 2.0 / 3, 1};
  EXPECT_EQ(average_knots(u, 3).knots(), (std::vector<double>{0, 0, 0, 0, 1, 1, 1, 1}));
}

TEST(AverageKnots, QuadraticOneInterior) {
  const std::vector<double> u{0, 0.25, 0.75, 1};
  EXPECT_EQ(average_knots(u, 2).knots(), (std::vector<double>{0, 0, 0, 0.5, 1, 1, 1}));
}

TEST(AverageKnots, CubicFiveUniform) {
  const std::vector<double> u{0, 0.25, 0.5, 0.75, 1};
  const auto k = average_knots(u, 3);
  EXPECT_EQ(k.knots(), (std::vector<double>{0, 0, 0, 0, 0.5, 1, 1, 1, 1}));
  EXPECT_EQ(k.control_count(), 5u);
}

TEST(AverageKnots, Errors) {
  const std::vector<double> three{0, 0.5, 1};
  EXPECT_THROW(average_knots(three, 3), ArityError);
  const std::vector<double> unsorted{0, 0.6, 0.5, 1};
  EXPECT_THROW(average_knots(unsorted, 2), DomainError);
}

TEST(KnotVector, RejectsMalformed) {
  EXPECT_THROW(KnotVector(3, {0, 0, 0, 1, 1, 1, 1}), DomainError);      // too short
  EXPECT_THROW(KnotVector(2, {0, 0, 0.1, 0.5, 1, 1, 1}), DomainError);  // not clamped
  EXPECT_THROW(KnotVector(2, {0, 0, 0, 0.7, 0.5, 1, 1, 1}), DomainError);
  EXPECT_THROW(KnotVector(2, {1, 1, 1, 1, 1, 1}), DomainError);
  EXPECT_THROW(KnotVector(0, {0, 1}), DomainError);
  EXPECT_NO_THROW(KnotVector(2, {0, 0, 0, 0.5, 1, 1, 1}));
}

TEST(Basis, SingleSpanCubic) {
  const KnotVector k(3, {0, 0, 0, 0, 1, 1, 1, 1});
  EXPECT_EQ(basis(k, 0, 0.0), 1.0);
  for (std::size_t j = 1; j < 4; ++j) EXPECT_EQ(basis(k, j, 0.0), 0.0);

  const std::vector<double> half{0.125, 0.375, 0.375, 0.125};
  for (std::size_t j = 0; j < 4; ++j) {
    EXPECT_NEAR(basis(k, j, 0.5), half[j], 1e-15);
    EXPECT_NEAR(basis(k, j, 0.5), oracle::bernstein(static_cast<int>(j), 3, 0.5), 1e-15);
  }

  EXPECT_EQ(basis(k, 3, 1.0), 1.0);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(basis(k, j, 1.0), 0.0);
}

TEST(Basis, MatchesBernsteinOnSingleSpan) {
  gen::Rng rng(31);
  for (int p = 1; p <= 5; ++p) {
    std::vector<double> knots(static_cast<std::size_t>(p + 1), 0.0);
    knots.insert(knots.end(), static_cast<std::size_t>(p + 1), 1.0);
    const KnotVector k(p, knots);
    for (int trial = 0; trial < 100; ++trial) {
      const double t = gen::uniform(rng, 0, 1);
      for (int j = 0; j <= p; ++j) {
        EXPECT_NEAR(basis(k, static_cast<std::size_t>(j), t), oracle::bernstein(j, p, t), 1e-13);
      }
    }
  }
}

TEST(Basis, Errors) {
  const KnotVector k(3, {0, 0, 0, 0, 1, 1, 1, 1});
  EXPECT_THROW(basis(k, 0, -0.01), DomainError);
  EXPECT_THROW(basis(k, 0, 1.01), DomainError);
  EXPECT_THROW(basis(k, 4, 0.5), DomainError);
}

TEST(Basis, PartitionNonNegativityLocalSupport) {
  gen::Rng rng(32);
  for (int trial = 0; trial < 2000; ++trial) {
    const int p = gen::uniform_int(rng, 1, 5);
    const int n = gen::uniform_int(rng, std::max(4, p + 1), 12);
    const auto k = gen::clamped_knots(rng, p, n);
    const double t = gen::uniform(rng, 0, 1);
    double sum = 0.0;
    for (std::size_t j = 0; j < k.control_count(); ++j) {
      const double b = basis(k, j, t);
      sum += b;
      EXPECT_GE(b, -1e-15);
      if (t < k[j] || t > k[j + static_cast<std::size_t>(p) + 1]) EXPECT_EQ(b, 0.0);
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
}

TEST(Basis, InteriorKnotSpanIsHalfOpen) {
  const KnotVector k(1, {0, 0, 0.5, 1, 1});
  EXPECT_EQ(basis(k, 1, 0.5), 1.0);
  EXPECT_EQ(basis(k, 0, 0.5), 0.0);
  EXPECT_EQ(basis(k, 2, 0.5), 0.0);
}

TEST(Linalg, SingularSystemNamesPivotRow) {
  linalg::Matrix a(3);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 2;
  a(1, 1) = 4;
  a(2, 2) = 1;
  std::vector<std::vector<double>> rhs{{1, 2, 3}};
  try {
    linalg::solve_in_place(a, rhs);
    FAIL() << "expected SolverError";
  } catch (const SolverError& e) {
    EXPECT_EQ(e.pivot_row(), 1u);
  }
}

TEST(Linalg, NeedsPivoting) {
  linalg::Matrix a(2);
  a(0, 1) = 1;
  a(1, 0) = 1;
  std::vector<std::vector<double>> rhs{{3, 4}};
  linalg::solve_in_place(a, rhs);
  EXPECT_EQ(rhs[0], (std::vector<double>{4, 3}));
}

TEST(Solve, LinearIsIdentity) {
  gen::Rng rng(33);
  const auto data = gen::well_spaced(rng, 7);
  const auto u = parametrize(data, ParamChoice::chord_length);
  const auto c = solve_interpolation(data, u, average_knots(u, 1));
  EXPECT_EQ(c.control(), data);
}

TEST(Solve, ReferenceCubicMatchesCramerOracle) {
  const auto u = parametrize(kReferenceCrisp, ParamChoice::chord_length);
  const auto c = solve_interpolation(kReferenceCrisp, u, average_knots(u, 3));
  ASSERT_EQ(c.control().size(), 4u);
  EXPECT_EQ(c.control().front(), kReferenceCrisp.front());
  EXPECT_EQ(c.control().back(), kReferenceCrisp.back());

  const auto oracle_ctrl = oracle::cubic_bezier_interpolant(
      {oracle::Pt{-5, 0}, {15, 20}, {10, -20}, {40, 10}}, {u[0], u[1], u[2], u[3]});
  for (std::size_t j = 0; j < 4; ++j) {
    EXPECT_NEAR(c.control()[j].x, oracle_ctrl[j].x, 1e-10);
    EXPECT_NEAR(c.control()[j].y, oracle_ctrl[j].y, 1e-10);
    EXPECT_NEAR(c.control()[j].x, kReferenceCubicControl[j].x, 1e-10);
    EXPECT_NEAR(c.control()[j].y, kReferenceCubicControl[j].y, 1e-10);
  }
}

TEST(Solve, ArityErrors) {
  const std::vector<double> u{0, 0.5, 1};
  EXPECT_THROW(solve_interpolation(kReferenceCrisp, u, average_knots(u, 2)), ArityError);
  const auto u4 = parametrize(kReferenceCrisp, ParamChoice::uniform);
  const std::vector<double> u5{0, 0.25, 0.5, 0.75, 1};
  EXPECT_THROW(solve_interpolation(kReferenceCrisp, u4, average_knots(u5, 3)), ArityError);
}

TEST(Solve, SingularWhenParamsViolateSchoenbergWhitney) {
  // All collocation sites inside one span of a degree-1 basis leave a zero column.
  const KnotVector k(1, {0, 0, 0.5, 1, 1});
  const std::vector<double> bad{0.6, 0.7, 0.8};
  const std::vector<CrispPoint> data{{0, 0}, {1, 1}, {2, 0}};
  EXPECT_THROW(solve_interpolation(data, bad, k), SolverError);
}

TEST(Solve, ResidualAndLinearity) {
  gen::Rng rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    const int p = gen::uniform_int(rng, 1, 3);
    const int n = gen::uniform_int(rng, 4, 12);
    const auto d1 = gen::well_spaced(rng, n);
    const auto u = parametrize(d1, ParamChoice::chord_length);
    const auto k = average_knots(u, p);
    std::vector<CrispPoint> d2(d1.size());
    for (auto& q : d2) q = {gen::uniform(rng, -30, 30), gen::uniform(rng, -30, 30)};

    const auto c1 = solve_interpolation(d1, u, k);
    for (std::size_t i = 0; i < d1.size(); ++i) {
      const auto e = eval_curve(c1, u[i]) - d1[i];
      EXPECT_LE(std::max(std::abs(e.x), std::abs(e.y)), 1e-9);
    }

    const double a = gen::uniform(rng, -2, 2);
    const double b = gen::uniform(rng, -2, 2);
    std::vector<CrispPoint> mix(d1.size());
    for (std::size_t i = 0; i < mix.size(); ++i) mix[i] = a * d1[i] + b * d2[i];
    const auto c2 = solve_interpolation(d2, u, k);
    const auto cm = solve_interpolation(mix, u, k);
    for (std::size_t j = 0; j < mix.size(); ++j) {
      const auto want = a * c1.control()[j] + b * c2.control()[j];
      EXPECT_NEAR(cm.control()[j].x, want.x, 1e-8);
      EXPECT_NEAR(cm.control()[j].y, want.y, 1e-8);
    }
  }
}

TEST(Eval, ConstantControlPolygon) {
  const SplineCurve c(KnotVector(3, {0, 0, 0, 0, 1, 1, 1, 1}), {{2, 3}, {2, 3}, {2, 3}, {2, 3}});
  for (double t : {0.0, 0.2, 0.5, 0.9, 1.0}) {
    const auto p = eval_curve(c, t);
    EXPECT_NEAR(p.x, 2.0, 1e-15);
    EXPECT_NEAR(p.y, 3.0, 1e-15);
  }
}

TEST(Eval, BernsteinMidpoint) {
  const SplineCurve c(KnotVector(3, {0, 0, 0, 0, 1, 1, 1, 1}), {{0, 0}, {0, 1}, {1, 1}, {1, 0}});
  const auto p = eval_curve(c, 0.5);
  EXPECT_NEAR(p.x, 0.5, 1e-15);
  EXPECT_NEAR(p.y, 0.75, 1e-15);
}

TEST(Eval, OutOfRange) {
  const SplineCurve c(KnotVector(1, {0, 0, 1, 1}), {{0, 0}, {1, 1}});
  EXPECT_THROW(eval_curve(c, 1.0000001), DomainError);
  EXPECT_THROW(eval_curve(c, -1e-9), DomainError);
}

TEST(Eval, DeBoorMatchesBasisSum) {
  gen::Rng rng(35);
  for (int trial = 0; trial < 300; ++trial) {
    const int p = gen::uniform_int(rng, 1, 5);
    const int n = gen::uniform_int(rng, std::max(4, p + 1), 12);
    std::vector<CrispPoint> ctrl(static_cast<std::size_t>(n));
    for (auto& q : ctrl) q = {gen::uniform(rng, -10, 10), gen::uniform(rng, -10, 10)};
    const SplineCurve c(gen::clamped_knots(rng, p, n), ctrl);
    for (int s = 0; s < 20; ++s) {
      const double t = s == 0 ? 0.0 : s == 1 ? 1.0 : gen::uniform(rng, 0, 1);
      const auto a = eval_curve(c, t);
      const auto b = naive_eval(c, t);
      EXPECT_NEAR(a.x, b.x, 1e-12);
      EXPECT_NEAR(a.y, b.y, 1e-12);
    }
  }
}

TEST(Eval, EndpointsAreEndControlPoints) {
  gen::Rng rng(36);
  for (int trial = 0; trial < 100; ++trial) {
    const int p = gen::uniform_int(rng, 1, 5);
    const int n = gen::uniform_int(rng, p + 1, 12);
    std::vector<CrispPoint> ctrl(static_cast<std::size_t>(n));
    for (auto& q : ctrl) q = {gen::uniform(rng, -10, 10), gen::uniform(rng, -10, 10)};
    const SplineCurve c(gen::clamped_knots(rng, p, n), ctrl);
    EXPECT_EQ(eval_curve(c, 0.0), ctrl.front());
    EXPECT_EQ(eval_curve(c, 1.0), ctrl.back());
  }
}

TEST(Sample, TwoSamplesAreEndpoints) {
  const SplineCurve c(KnotVector(3, {0, 0, 0, 0, 1, 1, 1, 1}), {{0, 0}, {0, 1}, {1, 1}, {1, 0}});
  const auto s = sample_curve(c, 2);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], eval_curve(c, 0.0));
  EXPECT_EQ(s[1], eval_curve(c, 1.0));
  EXPECT_THROW(sample_curve(c, 1), ArityError);
}

TEST(Sample, HitsDataOnUniformGrid) {
  gen::Rng rng(37);
  const auto data = gen::well_spaced(rng, 5);
  const auto u = parametrize(data, ParamChoice::uniform);
  const auto c = solve_interpolation(data, u, average_knots(u, 3));
  // 9 samples contain the grid 0, 1/4, ..., 1 at every other position.
  const auto s = sample_curve(c, 9);
  for (std::size_t i = 0; i < data.size(); ++i) {
    EXPECT_NEAR(s[2 * i].x, data[i].x, 1e-9);
    EXPECT_NEAR(s[2 * i].y, data[i].y, 1e-9);
  }
}

TEST(Sample, CoversDataXRange) {
  gen::Rng rng(38);
  const auto data = gen::well_spaced(rng, 8);
  const auto u = parametrize(data, ParamChoice::chord_length);
  const auto c = solve_interpolation(data, u, average_knots(u, 3));
  const auto s = sample_curve(c, 500);
  const auto [lo, hi] = std::minmax_element(s.begin(), s.end(),
                                            [](auto& a, auto& b) { return a.x < b.x; });
  EXPECT_LE(lo->x, data.front().x);
  EXPECT_GE(hi->x, data.back().x);
  EXPECT_EQ(s.front(), data.front());
  EXPECT_EQ(s.back(), data.back());
}
