#include "fuzzyspline/linalg.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "fuzzyspline/errors.hpp"

namespace fuzzyspline::linalg {

void solve_in_place(Matrix a, std::span<std::vector<double>> rhs) {
  const std::size_t n = a.size();
  for (const auto& b : rhs) {
    if (b.size() != n) throw ArityError("right-hand side length does not match the matrix");
  }

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a(i, k)) > best) {
        best = std::abs(a(i, k));
        piv = i;
      }
    }
    if (!(best >= kMinPivot)) {
      throw SolverError(k, "singular or ill-conditioned system: pivot " + std::to_string(best) +
                               " below threshold at row " + std::to_string(k));
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      for (auto& b : rhs) std::swap(b[k], b[piv]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a(i, k) / a(k, k);
      if (f == 0.0) continue;
      a(i, k) = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
      for (auto& b : rhs) b[i] -= f * b[k];
    }
  }

  for (auto& b : rhs) {
    for (std::size_t ii = n; ii-- > 0;) {
      double s = b[ii];
      for (std::size_t j = ii + 1; j < n; ++j) s -= a(ii, j) * b[j];
      b[ii] = s / a(ii, ii);
    }
  }
}

}  // namespace fuzzyspline::linalg
