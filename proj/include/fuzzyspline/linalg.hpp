#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fuzzyspline::linalg {

/// Dense square matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

  std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

/// Pivots with magnitude below this are treated as singular.
inline constexpr double kMinPivot = 1e-12;

/// Solves A X = B for `rhs.size()` right-hand sides by Gaussian elimination
/// with partial pivoting. Each rhs vector has length A.size() and is
/// overwritten with its solution. Throws SolverError naming the pivot row.
void solve_in_place(Matrix a, std::span<std::vector<double>> rhs);

}  // namespace fuzzyspline::linalg
