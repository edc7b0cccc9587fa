#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "ltd/errors.hpp"

namespace ltd {

/// A real n-by-n tridiagonal system T*f = rhs held as three diagonals.
///
/// `diag` and `rhs` have length n (n >= 1); `super` and `sub` have length
/// n-1 and are empty for n = 1. Row i reads
///   sub[i-1]*f[i-1] + diag[i]*f[i] + super[i]*f[i+1] = rhs[i]
/// with out-of-range terms omitted.
struct TridiagonalSystem {
  std::vector<double> diag;
  std::vector<double> super;
  std::vector<double> sub;
  std::vector<double> rhs;

  std::size_t size() const { return diag.size(); }
};

/// Throws DimensionError unless the four bands have consistent lengths and
/// the system is nonempty.
inline void validate(const TridiagonalSystem& system) {
  const std::size_t n = system.diag.size();
  if (n == 0) {
    throw DimensionError("tridiagonal system: empty system");
  }
  if (system.rhs.size() != n || system.super.size() != n - 1 ||
      system.sub.size() != n - 1) {
    throw DimensionError(
        "tridiagonal system: band lengths inconsistent (diag " +
        std::to_string(n) + ", super " + std::to_string(system.super.size()) +
        ", sub " + std::to_string(system.sub.size()) + ", rhs " +
        std::to_string(system.rhs.size()) + ")");
  }
}

/// True iff every row satisfies |diag_i| > |super_i| + |sub_{i-1}|, with the
/// missing off-diagonal entries of the first and last row treated as zero.
inline bool is_strictly_diagonally_dominant(const TridiagonalSystem& system) {
  validate(system);
  const std::size_t n = system.size();
  for (std::size_t i = 0; i < n; ++i) {
    double off = 0.0;
    if (i + 1 < n) off += std::abs(system.super[i]);
    if (i > 0) off += std::abs(system.sub[i - 1]);
    if (!(std::abs(system.diag[i]) > off)) return false;
  }
  return true;
}

/// Computes y = T*x for the system's matrix. O(n).
inline std::vector<double> multiply(const TridiagonalSystem& system,
                                    const std::vector<double>& x) {
  validate(system);
  const std::size_t n = system.size();
  if (x.size() != n) {
    throw DimensionError("multiply: x has length " +
                         std::to_string(x.size()) + ", expected " +
                         std::to_string(n));
  }
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = system.diag[i] * x[i];
    if (i > 0) acc += system.sub[i - 1] * x[i - 1];
    if (i + 1 < n) acc += system.super[i] * x[i + 1];
    y[i] = acc;
  }
  return y;
}

/// Solves T*f = rhs by Thomas-style forward elimination and back
/// substitution, O(n) time and space, no pivoting.
///
/// Strict diagonal dominance (guaranteed for systems built by
/// build_tridiagonal_model) keeps every elimination pivot away from zero.
/// As a guard against degenerate hand-built systems, a pivot with magnitude
/// below 1e-12*(1 + max|diag_i|) raises ZeroPivotError; the caller is
/// expected to rebuild the model with fresh random draws.
inline std::vector<double> solve(const TridiagonalSystem& system) {
  validate(system);
  const std::size_t n = system.size();

  double max_diag = 0.0;
  for (double d : system.diag) max_diag = std::max(max_diag, std::abs(d));
  const double pivot_floor = 1e-12 * (1.0 + max_diag);

  // c holds the scaled super-diagonal, g the transformed rhs.
  std::vector<double> c(n, 0.0);
  std::vector<double> g(n);
  double pivot = system.diag[0];
  if (std::abs(pivot) < pivot_floor) {
    throw ZeroPivotError("solve: pivot " + std::to_string(pivot) +
                         " in row 0 below floor");
  }
  if (n > 1) c[0] = system.super[0] / pivot;
  g[0] = system.rhs[0] / pivot;
  for (std::size_t i = 1; i < n; ++i) {
    pivot = system.diag[i] - system.sub[i - 1] * c[i - 1];
    if (std::abs(pivot) < pivot_floor) {
      throw ZeroPivotError("solve: pivot " + std::to_string(pivot) +
                           " in row " + std::to_string(i) + " below floor");
    }
    if (i + 1 < n) c[i] = system.super[i] / pivot;
    g[i] = (system.rhs[i] - system.sub[i - 1] * g[i - 1]) / pivot;
  }

  std::vector<double> f(n);
  f[n - 1] = g[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) {
    f[i] = g[i] - c[i] * f[i + 1];
  }
  return f;
}

}  // namespace ltd
