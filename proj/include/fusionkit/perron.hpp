#pragma once

// Frobenius-Perron dimensions via power iteration.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "fusionkit/errors.hpp"
#include "fusionkit/ring.hpp"

namespace fusionkit {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr long kDefaultMaxIterations = 100000;

/// Dense row-major square matrix; only used transiently for eigenproblems.
struct DenseMatrix {
  int n = 0;
  std::vector<double> a;

  explicit DenseMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0.0) {}
  double& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
  double operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }

  std::vector<double> apply(const std::vector<double>& v) const {
    std::vector<double> w(n, 0.0);
    for (int r = 0; r < n; ++r) {
      double s = 0.0;
      for (int c = 0; c < n; ++c) s += (*this)(r, c) * v[c];
      w[r] = s;
    }
    return w;
  }
};

struct PerronResult {
  std::vector<double> vector;  // max entry 1
  double eigenvalue = 0.0;
  long iterations = 0;
  double residual = 0.0;       // ||A v - λ v||_inf / λ
};

/// Power iteration for a nonnegative primitive matrix. Stops once successive
/// iterates (normalized to unit max entry) differ by less than tol * 1e-3,
/// or by a few ulps if that is unreachable.
inline PerronResult perron_vector(const DenseMatrix& m, double tol, long max_iterations) {
  const double target = std::max(tol * 1e-3, 16 * std::numeric_limits<double>::epsilon());
  std::vector<double> v(m.n, 1.0);
  PerronResult res;
  for (long it = 1; it <= max_iterations; ++it) {
    auto w = m.apply(v);
    double mx = *std::max_element(w.begin(), w.end());
    if (!(mx > 0.0)) throw ConvergenceError("power iteration collapsed to zero", 0.0, it);
    double change = 0.0;
    for (int i = 0; i < m.n; ++i) {
      w[i] /= mx;
      change = std::max(change, std::abs(w[i] - v[i]));
    }
    v = std::move(w);
    res.iterations = it;
    if (change <= target) {
      auto av = m.apply(v);
      double lambda = *std::max_element(av.begin(), av.end());
      double r = 0.0;
      for (int i = 0; i < m.n; ++i) r = std::max(r, std::abs(av[i] - lambda * v[i]));
      res.vector = v;
      res.eigenvalue = lambda;
      res.residual = r / lambda;
      return res;
    }
  }
  auto av = m.apply(v);
  double lambda = *std::max_element(av.begin(), av.end());
  double r = 0.0;
  for (int i = 0; i < m.n; ++i) r = std::max(r, std::abs(av[i] - lambda * v[i]));
  throw ConvergenceError(detail::concat("power iteration did not converge in ", max_iterations,
                                        " iterations (residual ", r / lambda, ")"),
                         r / lambda, max_iterations);
}

inline bool near_integer(double x, double tol) { return std::abs(x - std::round(x)) < tol; }

struct FPData {
  std::vector<double> dims;
  double ring_dim = 0.0;
  double tolerance = kDefaultTolerance;
  std::vector<bool> integer_flags;
  std::vector<bool> sq_integer_flags;
  bool ring_dim_integer = false;
  /// Σ round(d_i²) == round(FPdim R); only present when every d_i² is flagged integral.
  std::optional<bool> exactness_consistent;
  double homomorphism_residual = 0.0;
  long iterations = 0;

  bool all_integer() const {
    return std::all_of(integer_flags.begin(), integer_flags.end(), [](bool b) { return b; });
  }
};

/// Matrix of left multiplication by X_i: column j holds the coefficients of X_i X_j.
inline DenseMatrix left_multiplication_matrix(const FusionRing& ring, int i) {
  DenseMatrix m(ring.rank());
  for (int j = 0; j < ring.rank(); ++j)
    for (const auto& t : ring.product(i, j)) m(t.index, j) += static_cast<double>(t.mult);
  return m;
}

/// Frobenius-Perron dimensions. The Perron vector of Σ_i N_{X_i} is the
/// regular element Σ d_j X_j; each d_i is then read off as the Rayleigh ratio
/// of N_{X_i} at the largest coordinate.
inline FPData fp_dimensions(const FusionRing& ring, double tolerance = kDefaultTolerance,
                            long max_iterations = kDefaultMaxIterations) {
  if (!(tolerance > 0)) throw PreconditionError("tolerance must be positive");
  const int r = ring.rank();
  DenseMatrix sum(r);
  for (const auto& e : ring.entries()) sum(e.k, e.j) += static_cast<double>(e.value);
  auto pr = perron_vector(sum, tolerance, max_iterations);

  std::vector<double> v = pr.vector;
  const double v0 = v[0];
  for (double& x : v) x /= v0;
  int argmax = 0;
  for (int j = 1; j < r; ++j)
    if (v[j] > v[argmax]) argmax = j;

  FPData fp;
  fp.tolerance = tolerance;
  fp.iterations = pr.iterations;
  fp.dims.resize(r);
  for (int i = 0; i < r; ++i) {
    double s = 0.0;
    for (int j = 0; j < r; ++j) s += static_cast<double>(ring.coeff(i, j, argmax)) * v[j];
    fp.dims[i] = s / v[argmax];
  }
  for (double d : fp.dims) fp.ring_dim += d * d;

  double worst = 0.0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      double rhs = 0.0;
      for (const auto& t : ring.product(i, j)) rhs += static_cast<double>(t.mult) * fp.dims[t.index];
      worst = std::max(worst, std::abs(fp.dims[i] * fp.dims[j] - rhs));
    }
  fp.homomorphism_residual = worst;
  for (int i = 0; i < r; ++i) {
    if (!(fp.dims[i] > 0.0))
      throw ConvergenceError(detail::concat("nonpositive dimension at index ", i), worst, pr.iterations);
    if (std::abs(fp.dims[i] - fp.dims[ring.dual(i)]) > 10 * tolerance)
      throw ConvergenceError(detail::concat("FPdim differs on ", i, " and its dual"), worst,
                             pr.iterations);
  }
  if (std::abs(fp.dims[0] - 1.0) > 10 * tolerance || worst > 10 * tolerance)
    throw ConvergenceError(
        detail::concat("dimensions fail the homomorphism identity (residual ", worst, ")"), worst,
        pr.iterations);

  for (double d : fp.dims) {
    fp.integer_flags.push_back(near_integer(d, tolerance));
    fp.sq_integer_flags.push_back(near_integer(d * d, tolerance));
  }
  fp.ring_dim_integer = near_integer(fp.ring_dim, tolerance);
  if (std::all_of(fp.sq_integer_flags.begin(), fp.sq_integer_flags.end(), [](bool b) { return b; })) {
    long long s = 0;
    for (double d : fp.dims) s += std::llround(d * d);
    fp.exactness_consistent = (s == std::llround(fp.ring_dim));
  }
  return fp;
}

}  // namespace fusionkit
