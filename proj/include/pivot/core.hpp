#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace pivot {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Numerical thresholds governing rank decisions and approximate equality.
///
/// `rank_rtol` is the relative cutoff on singular values; when unset the
/// dimension-dependent default max(rows, cols) * machine-epsilon is used.
/// Approximate equality of X and Y holds when
/// ||X - Y||_F <= eq_atol + eq_rtol * scale.
struct Tolerance {
  std::optional<double> rank_rtol;
  double eq_atol = 1e-10;
  double eq_rtol = 1e-8;

  double effective_rank_rtol(Index rows, Index cols) const;
  double eq_threshold(double scale) const { return eq_atol + eq_rtol * scale; }
};

/// The rank test rank(X) == rank(X^2) rejected matrix `which`.
struct NoGroupInverse : std::runtime_error {
  NoGroupInverse(std::string which_name, Index rank_value, Index rank_squared_value);

  std::string which;
  Index rank;
  Index rank_squared;
};

/// A named range inclusion required by a theorem or lemma does not hold.
struct HypothesisViolated : std::runtime_error {
  explicit HypothesisViolated(std::string inclusion_name);

  std::string inclusion;
};

/// Resample budget exhausted while generating a random instance.
struct GenerationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The requested hypothesis violation cannot exist (e.g. a full-rank block
/// leaves no range complement to perturb into).
struct InfeasibleViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Matrix conjugate_transpose(const Matrix& a);

/// True iff ||X - Y||_F <= eq_atol + eq_rtol * max(||X||_F, ||Y||_F).
/// Dimension mismatch is a usage error.
bool mat_approx_eq(const Matrix& x, const Matrix& y, const Tolerance& tol = {});

/// Number of singular values exceeding rank_rtol times the largest one.
Index numerical_rank(const Matrix& a, const Tolerance& tol = {});

}  // namespace pivot
