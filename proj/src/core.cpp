#include "pivot/core.hpp"

#include <algorithm>
#include <limits>

namespace pivot {

double Tolerance::effective_rank_rtol(Index rows, Index cols) const {
  if (rank_rtol) {
    return *rank_rtol;
  }
  const double dim = static_cast<double>(std::max(rows, cols));
  return dim * std::numeric_limits<double>::epsilon();
}

NoGroupInverse::NoGroupInverse(std::string which_name, Index rank_value,
                               Index rank_squared_value)
    : std::runtime_error("group inverse of " + which_name +
                         " does not exist: rank(" + which_name + ")=" +
                         std::to_string(rank_value) + ", rank(" + which_name +
                         "^2)=" + std::to_string(rank_squared_value)),
      which(std::move(which_name)),
      rank(rank_value),
      rank_squared(rank_squared_value) {}

HypothesisViolated::HypothesisViolated(std::string inclusion_name)
    : std::runtime_error("hypothesis violated: " + inclusion_name),
      inclusion(std::move(inclusion_name)) {}

Matrix conjugate_transpose(const Matrix& a) { return a.adjoint(); }

bool mat_approx_eq(const Matrix& x, const Matrix& y, const Tolerance& tol) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw std::invalid_argument("mat_approx_eq: dimension mismatch");
  }
  const double scale = std::max(x.norm(), y.norm());
  return (x - y).norm() <= tol.eq_threshold(scale);
}

Index numerical_rank(const Matrix& a, const Tolerance& tol) {
  const Eigen::JacobiSVD<Matrix> svd(a);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) {
    return 0;
  }
  const double cutoff = tol.effective_rank_rtol(a.rows(), a.cols()) * sv(0);
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff) {
    ++rank;
  }
  return rank;
}

}  // namespace pivot
