#include "pivot/geninv.hpp"

#include <stdexcept>

namespace pivot {

namespace {

Index rank_from_singular_values(const Eigen::VectorXd& sv, Index rows,
                                Index cols, const Tolerance& tol) {
  if (sv.size() == 0) {
    return 0;
  }
  const double cutoff = tol.effective_rank_rtol(rows, cols) * sv(0);
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff) {
    ++rank;
  }
  return rank;
}

}  // namespace

bool has_index_at_most_one(const Matrix& a, const Tolerance& tol) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("has_index_at_most_one: matrix must be square");
  }
  return numerical_rank(a, tol) == numerical_rank(a * a, tol);
}

GroupInverseResult group_inverse(const Matrix& a, const Tolerance& tol) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("group_inverse: matrix must be square");
  }
  const Eigen::JacobiSVD<Matrix> svd(
      a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const Index r = rank_from_singular_values(sv, a.rows(), a.cols(), tol);

  // Existence is decided by the rank test, not by a failed factorization.
  const Index rank_sq = numerical_rank(a * a, tol);
  if (r != rank_sq) {
    throw NoGroupInverse("A", r, rank_sq);
  }

  GroupInverseResult result;
  result.rank = r;
  if (r == 0) {
    result.inverse = Matrix::Zero(a.rows(), a.cols());
  } else {
    const Vector scale = sv.head(r).cast<Complex>();
    const Matrix f = svd.matrixU().leftCols(r) * scale.asDiagonal();
    const Matrix g = svd.matrixV().leftCols(r).adjoint();
    const Matrix w = g * f;  // invertible exactly when the index is at most 1
    const auto qr = w.colPivHouseholderQr();
    result.inverse = f * qr.solve(qr.solve(g));
  }

  const Matrix& x = result.inverse;
  result.residuals = {(a * x * a - a).norm(), (x * a * x - x).norm(),
                      (a * x - x * a).norm()};
  return result;
}

Matrix moore_penrose(const Matrix& a, const Tolerance& tol) {
  const Eigen::JacobiSVD<Matrix> svd(
      a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const Index r = rank_from_singular_values(sv, a.rows(), a.cols(), tol);
  if (r == 0) {
    return Matrix::Zero(a.cols(), a.rows());
  }
  const Vector inv_scale = sv.head(r).cwiseInverse().cast<Complex>();
  return svd.matrixV().leftCols(r) * inv_scale.asDiagonal() *
         svd.matrixU().leftCols(r).adjoint();
}

bool range_included(const Matrix& x, const Matrix& y, const Tolerance& tol) {
  if (x.rows() != y.rows()) {
    throw std::invalid_argument("range_included: row counts differ");
  }
  const Matrix y_pinv = moore_penrose(y, tol);
  const double residual = (x - y * (y_pinv * x)).norm();
  return residual <= tol.eq_threshold(x.norm());
}

}  // namespace pivot
