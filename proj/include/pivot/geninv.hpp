#pragma once

#include <array>

#include "pivot/core.hpp"

namespace pivot {

/// Group inverse together with its rank decision and the Frobenius residuals
/// of the three defining equations AXA - A, XAX - X, AX - XA.
struct GroupInverseResult {
  Matrix inverse;
  Index rank = 0;
  std::array<double, 3> residuals{};
};

/// True iff rank(A) == rank(A * A), the existence criterion for the group
/// inverse. Non-square input is a usage error.
bool has_index_at_most_one(const Matrix& a, const Tolerance& tol = {});

/// Group inverse via full-rank factorization A = F * G from the singular
/// value decomposition: A# = F * (G * F)^-2 * G. Throws NoGroupInverse when
/// the rank test rejects A.
GroupInverseResult group_inverse(const Matrix& a, const Tolerance& tol = {});

/// Moore-Penrose inverse via SVD with the same singular-value cutoff as
/// numerical_rank.
Matrix moore_penrose(const Matrix& a, const Tolerance& tol = {});

/// True iff R(X) is contained in R(Y): the orthogonal projector onto R(Y)
/// fixes X, i.e. ||(I - Y * Y^+) * X||_F <= eq_atol + eq_rtol * ||X||_F.
bool range_included(const Matrix& x, const Matrix& y, const Tolerance& tol = {});

}  // namespace pivot
