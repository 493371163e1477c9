#pragma once

#include "pivot/geninv.hpp"

namespace pivot {

/// 2x2 partitioned matrix with square diagonal blocks: A is p x p, D is
/// q x q, B is p x q and C is q x p. Off-diagonal blocks may be rectangular.
struct BlockMatrix {
  Matrix A;
  Matrix B;
  Matrix C;
  Matrix D;

  BlockMatrix(Matrix a, Matrix b, Matrix c, Matrix d);

  Index p() const { return A.rows(); }
  Index q() const { return D.rows(); }

  /// The (p+q) x (p+q) matrix with the four blocks in place.
  Matrix assemble() const;
};

/// [[A, B], [C, D]] -> [[D, C], [B, A]]. Conjugation by the permutation that
/// swaps the two block coordinates; group inverses commute with it.
BlockMatrix block_swap(const BlockMatrix& m);

bool block_approx_eq(const BlockMatrix& x, const BlockMatrix& y,
                     const Tolerance& tol = {});

/// Truth values of the index-1 existence checks and range inclusions that
/// the block group-inverse formulas and the pivot-transform lemmas require.
/// Fields involving K (resp. L) are false whenever A (resp. D) fails the
/// index test, since the Schur complement is then undefined; a_index1 and
/// d_index1 are the flags to consult.
struct HypothesisReport {
  bool a_index1 = false;
  bool k_index1 = false;
  bool d_index1 = false;
  bool l_index1 = false;
  bool incl_CstarAstar = false;  // R(C*) in R(A*)
  bool incl_BA = false;          // R(B)  in R(A)
  bool incl_CK = false;          // R(C)  in R(K)
  bool incl_BstarKstar = false;  // R(B*) in R(K*)
  bool incl_BstarDstar = false;  // R(B*) in R(D*)
  bool incl_CD = false;          // R(C)  in R(D)
  bool incl_BL = false;          // R(B)  in R(L)
  bool incl_CstarLstar = false;  // R(C*) in R(L*)

  bool theorem1() const {
    return a_index1 && k_index1 && incl_CstarAstar && incl_BA && incl_CK &&
           incl_BstarKstar;
  }
  bool theorem2() const {
    return d_index1 && l_index1 && incl_BstarDstar && incl_CD && incl_BL &&
           incl_CstarLstar;
  }
  bool lemma1_i() const { return a_index1 && incl_BA && incl_CstarAstar; }
  bool lemma1_ii() const { return d_index1 && incl_CD && incl_BstarDstar; }
};

/// K = D - C * A# * B. Throws NoGroupInverse("A") when A has index > 1.
Matrix pseudo_schur(const BlockMatrix& m, const Tolerance& tol = {});

/// L = A - B * D# * C. Throws NoGroupInverse("D") when D has index > 1.
Matrix complementary_schur(const BlockMatrix& m, const Tolerance& tol = {});

/// Total function: evaluates every predicate of HypothesisReport.
HypothesisReport check_hypotheses(const BlockMatrix& m,
                                  const Tolerance& tol = {});

/// Group inverse of the assembled matrix,
///   [[A# + A# B K# C A#, -A# B K#], [-K# C A#, K#]],
/// valid when A and K pass the index test and the four inclusions
/// R(C*) in R(A*), R(B) in R(A), R(C) in R(K), R(B*) in R(K*) hold.
/// Throws NoGroupInverse or HypothesisViolated otherwise.
Matrix block_group_inverse(const BlockMatrix& m, const Tolerance& tol = {});

/// Complementary form built from L = A - B D# C:
///   [[L#, -L# B D#], [-D# C L#, D# + D# C L# B D#]],
/// gated on D, L and the inclusions R(B*) in R(D*), R(C) in R(D),
/// R(B) in R(L), R(C*) in R(L*).
Matrix block_group_inverse_complementary(const BlockMatrix& m,
                                         const Tolerance& tol = {});

/// The candidate formulas applied without inclusion gating (the index tests
/// on A and K, resp. D and L, still apply). With violated inclusions the
/// candidate is provably not the group inverse; verify_group_inverse
/// measures by how much.
Matrix block_group_inverse_unchecked(const BlockMatrix& m,
                                     const Tolerance& tol = {});
Matrix block_group_inverse_complementary_unchecked(const BlockMatrix& m,
                                                   const Tolerance& tol = {});

/// Frobenius residuals of the three defining equations for X as a candidate
/// group inverse of M, each compared against eq_atol + eq_rtol * ||M||_F.
struct VerifyResult {
  double residual_mxm = 0.0;   // ||M X M - M||_F
  double residual_xmx = 0.0;   // ||X M X - X||_F
  double residual_comm = 0.0;  // ||M X - X M||_F
  bool pass = false;

  double max_residual() const;
};

VerifyResult verify_group_inverse(const Matrix& m, const Matrix& x,
                                  const Tolerance& tol = {});

}  // namespace pivot
