#pragma once

#include <utility>

#include "pivot/block.hpp"

namespace pivot {

/// The vector quadruple of the domain-range exchange relation: M maps
/// (x1; x2) to (A A# y1; y2) exactly when the pivot transform P maps
/// (y1; x2) to (A# A x1; y2).
struct ExchangeVectors {
  Vector x1;
  Vector x2;
  Vector y1;
  Vector y2;
};

/// Pseudo principal pivot transform relative to A:
/// blocks (A#, -A# B, C A#, K) with K the pseudo Schur complement.
/// Throws NoGroupInverse("A") when A fails the index test.
BlockMatrix pppt(const BlockMatrix& m, const Tolerance& tol = {});

/// Complementary transform relative to D: blocks (L, B D#, -D# C, D#).
BlockMatrix cpppt(const BlockMatrix& m, const Tolerance& tol = {});

/// Applies pppt twice and compares blockwise against M. Requires A index-1
/// and the inclusions R(B) in R(A), R(C*) in R(A*); the inner application
/// recomputes the group inverse of A#, relying on (A#)# = A numerically.
bool pppt_involution_check(const BlockMatrix& m, const Tolerance& tol = {});

/// Mirror of pppt_involution_check with D, gated on R(C) in R(D) and
/// R(B*) in R(D*).
bool cpppt_involution_check(const BlockMatrix& m, const Tolerance& tol = {});

/// (A x1 + B x2, C x1 + D x2), the right-hand side pair of the exchange
/// relation. Length mismatch is a usage error.
std::pair<Vector, Vector> exchange_forward(const BlockMatrix& m,
                                           const Vector& x1, const Vector& x2);

/// Canonical hypothesis-satisfying witness for the exchange relation:
/// y1 = A x1 + B x2 (fixed by A A# whenever R(B) in R(A)) and
/// y2 = C x1 + D x2.
ExchangeVectors exchange_witness(const BlockMatrix& m, const Vector& x1,
                                 const Vector& x2);

/// Evaluates both sides of the exchange equivalence for the given vectors,
/// with y2 = C x1 + D x2, and returns whether the two verdicts agree.
/// Gated on the same hypotheses as pppt_involution_check.
bool exchange_equivalence_check(const BlockMatrix& m, const Vector& x1,
                                const Vector& x2, const Vector& y1,
                                const Tolerance& tol = {});

/// Mirror relation taken with respect to D, evaluated as the block-swapped
/// instance of exchange_equivalence_check: x1 and x2 swap roles and y2
/// replaces y1. Gated on R(C) in R(D) and R(B*) in R(D*).
bool exchange_equivalence_check_complementary(const BlockMatrix& m,
                                              const Vector& x1,
                                              const Vector& x2,
                                              const Vector& y2,
                                              const Tolerance& tol = {});

}  // namespace pivot
