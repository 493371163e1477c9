#include "pivot/ppt.hpp"

#include <stdexcept>

namespace pivot {

namespace {

Matrix sharp_of(const Matrix& x, const Tolerance& tol, const char* name) {
  if (!has_index_at_most_one(x, tol)) {
    throw NoGroupInverse(name, numerical_rank(x, tol),
                         numerical_rank(x * x, tol));
  }
  return group_inverse(x, tol).inverse;
}

void require_lemma_i(const BlockMatrix& m, const Tolerance& tol) {
  if (!has_index_at_most_one(m.A, tol)) {
    throw NoGroupInverse("A", numerical_rank(m.A, tol),
                         numerical_rank(m.A * m.A, tol));
  }
  if (!range_included(m.B, m.A, tol)) {
    throw HypothesisViolated("incl_BA");
  }
  if (!range_included(conjugate_transpose(m.C), conjugate_transpose(m.A),
                      tol)) {
    throw HypothesisViolated("incl_CstarAstar");
  }
}

void require_lemma_ii(const BlockMatrix& m, const Tolerance& tol) {
  if (!has_index_at_most_one(m.D, tol)) {
    throw NoGroupInverse("D", numerical_rank(m.D, tol),
                         numerical_rank(m.D * m.D, tol));
  }
  if (!range_included(m.C, m.D, tol)) {
    throw HypothesisViolated("incl_CD");
  }
  if (!range_included(conjugate_transpose(m.B), conjugate_transpose(m.D),
                      tol)) {
    throw HypothesisViolated("incl_BstarDstar");
  }
}

void require_lengths(const BlockMatrix& m, const Vector& x1,
                     const Vector& x2) {
  if (x1.size() != m.p() || x2.size() != m.q()) {
    throw std::invalid_argument("exchange: vector lengths do not conform");
  }
}

bool vec_approx_eq(const Vector& u, const Vector& v, const Tolerance& tol) {
  return mat_approx_eq(u, v, tol);
}

}  // namespace

BlockMatrix pppt(const BlockMatrix& m, const Tolerance& tol) {
  const Matrix a_sharp = sharp_of(m.A, tol, "A");
  // Same computation path as pseudo_schur, so the bottom-right block matches
  // Theorem 1's K exactly.
  const Matrix k = pseudo_schur(m, tol);
  return BlockMatrix(a_sharp, -(a_sharp * m.B), m.C * a_sharp, k);
}

BlockMatrix cpppt(const BlockMatrix& m, const Tolerance& tol) {
  const Matrix d_sharp = sharp_of(m.D, tol, "D");
  const Matrix l = complementary_schur(m, tol);
  return BlockMatrix(l, m.B * d_sharp, -(d_sharp * m.C), d_sharp);
}

bool pppt_involution_check(const BlockMatrix& m, const Tolerance& tol) {
  require_lemma_i(m, tol);
  const BlockMatrix doubled = pppt(pppt(m, tol), tol);
  return block_approx_eq(doubled, m, tol);
}

bool cpppt_involution_check(const BlockMatrix& m, const Tolerance& tol) {
  require_lemma_ii(m, tol);
  const BlockMatrix doubled = cpppt(cpppt(m, tol), tol);
  return block_approx_eq(doubled, m, tol);
}

std::pair<Vector, Vector> exchange_forward(const BlockMatrix& m,
                                           const Vector& x1,
                                           const Vector& x2) {
  require_lengths(m, x1, x2);
  return {m.A * x1 + m.B * x2, m.C * x1 + m.D * x2};
}

ExchangeVectors exchange_witness(const BlockMatrix& m, const Vector& x1,
                                 const Vector& x2) {
  auto [y1, y2] = exchange_forward(m, x1, x2);
  return ExchangeVectors{x1, x2, std::move(y1), std::move(y2)};
}

bool exchange_equivalence_check(const BlockMatrix& m, const Vector& x1,
                                const Vector& x2, const Vector& y1,
                                const Tolerance& tol) {
  require_lengths(m, x1, x2);
  if (y1.size() != m.p()) {
    throw std::invalid_argument("exchange: vector lengths do not conform");
  }
  require_lemma_i(m, tol);

  const Matrix a_sharp = group_inverse(m.A, tol).inverse;
  const Matrix k = pseudo_schur(m, tol);
  const Vector y2 = m.C * x1 + m.D * x2;

  const bool m_side = vec_approx_eq(m.A * x1 + m.B * x2,
                                    m.A * (a_sharp * y1), tol);
  const bool p_side =
      vec_approx_eq(a_sharp * y1 - a_sharp * (m.B * x2),
                    a_sharp * (m.A * x1), tol) &&
      vec_approx_eq(m.C * (a_sharp * y1) + k * x2, y2, tol);
  return m_side == p_side;
}

bool exchange_equivalence_check_complementary(const BlockMatrix& m,
                                              const Vector& x1,
                                              const Vector& x2,
                                              const Vector& y2,
                                              const Tolerance& tol) {
  require_lengths(m, x1, x2);
  if (y2.size() != m.q()) {
    throw std::invalid_argument("exchange: vector lengths do not conform");
  }
  require_lemma_ii(m, tol);
  return exchange_equivalence_check(block_swap(m), x2, x1, y2, tol);
}

}  // namespace pivot
