#include "pivot/block.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace pivot {

namespace {

// Index-gated group inverse that names the offending block in the error.
Matrix sharp(const Matrix& x, const Tolerance& tol, const char* name) {
  if (!has_index_at_most_one(x, tol)) {
    throw NoGroupInverse(name, numerical_rank(x, tol),
                         numerical_rank(x * x, tol));
  }
  return group_inverse(x, tol).inverse;
}

Matrix assemble_blocks(const Matrix& tl, const Matrix& tr, const Matrix& bl,
                       const Matrix& br) {
  Matrix out(tl.rows() + bl.rows(), tl.cols() + tr.cols());
  out.topLeftCorner(tl.rows(), tl.cols()) = tl;
  out.topRightCorner(tr.rows(), tr.cols()) = tr;
  out.bottomLeftCorner(bl.rows(), bl.cols()) = bl;
  out.bottomRightCorner(br.rows(), br.cols()) = br;
  return out;
}

Matrix theorem1_assembly(const BlockMatrix& m, const Matrix& a_sharp,
                         const Matrix& k_sharp) {
  const Matrix a_sharp_b = a_sharp * m.B;
  const Matrix c_a_sharp = m.C * a_sharp;
  return assemble_blocks(a_sharp + a_sharp_b * k_sharp * c_a_sharp,
                         -(a_sharp_b * k_sharp), -(k_sharp * c_a_sharp),
                         k_sharp);
}

Matrix theorem2_assembly(const BlockMatrix& m, const Matrix& d_sharp,
                         const Matrix& l_sharp) {
  const Matrix l_sharp_b = l_sharp * m.B;
  const Matrix d_sharp_c = d_sharp * m.C;
  return assemble_blocks(l_sharp, -(l_sharp_b * d_sharp),
                         -(d_sharp_c * l_sharp),
                         d_sharp + d_sharp_c * l_sharp_b * d_sharp);
}

}  // namespace

BlockMatrix::BlockMatrix(Matrix a, Matrix b, Matrix c, Matrix d)
    : A(std::move(a)), B(std::move(b)), C(std::move(c)), D(std::move(d)) {
  if (A.rows() < 1 || A.rows() != A.cols()) {
    throw std::invalid_argument("BlockMatrix: A must be square and nonempty");
  }
  if (D.rows() < 1 || D.rows() != D.cols()) {
    throw std::invalid_argument("BlockMatrix: D must be square and nonempty");
  }
  if (B.rows() != A.rows() || B.cols() != D.cols()) {
    throw std::invalid_argument("BlockMatrix: B must be p x q");
  }
  if (C.rows() != D.rows() || C.cols() != A.cols()) {
    throw std::invalid_argument("BlockMatrix: C must be q x p");
  }
}

Matrix BlockMatrix::assemble() const { return assemble_blocks(A, B, C, D); }

BlockMatrix block_swap(const BlockMatrix& m) {
  return BlockMatrix(m.D, m.C, m.B, m.A);
}

bool block_approx_eq(const BlockMatrix& x, const BlockMatrix& y,
                     const Tolerance& tol) {
  return mat_approx_eq(x.A, y.A, tol) && mat_approx_eq(x.B, y.B, tol) &&
         mat_approx_eq(x.C, y.C, tol) && mat_approx_eq(x.D, y.D, tol);
}

Matrix pseudo_schur(const BlockMatrix& m, const Tolerance& tol) {
  const Matrix a_sharp = sharp(m.A, tol, "A");
  return m.D - m.C * (a_sharp * m.B);
}

Matrix complementary_schur(const BlockMatrix& m, const Tolerance& tol) {
  const Matrix d_sharp = sharp(m.D, tol, "D");
  return m.A - m.B * (d_sharp * m.C);
}

HypothesisReport check_hypotheses(const BlockMatrix& m, const Tolerance& tol) {
  HypothesisReport report;
  report.a_index1 = has_index_at_most_one(m.A, tol);
  report.d_index1 = has_index_at_most_one(m.D, tol);
  report.incl_CstarAstar =
      range_included(conjugate_transpose(m.C), conjugate_transpose(m.A), tol);
  report.incl_BA = range_included(m.B, m.A, tol);
  report.incl_BstarDstar =
      range_included(conjugate_transpose(m.B), conjugate_transpose(m.D), tol);
  report.incl_CD = range_included(m.C, m.D, tol);
  if (report.a_index1) {
    const Matrix k = pseudo_schur(m, tol);
    report.k_index1 = has_index_at_most_one(k, tol);
    report.incl_CK = range_included(m.C, k, tol);
    report.incl_BstarKstar =
        range_included(conjugate_transpose(m.B), conjugate_transpose(k), tol);
  }
  if (report.d_index1) {
    const Matrix l = complementary_schur(m, tol);
    report.l_index1 = has_index_at_most_one(l, tol);
    report.incl_BL = range_included(m.B, l, tol);
    report.incl_CstarLstar =
        range_included(conjugate_transpose(m.C), conjugate_transpose(l), tol);
  }
  return report;
}

Matrix block_group_inverse(const BlockMatrix& m, const Tolerance& tol) {
  const Matrix a_sharp = sharp(m.A, tol, "A");
  const Matrix k = pseudo_schur(m, tol);
  const Matrix k_sharp = sharp(k, tol, "K");
  if (!range_included(conjugate_transpose(m.C), conjugate_transpose(m.A),
                      tol)) {
    throw HypothesisViolated("incl_CstarAstar");
  }
  if (!range_included(m.B, m.A, tol)) {
    throw HypothesisViolated("incl_BA");
  }
  if (!range_included(m.C, k, tol)) {
    throw HypothesisViolated("incl_CK");
  }
  if (!range_included(conjugate_transpose(m.B), conjugate_transpose(k), tol)) {
    throw HypothesisViolated("incl_BstarKstar");
  }
  return theorem1_assembly(m, a_sharp, k_sharp);
}

Matrix block_group_inverse_complementary(const BlockMatrix& m,
                                         const Tolerance& tol) {
  const Matrix d_sharp = sharp(m.D, tol, "D");
  const Matrix l = complementary_schur(m, tol);
  const Matrix l_sharp = sharp(l, tol, "L");
  if (!range_included(conjugate_transpose(m.B), conjugate_transpose(m.D),
                      tol)) {
    throw HypothesisViolated("incl_BstarDstar");
  }
  if (!range_included(m.C, m.D, tol)) {
    throw HypothesisViolated("incl_CD");
  }
  if (!range_included(m.B, l, tol)) {
    throw HypothesisViolated("incl_BL");
  }
  if (!range_included(conjugate_transpose(m.C), conjugate_transpose(l), tol)) {
    throw HypothesisViolated("incl_CstarLstar");
  }
  return theorem2_assembly(m, d_sharp, l_sharp);
}

Matrix block_group_inverse_unchecked(const BlockMatrix& m,
                                     const Tolerance& tol) {
  const Matrix a_sharp = sharp(m.A, tol, "A");
  const Matrix k = pseudo_schur(m, tol);
  const Matrix k_sharp = sharp(k, tol, "K");
  return theorem1_assembly(m, a_sharp, k_sharp);
}

Matrix block_group_inverse_complementary_unchecked(const BlockMatrix& m,
                                                   const Tolerance& tol) {
  const Matrix d_sharp = sharp(m.D, tol, "D");
  const Matrix l = complementary_schur(m, tol);
  const Matrix l_sharp = sharp(l, tol, "L");
  return theorem2_assembly(m, d_sharp, l_sharp);
}

double VerifyResult::max_residual() const {
  return std::max({residual_mxm, residual_xmx, residual_comm});
}

VerifyResult verify_group_inverse(const Matrix& m, const Matrix& x,
                                  const Tolerance& tol) {
  if (m.rows() != m.cols() || x.rows() != x.cols() || m.rows() != x.rows()) {
    throw std::invalid_argument(
        "verify_group_inverse: matrices must be square with equal dimensions");
  }
  VerifyResult result;
  result.residual_mxm = (m * x * m - m).norm();
  result.residual_xmx = (x * m * x - x).norm();
  result.residual_comm = (m * x - x * m).norm();
  const double threshold = tol.eq_threshold(m.norm());
  result.pass = result.max_residual() <= threshold;
  return result;
}

}  // namespace pivot
