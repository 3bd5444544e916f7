// Hecke R-matrices: construction, certification, height and D-matrices.
#pragma once

#include <optional>

#include "qchn/projectors.hpp"
#include "qchn/tensor_op.hpp"

namespace qchn {

// The flip P: e_a (x) e_b -> e_b (x) e_a. A Hecke R-matrix at q = 1.
TensorOp permutation_op(int n);

// Standard Drinfeld-Jimbo R-matrix in Hecke normalization:
//   e_i (x) e_i -> q e_i (x) e_i
//   e_i (x) e_j -> e_j (x) e_i + (q - q^-1) e_i (x) e_j   (i < j)
//   e_i (x) e_j -> e_j (x) e_i                            (i > j)
// Treated as untrusted input everywhere: correctness is established only by
// check_ybe / check_hecke, never assumed.
TensorOp standard_rhat(int n);

// R1 R2 R1 - R2 R1 R2 on V^(tensor 3); pass iff structurally zero.
TensorOp check_ybe(const TensorOp& rhat);

// R^2 - I - (q - q^-1) R; pass iff structurally zero.
TensorOp check_hecke(const TensorOp& rhat);

// R - (q - q^-1) I; requires the Hecke check to pass, and is then a
// two-sided inverse exactly.
TensorOp rhat_inverse(const TensorOp& rhat);

// Smallest h <= max_k with symbolic trace A(h) = 1 (projector rank) and
// A(h+1) structurally zero. Throws arithmetic_error("... not even ...")
// if no such h exists up to max_k.
int compute_height(ProjectorTower& anti, int max_k);

// D_r = (h_q / q^h) Tr_(2..h) A(h),  D_l = (h_q / q^h) Tr_(1..h-1) A(h).
std::pair<TensorOp, TensorOp> d_matrices(ProjectorTower& anti, int height);

// A certified Hecke R-matrix with its derived data.
struct HeckeRMatrix {
  TensorOp rhat;
  int n;
  int height;
  TensorOp rhat_inv;
  TensorOp d_right;
  TensorOp d_left;
};

// Validation evidence; ok() iff both residuals are structurally zero.
struct RMatrixCheck {
  TensorOp ybe_residual;
  TensorOp hecke_residual;
  bool ok() const { return ybe_residual.is_zero() && hecke_residual.is_zero(); }
};

RMatrixCheck check_rmatrix(const TensorOp& rhat);

// Runs both checks, computes height and D-matrices; throws
// invalid_argument_error when a check fails or no height is found.
HeckeRMatrix certify_rmatrix(const TensorOp& rhat, int max_k = 6);

}  // namespace qchn
