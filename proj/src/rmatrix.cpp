#include "qchn/rmatrix.hpp"

namespace qchn {

TensorOp permutation_op(int n) {
  TensorOp p(n, 2);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      p.set_entry(static_cast<std::uint32_t>(b * n + a),
                  static_cast<std::uint32_t>(a * n + b), ScalarQ::one());
  return p;
}

TensorOp standard_rhat(int n) {
  TensorOp r(n, 2);
  const ScalarQ lambda = ScalarQ::q_power(1) - ScalarQ::q_power(-1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto col = static_cast<std::uint32_t>(i * n + j);
      const auto flipped = static_cast<std::uint32_t>(j * n + i);
      if (i == j) {
        r.set_entry(col, col, ScalarQ::q_power(1));
      } else if (i < j) {
        r.set_entry(flipped, col, ScalarQ::one());
        r.set_entry(col, col, lambda);
      } else {
        r.set_entry(flipped, col, ScalarQ::one());
      }
    }
  }
  return r;
}

TensorOp check_ybe(const TensorOp& rhat) {
  if (rhat.k() != 2) throw invalid_argument_error("check_ybe needs a two-site operator");
  const TensorOp r1 = embed_pair(rhat, 1, 3);
  const TensorOp r2 = embed_pair(rhat, 2, 3);
  return sub(compose(r1, compose(r2, r1)), compose(r2, compose(r1, r2)));
}

TensorOp check_hecke(const TensorOp& rhat) {
  if (rhat.k() != 2) throw invalid_argument_error("check_hecke needs a two-site operator");
  const ScalarQ lambda = ScalarQ::q_power(1) - ScalarQ::q_power(-1);
  return sub(compose(rhat, rhat),
             add(identity_op(rhat.n(), 2), scale(lambda, rhat)));
}

TensorOp rhat_inverse(const TensorOp& rhat) {
  if (!check_hecke(rhat).is_zero())
    throw invalid_argument_error("rhat_inverse: the Hecke check fails");
  const ScalarQ lambda = ScalarQ::q_power(1) - ScalarQ::q_power(-1);
  return sub(rhat, scale(lambda, identity_op(rhat.n(), 2)));
}

int compute_height(ProjectorTower& anti, int max_k) {
  if (max_k < 1) throw invalid_argument_error("compute_height needs max_k >= 1");
  for (int h = 1; h <= max_k; ++h) {
    const TensorOp ah = anti.level(h);
    if (full_trace(ah) != ScalarQ::one()) continue;
    if (anti.level(h + 1).is_zero()) return h;
  }
  throw arithmetic_error("R-matrix is not even up to k = " + std::to_string(max_k));
}

std::pair<TensorOp, TensorOp> d_matrices(ProjectorTower& anti, int height) {
  const TensorOp ah = anti.level(height);
  const ScalarQ pref = qnum(height) * ScalarQ::q_power(-height);
  TensorOp d_right = scale(pref, partial_trace(ah, FactorSet::range(2, height)));
  TensorOp d_left = scale(pref, partial_trace(ah, FactorSet::range(1, height - 1)));
  return {std::move(d_right), std::move(d_left)};
}

RMatrixCheck check_rmatrix(const TensorOp& rhat) {
  return RMatrixCheck{check_ybe(rhat), check_hecke(rhat)};
}

HeckeRMatrix certify_rmatrix(const TensorOp& rhat, int max_k) {
  RMatrixCheck check = check_rmatrix(rhat);
  if (!check.ybe_residual.is_zero())
    throw invalid_argument_error("R-matrix fails the Yang-Baxter check");
  if (!check.hecke_residual.is_zero())
    throw invalid_argument_error("R-matrix fails the Hecke check");
  ProjectorTower anti(rhat, ProjectorKind::antisymmetrizer);
  const int h = compute_height(anti, max_k);
  const TensorOp ah = anti.level(h);
  if (compose(ah, ah) != ah)
    throw invalid_argument_error("top antisymmetrizer is not idempotent");
  auto [d_right, d_left] = d_matrices(anti, h);
  return HeckeRMatrix{rhat,          rhat.n(),          h,
                      rhat_inverse(rhat), std::move(d_right), std::move(d_left)};
}

}  // namespace qchn
