#include "qchn/projectors.hpp"

#include <mutex>

namespace qchn {

ProjectorTower::ProjectorTower(TensorOp rhat, ProjectorKind kind)
    : rhat_(std::move(rhat)), kind_(kind) {
  if (rhat_.k() != 2) throw invalid_argument_error("projector tower needs a two-site R-matrix");
  levels_.push_back(identity_op(rhat_.n(), 1));
}

int ProjectorTower::built() const {
  std::shared_lock lock(mutex_);
  return static_cast<int>(levels_.size());
}

TensorOp ProjectorTower::level(int k) {
  if (k < 1) throw invalid_argument_error("projector level must be >= 1");
  {
    std::shared_lock lock(mutex_);
    if (k <= static_cast<int>(levels_.size())) return levels_[static_cast<std::size_t>(k - 1)];
  }
  std::unique_lock lock(mutex_);
  extend_to(k);
  return levels_[static_cast<std::size_t>(k - 1)];
}

void ProjectorTower::extend_to(int k) {
  while (static_cast<int>(levels_.size()) < k) {
    const int next = static_cast<int>(levels_.size()) + 1;
    const TensorOp prev = embed_leading(levels_.back(), next);
    const TensorOp rk = embed_pair(rhat_, next - 1, next);
    const ScalarQ prev_q = qnum(next - 1);
    TensorOp middle =
        kind_ == ProjectorKind::antisymmetrizer
            ? sub(scale(ScalarQ::q_power(next - 1), identity_op(rhat_.n(), next)),
                  scale(prev_q, rk))
            : add(scale(ScalarQ::q_power(1 - next), identity_op(rhat_.n(), next)),
                  scale(prev_q, rk));
    TensorOp level = compose(prev, compose(middle, prev));
    levels_.push_back(scale(ScalarQ::one() / qnum(next), level));
  }
}

TensorOp resolvent_residual(ProjectorTower& anti, int k) {
  if (anti.kind() != ProjectorKind::antisymmetrizer)
    throw invalid_argument_error("resolvent identity is about the antisymmetrizer tower");
  const TensorOp ak = embed_leading(anti.level(k), k + 1);
  const TensorOp ak1 = anti.level(k + 1);
  const TensorOp rk = embed_pair(anti.rhat(), k, k + 1);
  TensorOp lhs = scale(ScalarQ::q_power(k), ak);
  TensorOp rhs = add(scale(qnum(k + 1), ak1),
                     scale(qnum(k), compose(ak, compose(rk, ak))));
  return sub(lhs, rhs);
}

}  // namespace qchn
