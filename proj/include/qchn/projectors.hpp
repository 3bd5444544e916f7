// q-antisymmetrizer and q-symmetrizer towers.
//
// Built inductively from a Hecke R-matrix:
//   A(1) = I,  A(k) = (1/k_q) A(k-1) (q^(k-1) - (k-1)_q R_(k-1)) A(k-1),
//   S(1) = I,  S(k) = (1/k_q) S(k-1) (q^(1-k) + (k-1)_q R_(k-1)) S(k-1),
// with the previous level embedded on factors 1..k-1 and R_(k-1) the
// R-matrix on factors (k-1, k).
#pragma once

#include <shared_mutex>
#include <vector>

#include "qchn/tensor_op.hpp"

namespace qchn {

enum class ProjectorKind { antisymmetrizer, symmetrizer };

// Levels are cached and extended lazily. Safe for concurrent readers;
// extension takes an exclusive lock. Levels are returned by value so a
// caller never holds a reference into the growing cache.
class ProjectorTower {
 public:
  ProjectorTower(TensorOp rhat, ProjectorKind kind);

  TensorOp level(int k);
  int built() const;

  const TensorOp& rhat() const { return rhat_; }
  ProjectorKind kind() const { return kind_; }

 private:
  TensorOp rhat_;
  ProjectorKind kind_;
  std::vector<TensorOp> levels_;
  mutable std::shared_mutex mutex_;

  void extend_to(int k);
};

// Residual of q^k A(k) = (k+1)_q A(k+1) + k_q A(k) R_k A(k) on V^(tensor k+1).
TensorOp resolvent_residual(ProjectorTower& anti, int k);

}  // namespace qchn
