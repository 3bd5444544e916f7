// Per-R-matrix workspace: projector towers, generator chains, symmetric
// functions and generalized matrix powers, all cached.
//
// RTT elements (traces are plain traces over the leading factors):
//   s_k     = Tr_(1..k)( R_1 ... R_(k-1) T_1 ... T_k )
//   sigma_k = q^k  Tr_(1..k)( A(k) T_1 ... T_k )
//   tau_k   = q^-k Tr_(1..k)( S(k) T_1 ... T_k )
// and the generalized powers keep the last (under) or first (over) factor:
//   T^under(k) = Tr_(1..k-1)(R_1..R_(k-1) T_1..T_k),  T^over(k) = Tr_(2..k)(...),
// with wedge/symmetric powers replacing the R-chain by A(k)/S(k).
//
// RE elements use the q-trace Tr_q X = Tr(D_r X) on every traced factor and
// the conjugated copies Lbar_1 = L_1, Lbar_k = R_(k-1) Lbar_(k-1) R_(k-1)^-1:
//   L-wedge(k) = Tr_q(2..k)( A(k) Lbar_1 ... Lbar_k ),  analogously with S(k);
//   sigma_k(L) = q^k Tr_q L-wedge(k),  tau_k(L) = q^-k Tr_q L-sym(k);
//   L^k is the plain matrix power of the generator matrix.
#pragma once

#include <map>
#include <optional>

#include "qchn/nc_tensor.hpp"
#include "qchn/projectors.hpp"
#include "qchn/relations.hpp"
#include "qchn/rmatrix.hpp"

namespace qchn {

enum class Side { under, over };

class HeckeContext {
 public:
  explicit HeckeContext(HeckeRMatrix r);

  const HeckeRMatrix& R() const { return R_; }
  int n() const { return R_.n; }
  int height() const { return R_.height; }

  TensorOp anti(int k) { return anti_.level(k); }
  TensorOp sym(int k) { return sym_.level(k); }
  ProjectorTower& anti_tower() { return anti_; }

  const TensorOp& rhat_chain(int k);   // R_1 R_2 ... R_(k-1) on V^(tensor k)
  const NCTensorOp& chain(int k);      // T_1 T_2 ... T_k

  const NCPoly& power_sum(int k);      // s_k, s_0 = 1
  const NCPoly& elem_sym(int k);       // sigma_k, sigma_0 = 1
  const NCPoly& compl_sym(int k);      // tau_k, tau_0 = 1

  const NCTensorOp& mat_power(int k, Side side);
  const NCTensorOp& wedge_power(int k, Side side);
  const NCTensorOp& sym_power(int k, Side side);

  const NCTensorOp& re_lbar_chain(int k);  // Lbar_1 ... Lbar_k on V^(tensor k)
  const NCTensorOp& re_wedge(int k);       // one-site matrix of degree-k entries
  const NCTensorOp& re_sym_power(int k);
  const NCTensorOp& re_power(int k);       // plain matrix power, k >= 1
  const NCPoly& re_elem_sym(int k);
  const NCPoly& re_compl_sym(int k);

  const RelationSet& relations(AlgebraKind kind);

 private:
  HeckeRMatrix R_;
  ProjectorTower anti_;
  ProjectorTower sym_;
  std::map<int, TensorOp> rhat_chains_;
  std::map<int, NCTensorOp> chains_;
  std::map<int, NCPoly> s_, sigma_, tau_;
  std::map<std::pair<int, int>, NCTensorOp> mat_powers_, wedge_powers_, sym_powers_;
  std::map<int, NCTensorOp> lbar_chains_, re_wedges_, re_syms_, re_powers_;
  std::map<int, NCPoly> re_sigma_, re_tau_;
  std::optional<RelationSet> rtt_relations_, re_relations_;

  const NCTensorOp& traced_power(std::map<std::pair<int, int>, NCTensorOp>& cache,
                                 int k, Side side, const TensorOp* projector);
};

}  // namespace qchn
