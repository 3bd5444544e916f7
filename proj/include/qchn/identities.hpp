// Left-minus-right residuals of the verified identity families.
//
// Each builder returns the residual as written, with coefficient sides as
// printed (sigma/tau multiply from the left for under-bar constructions and
// from the right for over-bar ones); the boolean knobs produce the
// deliberately wrong constructions used as negative controls.
#pragma once

#include "qchn/hecke_context.hpp"

namespace qchn {

enum class ChnVariant { le, le2, le3, le4 };
enum class NewtonVariant { qnewton, qnewton2, qnewton3 };
enum class ChVariant { hc1, hc2 };
enum class InvVariant { inv1, inv2, inv3, inv4 };
enum class ReVariant { wedge, sym };

std::string chn_variant_name(ChnVariant v);
std::string newton_variant_name(NewtonVariant v);
std::string ch_variant_name(ChVariant v);
std::string inv_variant_name(InvVariant v);
std::string re_variant_name(ReVariant v);

// j_q T^wedge(j) - sum_{k=0}^{j-1} (-1)^(j-k+1) sigma_k T^(j-k)   (le / le2)
// j_q T^sym(j)   - sum_{k=0}^{j-1}              tau_k  T^(j-k)    (le3 / le4)
NCTensorOp chn_residual(HeckeContext& ctx, int j, ChnVariant v,
                        bool flip_coeff_side = false);

// qnewton : q^-j j_q sigma_j - sum_{k=1}^{j-1} (-1)^(k-1) sigma_(j-k) s_k - (-1)^(j-1) s_j
// qnewton2: q^j  j_q tau_j   - sum_{k=1}^{j-1} tau_(j-k) s_k - s_j
// qnewton3: sum_{k=0}^{j} (-1)^k q^(2(j-k)) tau_(j-k) sigma_k
// wrong_sign flips the alternating pattern in qnewton (negative control).
NCPoly newton_residual(HeckeContext& ctx, int j, NewtonVariant v,
                       bool wrong_sign = false);

// hc1: sum_{k=1}^{h} sigma_(h-k) (-1)^k T^under(k) + sigma_h D_l
// hc2: sum_{k=1}^{h} (-1)^k T^over(k) sigma_(h-k)  + sigma_h D_r
// swap_d pairs the wrong D-matrix (negative control).
NCTensorOp ch_residual(HeckeContext& ctx, ChVariant v, bool swap_d = false);

// inv1: T^under(j) - sum_{k=1}^{j} (-1)^(k+1) q^(2(j-k))  k_q tau_(j-k)  T^wedge-under(k)
// inv2: mirrored with over-bar powers, tau on the right
// inv3: T^under(j) - sum_{k=1}^{j} (-1)^(j-k) q^(-2(j-k)) k_q sigma_(j-k) T^sym-under(k)
// inv4: mirrored with over-bar powers, sigma on the right
// drop_q_factor omits the q^(+-2(j-k)) factor (negative control).
NCTensorOp inverse_residual(HeckeContext& ctx, int j, InvVariant v,
                            bool drop_q_factor = false);

// Entries of A(h) T_1..T_h - A(h) q^-h sigma_h on V^(tensor h).
NCTensorOp qdet_residual(HeckeContext& ctx);

// s_k s_l - s_l s_k.
NCPoly commutativity_residual(HeckeContext& ctx, int k, int l);

// wedge: j_q L-wedge(j) - sum_{k=0}^{j-1} (-1)^(j-k+1) sigma_k(L) L^(j-k)
// sym:   j_q L-sym(j)   - sum_{k=0}^{j-1}              tau_k(L)   L^(j-k)
// The coefficient-side flip is NOT a usable negative control here (the
// sigma_k(L) are central, so the flipped identity still holds); wrong_sign
// flips the alternating pattern instead.
NCTensorOp re_chn_residual(HeckeContext& ctx, int j, ReVariant v,
                           bool flip_coeff_side = false, bool wrong_sign = false);

}  // namespace qchn
