#include "qchn/identities.hpp"

namespace qchn {

std::string chn_variant_name(ChnVariant v) {
  switch (v) {
    case ChnVariant::le: return "le";
    case ChnVariant::le2: return "le2";
    case ChnVariant::le3: return "le3";
    case ChnVariant::le4: return "le4";
  }
  return {};
}

std::string newton_variant_name(NewtonVariant v) {
  switch (v) {
    case NewtonVariant::qnewton: return "qnewton";
    case NewtonVariant::qnewton2: return "qnewton2";
    case NewtonVariant::qnewton3: return "qnewton3";
  }
  return {};
}

std::string ch_variant_name(ChVariant v) {
  return v == ChVariant::hc1 ? "hc1" : "hc2";
}

std::string inv_variant_name(InvVariant v) {
  switch (v) {
    case InvVariant::inv1: return "inv1";
    case InvVariant::inv2: return "inv2";
    case InvVariant::inv3: return "inv3";
    case InvVariant::inv4: return "inv4";
  }
  return {};
}

std::string re_variant_name(ReVariant v) {
  return v == ReVariant::wedge ? "wedge" : "sym";
}

namespace {

ScalarQ sign(int parity) { return ScalarQ(parity % 2 == 0 ? 1 : -1); }

NCTensorOp coeff_times(const NCPoly& coeff, const NCTensorOp& m, bool left) {
  return left ? nc_left_mul(coeff, m) : nc_right_mul(m, coeff);
}

}  // namespace

NCTensorOp chn_residual(HeckeContext& ctx, int j, ChnVariant v, bool flip_coeff_side) {
  if (j < 1) throw invalid_argument_error("chn_residual needs j >= 1");
  const bool elementary = v == ChnVariant::le || v == ChnVariant::le2;
  const Side side =
      (v == ChnVariant::le || v == ChnVariant::le3) ? Side::under : Side::over;
  bool coeff_left = side == Side::under;
  if (flip_coeff_side) coeff_left = !coeff_left;

  NCTensorOp acc = nc_scale(qnum(j), elementary ? ctx.wedge_power(j, side)
                                                : ctx.sym_power(j, side));
  for (int k = 0; k <= j - 1; ++k) {
    const NCPoly& coeff = elementary ? ctx.elem_sym(k) : ctx.compl_sym(k);
    NCTensorOp term = coeff_times(coeff, ctx.mat_power(j - k, side), coeff_left);
    const ScalarQ s = elementary ? sign(j - k + 1) : ScalarQ(1);
    acc = nc_sub(acc, nc_scale(s, term));
  }
  return acc;
}

NCPoly newton_residual(HeckeContext& ctx, int j, NewtonVariant v, bool wrong_sign) {
  if (j < 1) throw invalid_argument_error("newton_residual needs j >= 1");
  switch (v) {
    case NewtonVariant::qnewton: {
      NCPoly res = (ScalarQ::q_power(-j) * qnum(j)) * ctx.elem_sym(j);
      for (int k = 1; k <= j - 1; ++k) {
        ScalarQ s = wrong_sign ? sign(k) : sign(k - 1);
        res -= s * (ctx.elem_sym(j - k) * ctx.power_sum(k));
      }
      res -= sign(j - 1) * ctx.power_sum(j);
      return res;
    }
    case NewtonVariant::qnewton2: {
      NCPoly res = (ScalarQ::q_power(j) * qnum(j)) * ctx.compl_sym(j);
      for (int k = 1; k <= j - 1; ++k)
        res -= ctx.compl_sym(j - k) * ctx.power_sum(k);
      res -= ctx.power_sum(j);
      return res;
    }
    case NewtonVariant::qnewton3: {
      NCPoly res;
      for (int k = 0; k <= j; ++k) {
        ScalarQ c = sign(k) * ScalarQ::q_power(2 * (j - k));
        res += c * (ctx.compl_sym(j - k) * ctx.elem_sym(k));
      }
      return res;
    }
  }
  throw invalid_argument_error("unknown Newton variant");
}

NCTensorOp ch_residual(HeckeContext& ctx, ChVariant v, bool swap_d) {
  const int h = ctx.height();
  const bool under = v == ChVariant::hc1;
  NCTensorOp acc(ctx.n(), 1);
  for (int k = 1; k <= h; ++k) {
    NCTensorOp term = coeff_times(ctx.elem_sym(h - k),
                                  ctx.mat_power(k, under ? Side::under : Side::over),
                                  /*left=*/under);
    acc = nc_add(acc, nc_scale(sign(k), term));
  }
  const bool use_d_left = under != swap_d;
  const TensorOp& d = use_d_left ? ctx.R().d_left : ctx.R().d_right;
  acc = nc_add(acc, nc_left_mul(ctx.elem_sym(h), nc_from_scalar_op(d)));
  return acc;
}

NCTensorOp inverse_residual(HeckeContext& ctx, int j, InvVariant v, bool drop_q_factor) {
  if (j < 1) throw invalid_argument_error("inverse_residual needs j >= 1");
  const bool wedge = v == InvVariant::inv1 || v == InvVariant::inv2;
  const Side side =
      (v == InvVariant::inv1 || v == InvVariant::inv3) ? Side::under : Side::over;
  const bool coeff_left = side == Side::under;

  NCTensorOp acc = ctx.mat_power(j, side);
  for (int k = 1; k <= j; ++k) {
    const NCPoly& coeff = wedge ? ctx.compl_sym(j - k) : ctx.elem_sym(j - k);
    const NCTensorOp& power =
        wedge ? ctx.wedge_power(k, side) : ctx.sym_power(k, side);
    ScalarQ c = qnum(k) * (wedge ? sign(k + 1) : sign(j - k));
    if (!drop_q_factor)
      c *= ScalarQ::q_power(wedge ? 2 * (j - k) : -2 * (j - k));
    acc = nc_sub(acc, nc_scale(c, coeff_times(coeff, power, coeff_left)));
  }
  return acc;
}

NCTensorOp qdet_residual(HeckeContext& ctx) {
  const int h = ctx.height();
  const TensorOp ah = ctx.anti(h);
  NCTensorOp lhs = nc_compose(ah, ctx.chain(h));
  NCTensorOp rhs = nc_scale(ScalarQ::q_power(-h),
                            nc_right_mul(nc_from_scalar_op(ah), ctx.elem_sym(h)));
  return nc_sub(lhs, rhs);
}

NCPoly commutativity_residual(HeckeContext& ctx, int k, int l) {
  if (k < 1 || l < 1) throw invalid_argument_error("commutativity needs k, l >= 1");
  return ctx.power_sum(k) * ctx.power_sum(l) - ctx.power_sum(l) * ctx.power_sum(k);
}

NCTensorOp re_chn_residual(HeckeContext& ctx, int j, ReVariant v, bool flip_coeff_side,
                           bool wrong_sign) {
  if (j < 1) throw invalid_argument_error("re_chn_residual needs j >= 1");
  const bool elementary = v == ReVariant::wedge;
  const bool coeff_left = !flip_coeff_side;
  NCTensorOp acc = nc_scale(qnum(j), elementary ? ctx.re_wedge(j) : ctx.re_sym_power(j));
  for (int k = 0; k <= j - 1; ++k) {
    const NCPoly& coeff = elementary ? ctx.re_elem_sym(k) : ctx.re_compl_sym(k);
    ScalarQ s = elementary ? sign(j - k + 1) : ScalarQ(1);
    if (wrong_sign) s = -s;
    acc = nc_sub(acc, nc_scale(s, coeff_times(coeff, ctx.re_power(j - k), coeff_left)));
  }
  return acc;
}

}  // namespace qchn
