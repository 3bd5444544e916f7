#include "qchn/hecke_context.hpp"

namespace qchn {

HeckeContext::HeckeContext(HeckeRMatrix r)
    : R_(std::move(r)),
      anti_(R_.rhat, ProjectorKind::antisymmetrizer),
      sym_(R_.rhat, ProjectorKind::symmetrizer) {}

const TensorOp& HeckeContext::rhat_chain(int k) {
  if (k < 1) throw invalid_argument_error("rhat_chain needs k >= 1");
  auto it = rhat_chains_.find(k);
  if (it != rhat_chains_.end()) return it->second;
  TensorOp chain = identity_op(n(), k);
  for (int pos = 1; pos <= k - 1; ++pos)
    chain = compose(chain, embed_pair(R_.rhat, pos, k));
  return rhat_chains_.emplace(k, std::move(chain)).first->second;
}

const NCTensorOp& HeckeContext::chain(int k) {
  if (k < 1) throw invalid_argument_error("chain needs k >= 1");
  auto it = chains_.find(k);
  if (it != chains_.end()) return it->second;
  return chains_.emplace(k, nc_chain(n(), k)).first->second;
}

const NCPoly& HeckeContext::power_sum(int k) {
  if (k < 0) throw invalid_argument_error("power_sum needs k >= 0");
  auto it = s_.find(k);
  if (it != s_.end()) return it->second;
  NCPoly value = k == 0 ? NCPoly::one()
                        : nc_sandwich_trace_full(rhat_chain(k), chain(k));
  return s_.emplace(k, std::move(value)).first->second;
}

const NCPoly& HeckeContext::elem_sym(int k) {
  if (k < 0) throw invalid_argument_error("elem_sym needs k >= 0");
  auto it = sigma_.find(k);
  if (it != sigma_.end()) return it->second;
  NCPoly value =
      k == 0 ? NCPoly::one()
             : ScalarQ::q_power(k) * nc_sandwich_trace_full(anti(k), chain(k));
  return sigma_.emplace(k, std::move(value)).first->second;
}

const NCPoly& HeckeContext::compl_sym(int k) {
  if (k < 0) throw invalid_argument_error("compl_sym needs k >= 0");
  auto it = tau_.find(k);
  if (it != tau_.end()) return it->second;
  NCPoly value =
      k == 0 ? NCPoly::one()
             : ScalarQ::q_power(-k) * nc_sandwich_trace_full(sym(k), chain(k));
  return tau_.emplace(k, std::move(value)).first->second;
}

const NCTensorOp& HeckeContext::traced_power(
    std::map<std::pair<int, int>, NCTensorOp>& cache, int k, Side side,
    const TensorOp* projector) {
  if (k < 1) throw invalid_argument_error("matrix powers need k >= 1");
  const auto key = std::make_pair(k, side == Side::under ? 0 : 1);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const TensorOp& front = projector ? *projector : rhat_chain(k);
  const FactorSet over = side == Side::under ? FactorSet::range(1, k - 1)
                                             : FactorSet::range(2, k);
  NCTensorOp value = nc_sandwich_trace(front, chain(k), over);
  return cache.emplace(key, std::move(value)).first->second;
}

const NCTensorOp& HeckeContext::mat_power(int k, Side side) {
  return traced_power(mat_powers_, k, side, nullptr);
}

const NCTensorOp& HeckeContext::wedge_power(int k, Side side) {
  const TensorOp p = anti(k);
  return traced_power(wedge_powers_, k, side, &p);
}

const NCTensorOp& HeckeContext::sym_power(int k, Side side) {
  const TensorOp p = sym(k);
  return traced_power(sym_powers_, k, side, &p);
}

const NCTensorOp& HeckeContext::re_lbar_chain(int k) {
  if (k < 1) throw invalid_argument_error("re_lbar_chain needs k >= 1");
  auto it = lbar_chains_.find(k);
  if (it != lbar_chains_.end()) return it->second;
  const NCTensorOp gen = nc_generator_matrix(n());
  NCTensorOp lbar = nc_embed_single(gen, 1, k);  // Lbar_1
  NCTensorOp product = lbar;
  for (int j = 2; j <= k; ++j) {
    const TensorOp rj = embed_pair(R_.rhat, j - 1, k);
    const TensorOp rj_inv = embed_pair(R_.rhat_inv, j - 1, k);
    lbar = nc_compose(rj, nc_compose(lbar, rj_inv));
    product = nc_compose(product, lbar);
  }
  return lbar_chains_.emplace(k, std::move(product)).first->second;
}

const NCTensorOp& HeckeContext::re_wedge(int k) {
  if (k < 1) throw invalid_argument_error("re_wedge needs k >= 1");
  auto it = re_wedges_.find(k);
  if (it != re_wedges_.end()) return it->second;
  NCTensorOp value =
      k == 1 ? nc_generator_matrix(n())
             : nc_weighted_partial_trace(nc_compose(anti(k), re_lbar_chain(k)),
                                         R_.d_right, FactorSet::range(2, k));
  return re_wedges_.emplace(k, std::move(value)).first->second;
}

const NCTensorOp& HeckeContext::re_sym_power(int k) {
  if (k < 1) throw invalid_argument_error("re_sym_power needs k >= 1");
  auto it = re_syms_.find(k);
  if (it != re_syms_.end()) return it->second;
  NCTensorOp value =
      k == 1 ? nc_generator_matrix(n())
             : nc_weighted_partial_trace(nc_compose(sym(k), re_lbar_chain(k)),
                                         R_.d_right, FactorSet::range(2, k));
  return re_syms_.emplace(k, std::move(value)).first->second;
}

const NCTensorOp& HeckeContext::re_power(int k) {
  if (k < 1) throw invalid_argument_error("re_power needs k >= 1");
  auto it = re_powers_.find(k);
  if (it != re_powers_.end()) return it->second;
  NCTensorOp value = k == 1 ? nc_generator_matrix(n())
                            : nc_compose(re_power(k - 1), nc_generator_matrix(n()));
  return re_powers_.emplace(k, std::move(value)).first->second;
}

const NCPoly& HeckeContext::re_elem_sym(int k) {
  if (k < 0) throw invalid_argument_error("re_elem_sym needs k >= 0");
  auto it = re_sigma_.find(k);
  if (it != re_sigma_.end()) return it->second;
  NCPoly value = k == 0 ? NCPoly::one()
                        : ScalarQ::q_power(k) *
                              nc_weighted_full_trace(re_wedge(k), R_.d_right);
  return re_sigma_.emplace(k, std::move(value)).first->second;
}

const NCPoly& HeckeContext::re_compl_sym(int k) {
  if (k < 0) throw invalid_argument_error("re_compl_sym needs k >= 0");
  auto it = re_tau_.find(k);
  if (it != re_tau_.end()) return it->second;
  NCPoly value = k == 0 ? NCPoly::one()
                        : ScalarQ::q_power(-k) *
                              nc_weighted_full_trace(re_sym_power(k), R_.d_right);
  return re_tau_.emplace(k, std::move(value)).first->second;
}

const RelationSet& HeckeContext::relations(AlgebraKind kind) {
  if (kind == AlgebraKind::rtt) {
    if (!rtt_relations_) rtt_relations_ = rtt_relations(R_.rhat);
    return *rtt_relations_;
  }
  if (!re_relations_) re_relations_ = re_relations(R_.rhat);
  return *re_relations_;
}

}  // namespace qchn
