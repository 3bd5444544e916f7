#include "qchn/relations.hpp"

namespace qchn {

std::string algebra_kind_name(AlgebraKind kind) {
  return kind == AlgebraKind::rtt ? "rtt" : "re";
}

AlgebraKind algebra_kind_from_name(const std::string& name) {
  if (name == "rtt") return AlgebraKind::rtt;
  if (name == "re") return AlgebraKind::re;
  throw invalid_argument_error("unknown algebra kind: " + name);
}

namespace {

std::vector<NCPoly> nonzero_entries(const NCTensorOp& x) {
  std::vector<NCPoly> out;
  out.reserve(x.entries().size());
  for (const auto& [key, v] : x.entries()) out.push_back(v);
  return out;
}

}  // namespace

RelationSet rtt_relations(const TensorOp& rhat) {
  if (rhat.k() != 2) throw invalid_argument_error("rtt_relations needs a two-site R-matrix");
  const int n = rhat.n();
  const NCTensorOp chain = nc_chain(n, 2);
  const NCTensorOp diff = nc_sub(nc_compose(rhat, chain), nc_compose(chain, rhat));
  return RelationSet{AlgebraKind::rtt, n, nonzero_entries(diff)};
}

RelationSet re_relations(const TensorOp& rhat) {
  if (rhat.k() != 2) throw invalid_argument_error("re_relations needs a two-site R-matrix");
  const int n = rhat.n();
  const NCTensorOp l1 = nc_embed_single(nc_generator_matrix(n), 1, 2);
  const NCTensorOp rl = nc_compose(rhat, l1);
  const NCTensorOp lhs = nc_compose(rl, rl);                      // R L1 R L1
  const NCTensorOp lr = nc_compose(l1, rhat);
  const NCTensorOp rhs = nc_compose(lr, lr);                      // L1 R L1 R
  return RelationSet{AlgebraKind::re, n, nonzero_entries(nc_sub(lhs, rhs))};
}

}  // namespace qchn
