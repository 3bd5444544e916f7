#include "qchn/nc_tensor.hpp"

namespace qchn {

namespace {

std::uint32_t checked_dim(int n, int k) {
  if (n < 1 || k < 1) throw invalid_argument_error("bad tensor shape");
  std::uint64_t d = 1;
  for (int i = 0; i < k; ++i) {
    d *= static_cast<std::uint64_t>(n);
    if (d > (1u << 30)) throw invalid_argument_error("tensor space too large");
  }
  return static_cast<std::uint32_t>(d);
}

void require_same_shape(int an, int ak, int bn, int bk) {
  if (an != bn || ak != bk) throw invalid_argument_error("tensor operator shape mismatch");
}

}  // namespace

NCTensorOp::NCTensorOp(int n, int k) : n_(n), k_(k), dim_(checked_dim(n, k)) {}

NCPoly NCTensorOp::entry(std::uint32_t row, std::uint32_t col) const {
  auto it = entries_.find(TensorOp::key(row, col));
  return it == entries_.end() ? NCPoly() : it->second;
}

void NCTensorOp::set_entry(std::uint32_t row, std::uint32_t col, const NCPoly& v) {
  if (row >= dim_ || col >= dim_) throw invalid_argument_error("index out of range");
  if (v.is_zero())
    entries_.erase(TensorOp::key(row, col));
  else
    entries_[TensorOp::key(row, col)] = v;
}

void NCTensorOp::add_entry(std::uint32_t row, std::uint32_t col, const NCPoly& v) {
  if (row >= dim_ || col >= dim_) throw invalid_argument_error("index out of range");
  if (v.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(TensorOp::key(row, col), v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

bool NCTensorOp::operator==(const NCTensorOp& o) const {
  return n_ == o.n_ && k_ == o.k_ && entries_ == o.entries_;
}

std::vector<int> NCTensorOp::digits(std::uint32_t index) const {
  std::vector<int> d(static_cast<std::size_t>(k_));
  for (int t = k_ - 1; t >= 0; --t) {
    d[static_cast<std::size_t>(t)] = static_cast<int>(index % static_cast<std::uint32_t>(n_));
    index /= static_cast<std::uint32_t>(n_);
  }
  return d;
}

std::uint32_t NCTensorOp::index_of(const std::vector<int>& digits) const {
  std::uint32_t idx = 0;
  for (int d : digits) idx = idx * static_cast<std::uint32_t>(n_) + static_cast<std::uint32_t>(d);
  return idx;
}

bool NCTensorOp::is_homogeneous_of_degree(int d) const {
  for (const auto& [key, v] : entries_) {
    if (!v.is_homogeneous()) return false;
    if (v.degree() != d) return false;
  }
  return true;
}

NCTensorOp nc_generator_matrix(int n) {
  NCTensorOp t(n, 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t.set_entry(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                  NCPoly::generator(static_cast<GenLetter>(i * n + j)));
  return t;
}

NCTensorOp nc_chain(int n, int k) {
  NCTensorOp t(n, k);
  const std::uint32_t dim = t.dim();
  for (std::uint32_t r = 0; r < dim; ++r) {
    const auto rd = t.digits(r);
    for (std::uint32_t c = 0; c < dim; ++c) {
      const auto cd = t.digits(c);
      NCMonomial m;
      m.word.reserve(static_cast<std::size_t>(k));
      for (int p = 0; p < k; ++p)
        m.word.push_back(static_cast<GenLetter>(rd[static_cast<std::size_t>(p)] * n +
                                                cd[static_cast<std::size_t>(p)]));
      t.set_entry(r, c, NCPoly::monomial(std::move(m), ScalarQ::one()));
    }
  }
  return t;
}

NCTensorOp nc_identity(int n, int k) {
  NCTensorOp t(n, k);
  for (std::uint32_t i = 0; i < t.dim(); ++i) t.set_entry(i, i, NCPoly::one());
  return t;
}

NCTensorOp nc_add(const NCTensorOp& a, const NCTensorOp& b) {
  require_same_shape(a.n(), a.k(), b.n(), b.k());
  NCTensorOp r = a;
  for (const auto& [key, v] : b.entries())
    r.add_entry(TensorOp::key_row(key), TensorOp::key_col(key), v);
  return r;
}

NCTensorOp nc_sub(const NCTensorOp& a, const NCTensorOp& b) {
  require_same_shape(a.n(), a.k(), b.n(), b.k());
  NCTensorOp r = a;
  for (const auto& [key, v] : b.entries())
    r.add_entry(TensorOp::key_row(key), TensorOp::key_col(key), -v);
  return r;
}

NCTensorOp nc_scale(const ScalarQ& c, const NCTensorOp& x) {
  NCTensorOp r(x.n(), x.k());
  if (c.is_zero()) return r;
  for (const auto& [key, v] : x.entries())
    r.set_entry(TensorOp::key_row(key), TensorOp::key_col(key), c * v);
  return r;
}

NCTensorOp nc_left_mul(const NCPoly& p, const NCTensorOp& x) {
  NCTensorOp r(x.n(), x.k());
  for (const auto& [key, v] : x.entries())
    r.set_entry(TensorOp::key_row(key), TensorOp::key_col(key), p * v);
  return r;
}

NCTensorOp nc_right_mul(const NCTensorOp& x, const NCPoly& p) {
  NCTensorOp r(x.n(), x.k());
  for (const auto& [key, v] : x.entries())
    r.set_entry(TensorOp::key_row(key), TensorOp::key_col(key), v * p);
  return r;
}

NCTensorOp nc_compose(const NCTensorOp& a, const NCTensorOp& b) {
  require_same_shape(a.n(), a.k(), b.n(), b.k());
  NCTensorOp r(a.n(), a.k());
  const auto& be = b.entries();
  for (const auto& [ka, va] : a.entries()) {
    const std::uint32_t row = TensorOp::key_row(ka);
    const std::uint32_t mid = TensorOp::key_col(ka);
    auto it = be.lower_bound(TensorOp::key(mid, 0));
    for (; it != be.end() && TensorOp::key_row(it->first) == mid; ++it)
      r.add_entry(row, TensorOp::key_col(it->first), va * it->second);
  }
  return r;
}

NCTensorOp nc_compose(const TensorOp& a, const NCTensorOp& b) {
  require_same_shape(a.n(), a.k(), b.n(), b.k());
  NCTensorOp r(b.n(), b.k());
  const auto& be = b.entries();
  for (const auto& [ka, va] : a.entries()) {
    const std::uint32_t row = TensorOp::key_row(ka);
    const std::uint32_t mid = TensorOp::key_col(ka);
    auto it = be.lower_bound(TensorOp::key(mid, 0));
    for (; it != be.end() && TensorOp::key_row(it->first) == mid; ++it)
      r.add_entry(row, TensorOp::key_col(it->first), va * it->second);
  }
  return r;
}

NCTensorOp nc_compose(const NCTensorOp& a, const TensorOp& b) {
  require_same_shape(a.n(), a.k(), b.n(), b.k());
  NCTensorOp r(a.n(), a.k());
  const auto& be = b.entries();
  for (const auto& [ka, va] : a.entries()) {
    const std::uint32_t row = TensorOp::key_row(ka);
    const std::uint32_t mid = TensorOp::key_col(ka);
    auto it = be.lower_bound(TensorOp::key(mid, 0));
    for (; it != be.end() && TensorOp::key_row(it->first) == mid; ++it)
      r.add_entry(row, TensorOp::key_col(it->first), it->second * va);
  }
  return r;
}

NCTensorOp nc_embed_single(const NCTensorOp& op1, int pos, int k_total) {
  if (op1.k() != 1) throw invalid_argument_error("nc_embed_single needs a one-site operator");
  if (pos < 1 || pos > k_total) throw invalid_argument_error("position out of range");
  const int n = op1.n();
  NCTensorOp r(n, k_total);
  std::uint32_t left_count = 1;
  for (int i = 0; i < pos - 1; ++i) left_count *= static_cast<std::uint32_t>(n);
  std::uint32_t right_count = 1;
  for (int i = 0; i < k_total - pos; ++i) right_count *= static_cast<std::uint32_t>(n);
  for (const auto& [key, v] : op1.entries()) {
    const std::uint32_t rc = TensorOp::key_row(key);
    const std::uint32_t cc = TensorOp::key_col(key);
    for (std::uint32_t left = 0; left < left_count; ++left)
      for (std::uint32_t right = 0; right < right_count; ++right)
        r.set_entry((left * static_cast<std::uint32_t>(n) + rc) * right_count + right,
                    (left * static_cast<std::uint32_t>(n) + cc) * right_count + right, v);
  }
  return r;
}

NCTensorOp nc_from_scalar_op(const TensorOp& x) {
  NCTensorOp r(x.n(), x.k());
  for (const auto& [key, v] : x.entries())
    r.set_entry(TensorOp::key_row(key), TensorOp::key_col(key), NCPoly::constant(v));
  return r;
}

NCTensorOp nc_partial_trace(const NCTensorOp& x, const FactorSet& over) {
  if (over.empty()) return x;
  const int k = x.k();
  if (over.positions().back() > k) throw invalid_argument_error("trace position out of range");
  if (static_cast<int>(over.size()) >= k)
    throw invalid_argument_error("nc_partial_trace must leave a factor; use nc_full_trace");
  const int k_rem = k - static_cast<int>(over.size());
  NCTensorOp r(x.n(), k_rem);
  std::vector<bool> traced(static_cast<std::size_t>(k + 1), false);
  for (int p : over.positions()) traced[static_cast<std::size_t>(p)] = true;
  for (const auto& [key, v] : x.entries()) {
    const auto rd = x.digits(TensorOp::key_row(key));
    const auto cd = x.digits(TensorOp::key_col(key));
    bool diagonal = true;
    for (int p = 1; p <= k && diagonal; ++p)
      if (traced[static_cast<std::size_t>(p)] && rd[static_cast<std::size_t>(p - 1)] != cd[static_cast<std::size_t>(p - 1)])
        diagonal = false;
    if (!diagonal) continue;
    std::vector<int> rr, cc;
    for (int p = 1; p <= k; ++p) {
      if (traced[static_cast<std::size_t>(p)]) continue;
      rr.push_back(rd[static_cast<std::size_t>(p - 1)]);
      cc.push_back(cd[static_cast<std::size_t>(p - 1)]);
    }
    r.add_entry(r.index_of(rr), r.index_of(cc), v);
  }
  return r;
}

NCPoly nc_full_trace(const NCTensorOp& x) {
  NCPoly t;
  for (std::uint32_t i = 0; i < x.dim(); ++i) t += x.entry(i, i);
  return t;
}

namespace {

NCTensorOp weight_product(const NCTensorOp& x, const TensorOp& weight, const FactorSet& over) {
  if (weight.k() != 1 || weight.n() != x.n())
    throw invalid_argument_error("trace weight must be a one-site operator on the same V");
  NCTensorOp acc = x;
  for (int p : over.positions())
    acc = nc_compose(embed_single(weight, p, x.k()), acc);
  return acc;
}

}  // namespace

NCTensorOp nc_weighted_partial_trace(const NCTensorOp& x, const TensorOp& weight,
                                     const FactorSet& over) {
  if (over.empty()) return x;
  return nc_partial_trace(weight_product(x, weight, over), over);
}

NCPoly nc_weighted_full_trace(const NCTensorOp& x, const TensorOp& weight) {
  return nc_full_trace(weight_product(x, weight, FactorSet::range(1, x.k())));
}

NCTensorOp nc_sandwich_trace(const TensorOp& scalar_op, const NCTensorOp& chain,
                             const FactorSet& over) {
  return nc_partial_trace(nc_compose(scalar_op, chain), over);
}

NCPoly nc_sandwich_trace_full(const TensorOp& scalar_op, const NCTensorOp& chain) {
  return nc_full_trace(nc_compose(scalar_op, chain));
}

}  // namespace qchn
