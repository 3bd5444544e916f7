#include "qchn/tensor_op.hpp"

#include <algorithm>

namespace qchn {

FactorSet::FactorSet(std::vector<int> positions) : positions_(std::move(positions)) {
  std::sort(positions_.begin(), positions_.end());
  auto last = std::unique(positions_.begin(), positions_.end());
  positions_.erase(last, positions_.end());
  if (!positions_.empty() && positions_.front() < 1)
    throw invalid_argument_error("factor positions are 1-based");
}

FactorSet FactorSet::range(int first, int last) {
  std::vector<int> ps;
  for (int i = first; i <= last; ++i) ps.push_back(i);
  return FactorSet(std::move(ps));
}

bool FactorSet::contains(int pos) const {
  return std::binary_search(positions_.begin(), positions_.end(), pos);
}

namespace {

std::uint32_t checked_dim(int n, int k) {
  if (n < 1) throw invalid_argument_error("tensor dimension n must be >= 1");
  if (k < 1) throw invalid_argument_error("tensor factor count k must be >= 1");
  std::uint64_t d = 1;
  for (int i = 0; i < k; ++i) {
    d *= static_cast<std::uint64_t>(n);
    if (d > (1u << 30)) throw invalid_argument_error("tensor space too large");
  }
  return static_cast<std::uint32_t>(d);
}

void require_same_shape(const TensorOp& a, const TensorOp& b) {
  if (a.n() != b.n() || a.k() != b.k())
    throw invalid_argument_error("tensor operator shape mismatch");
}

}  // namespace

TensorOp::TensorOp(int n, int k) : n_(n), k_(k), dim_(checked_dim(n, k)) {}

ScalarQ TensorOp::entry(std::uint32_t row, std::uint32_t col) const {
  auto it = entries_.find(key(row, col));
  return it == entries_.end() ? ScalarQ() : it->second;
}

void TensorOp::set_entry(std::uint32_t row, std::uint32_t col, const ScalarQ& v) {
  if (row >= dim_ || col >= dim_)
    throw invalid_argument_error("tensor entry index out of range");
  if (v.is_zero())
    entries_.erase(key(row, col));
  else
    entries_[key(row, col)] = v;
}

void TensorOp::add_entry(std::uint32_t row, std::uint32_t col, const ScalarQ& v) {
  if (row >= dim_ || col >= dim_)
    throw invalid_argument_error("tensor entry index out of range");
  if (v.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(key(row, col), v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

bool TensorOp::operator==(const TensorOp& o) const {
  return n_ == o.n_ && k_ == o.k_ && entries_ == o.entries_;
}

std::vector<int> TensorOp::digits(std::uint32_t index) const {
  std::vector<int> d(static_cast<std::size_t>(k_));
  for (int t = k_ - 1; t >= 0; --t) {
    d[static_cast<std::size_t>(t)] = static_cast<int>(index % static_cast<std::uint32_t>(n_));
    index /= static_cast<std::uint32_t>(n_);
  }
  return d;
}

std::uint32_t TensorOp::index_of(const std::vector<int>& digits) const {
  std::uint32_t idx = 0;
  for (int d : digits) idx = idx * static_cast<std::uint32_t>(n_) + static_cast<std::uint32_t>(d);
  return idx;
}

TensorOp identity_op(int n, int k) {
  TensorOp id(n, k);
  for (std::uint32_t i = 0; i < id.dim(); ++i) id.set_entry(i, i, ScalarQ::one());
  return id;
}

TensorOp add(const TensorOp& a, const TensorOp& b) {
  require_same_shape(a, b);
  TensorOp r = a;
  for (const auto& [key, v] : b.entries())
    r.add_entry(TensorOp::key_row(key), TensorOp::key_col(key), v);
  return r;
}

TensorOp sub(const TensorOp& a, const TensorOp& b) {
  require_same_shape(a, b);
  TensorOp r = a;
  for (const auto& [key, v] : b.entries())
    r.add_entry(TensorOp::key_row(key), TensorOp::key_col(key), -v);
  return r;
}

TensorOp scale(const ScalarQ& c, const TensorOp& x) {
  TensorOp r(x.n(), x.k());
  if (c.is_zero()) return r;
  for (const auto& [key, v] : x.entries())
    r.set_entry(TensorOp::key_row(key), TensorOp::key_col(key), c * v);
  return r;
}

TensorOp compose(const TensorOp& a, const TensorOp& b) {
  require_same_shape(a, b);
  TensorOp r(a.n(), a.k());
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

TensorOp embed_pair(const TensorOp& op2, int pos, int k_total) {
  if (op2.k() != 2) throw invalid_argument_error("embed_pair needs a two-site operator");
  if (pos < 1 || pos > k_total - 1)
    throw invalid_argument_error("embed_pair position out of range");
  const int n = op2.n();
  TensorOp r(n, k_total);
  std::uint32_t left_count = 1;
  for (int i = 0; i < pos - 1; ++i) left_count *= static_cast<std::uint32_t>(n);
  std::uint32_t right_count = 1;
  for (int i = 0; i < k_total - pos - 1; ++i) right_count *= static_cast<std::uint32_t>(n);

  // index = ((left * n^2 + pair) * right_count) + right, pair at (pos, pos+1);
  // left has pos-1 digits, right has k_total-pos-1 digits.
  for (const auto& [key, v] : op2.entries()) {
    const std::uint32_t rc = TensorOp::key_row(key);
    const std::uint32_t cc = TensorOp::key_col(key);
    for (std::uint32_t left = 0; left < left_count; ++left) {
      for (std::uint32_t right = 0; right < right_count; ++right) {
        std::uint32_t row = (left * static_cast<std::uint32_t>(n * n) + rc) * right_count + right;
        std::uint32_t col = (left * static_cast<std::uint32_t>(n * n) + cc) * right_count + right;
        r.set_entry(row, col, v);
      }
    }
  }
  return r;
}

TensorOp embed_single(const TensorOp& op1, int pos, int k_total) {
  if (op1.k() != 1) throw invalid_argument_error("embed_single needs a one-site operator");
  if (pos < 1 || pos > k_total)
    throw invalid_argument_error("embed_single position out of range");
  const int n = op1.n();
  TensorOp r(n, k_total);
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

TensorOp embed_leading(const TensorOp& op, int k_total) {
  if (k_total < op.k()) throw invalid_argument_error("embed_leading shrinks the space");
  if (k_total == op.k()) return op;
  const int n = op.n();
  std::uint32_t tail_count = 1;
  for (int i = 0; i < k_total - op.k(); ++i) tail_count *= static_cast<std::uint32_t>(n);
  TensorOp r(n, k_total);
  for (const auto& [key, v] : op.entries()) {
    const std::uint32_t rc = TensorOp::key_row(key);
    const std::uint32_t cc = TensorOp::key_col(key);
    for (std::uint32_t tail = 0; tail < tail_count; ++tail)
      r.set_entry(rc * tail_count + tail, cc * tail_count + tail, v);
  }
  return r;
}

TensorOp partial_trace(const TensorOp& x, const FactorSet& over) {
  if (over.empty()) return x;
  const int k = x.k();
  if (over.positions().back() > k)
    throw invalid_argument_error("trace position out of range");
  if (static_cast<int>(over.size()) >= k)
    throw invalid_argument_error("partial_trace must leave at least one factor; use full_trace");
  const int k_rem = k - static_cast<int>(over.size());
  TensorOp r(x.n(), k_rem);
  std::vector<bool> traced(static_cast<std::size_t>(k + 1), false);
  for (int p : over.positions()) traced[static_cast<std::size_t>(p)] = true;
  std::vector<int> rd, cd;
  rd.reserve(static_cast<std::size_t>(k_rem));
  cd.reserve(static_cast<std::size_t>(k_rem));
  for (const auto& [key, v] : x.entries()) {
    const auto row_digits = x.digits(TensorOp::key_row(key));
    const auto col_digits = x.digits(TensorOp::key_col(key));
    bool diagonal = true;
    for (int p = 1; p <= k && diagonal; ++p)
      if (traced[static_cast<std::size_t>(p)] &&
          row_digits[static_cast<std::size_t>(p - 1)] != col_digits[static_cast<std::size_t>(p - 1)])
        diagonal = false;
    if (!diagonal) continue;
    rd.clear();
    cd.clear();
    for (int p = 1; p <= k; ++p) {
      if (traced[static_cast<std::size_t>(p)]) continue;
      rd.push_back(row_digits[static_cast<std::size_t>(p - 1)]);
      cd.push_back(col_digits[static_cast<std::size_t>(p - 1)]);
    }
    r.add_entry(r.index_of(rd), r.index_of(cd), v);
  }
  return r;
}

ScalarQ full_trace(const TensorOp& x) {
  ScalarQ t;
  for (std::uint32_t i = 0; i < x.dim(); ++i) t += x.entry(i, i);
  return t;
}

namespace {

TensorOp weight_product(const TensorOp& x, const TensorOp& weight, const FactorSet& over) {
  if (weight.k() != 1 || weight.n() != x.n())
    throw invalid_argument_error("trace weight must be a one-site operator on the same V");
  TensorOp acc = x;
  for (int p : over.positions())
    acc = compose(embed_single(weight, p, x.k()), acc);
  return acc;
}

}  // namespace

TensorOp weighted_partial_trace(const TensorOp& x, const TensorOp& weight,
                                const FactorSet& over) {
  if (over.empty()) return x;
  return partial_trace(weight_product(x, weight, over), over);
}

ScalarQ weighted_full_trace(const TensorOp& x, const TensorOp& weight) {
  return full_trace(weight_product(x, weight, FactorSet::range(1, x.k())));
}

std::map<std::uint32_t, ScalarQ> apply_to_basis(const TensorOp& x, std::uint32_t col) {
  std::map<std::uint32_t, ScalarQ> v;
  for (const auto& [key, val] : x.entries())
    if (TensorOp::key_col(key) == col) v[TensorOp::key_row(key)] = val;
  return v;
}

}  // namespace qchn
