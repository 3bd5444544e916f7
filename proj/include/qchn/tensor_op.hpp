// Sparse exact linear operators on V^(tensor k) over ScalarQ.
//
// Index convention (fixed globally, also used in all serializations):
// factor 1 is the most significant digit of the base-n decomposition of a
// row/column index, i.e. index = i_1*n^(k-1) + i_2*n^(k-2) + ... + i_k.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qchn/scalar.hpp"

namespace qchn {

// Sorted list of distinct tensor-factor positions, 1-based.
class FactorSet {
 public:
  FactorSet() = default;
  explicit FactorSet(std::vector<int> positions);

  static FactorSet range(int first, int last);  // {first, ..., last}; empty if last < first

  bool contains(int pos) const;
  bool empty() const { return positions_.empty(); }
  std::size_t size() const { return positions_.size(); }
  const std::vector<int>& positions() const { return positions_; }

 private:
  std::vector<int> positions_;
};

class TensorOp {
 public:
  TensorOp(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  std::uint32_t dim() const { return dim_; }

  bool is_zero() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }

  ScalarQ entry(std::uint32_t row, std::uint32_t col) const;
  void set_entry(std::uint32_t row, std::uint32_t col, const ScalarQ& v);
  void add_entry(std::uint32_t row, std::uint32_t col, const ScalarQ& v);

  // Row-major (row, col) -> value, no zeros stored.
  const std::map<std::uint64_t, ScalarQ>& entries() const { return entries_; }

  bool operator==(const TensorOp& o) const;
  bool operator!=(const TensorOp& o) const { return !(*this == o); }

  // Mixed-radix helpers for the global index convention.
  std::vector<int> digits(std::uint32_t index) const;
  std::uint32_t index_of(const std::vector<int>& digits) const;

  static std::uint64_t key(std::uint32_t row, std::uint32_t col) {
    return (static_cast<std::uint64_t>(row) << 32) | col;
  }
  static std::uint32_t key_row(std::uint64_t k) { return static_cast<std::uint32_t>(k >> 32); }
  static std::uint32_t key_col(std::uint64_t k) { return static_cast<std::uint32_t>(k & 0xffffffffu); }

 private:
  int n_;
  int k_;
  std::uint32_t dim_;
  std::map<std::uint64_t, ScalarQ> entries_;
};

TensorOp identity_op(int n, int k);
TensorOp add(const TensorOp& a, const TensorOp& b);
TensorOp sub(const TensorOp& a, const TensorOp& b);
TensorOp scale(const ScalarQ& c, const TensorOp& x);
TensorOp compose(const TensorOp& a, const TensorOp& b);  // matrix product a*b

// op2 acting on factors (pos, pos+1) of V^(tensor k_total), identity elsewhere.
TensorOp embed_pair(const TensorOp& op2, int pos, int k_total);

// op1 (k = 1) acting on factor pos.
TensorOp embed_single(const TensorOp& op1, int pos, int k_total);

// op acting on the leading factors 1..op.k of V^(tensor k_total).
TensorOp embed_leading(const TensorOp& op, int k_total);

// Trace over the factors in `over`; requires |over| < k. Remaining factors
// keep their relative order.
TensorOp partial_trace(const TensorOp& x, const FactorSet& over);

// Trace over all factors.
ScalarQ full_trace(const TensorOp& x);

// Tr over `over` of (prod_{i in over} weight_i) * x, with weight a k = 1
// operator; realizes factor-wise q-traces.
TensorOp weighted_partial_trace(const TensorOp& x, const TensorOp& weight,
                                const FactorSet& over);
ScalarQ weighted_full_trace(const TensorOp& x, const TensorOp& weight);

// Column `col` of x as a sparse vector (action on a basis vector).
std::map<std::uint32_t, ScalarQ> apply_to_basis(const TensorOp& x, std::uint32_t col);

}  // namespace qchn
