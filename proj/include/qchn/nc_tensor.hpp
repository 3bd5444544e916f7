// Operators on V^(tensor k) with noncommutative-polynomial entries.
//
// Same index convention as TensorOp. Product order follows operator
// composition: (A B)[r,c] = sum_m A[r,m] * B[m,c] with NCPoly products
// taken in that order.
#pragma once

#include "qchn/ncpoly.hpp"
#include "qchn/tensor_op.hpp"

namespace qchn {

class NCTensorOp {
 public:
  NCTensorOp(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  std::uint32_t dim() const { return dim_; }
  bool is_zero() const { return entries_.empty(); }

  NCPoly entry(std::uint32_t row, std::uint32_t col) const;
  void set_entry(std::uint32_t row, std::uint32_t col, const NCPoly& v);
  void add_entry(std::uint32_t row, std::uint32_t col, const NCPoly& v);
  const std::map<std::uint64_t, NCPoly>& entries() const { return entries_; }

  bool operator==(const NCTensorOp& o) const;
  bool operator!=(const NCTensorOp& o) const { return !(*this == o); }

  std::vector<int> digits(std::uint32_t index) const;
  std::uint32_t index_of(const std::vector<int>& digits) const;

  // Entries all homogeneous of the same degree (zero entries ignored).
  bool is_homogeneous_of_degree(int d) const;

 private:
  int n_;
  int k_;
  std::uint32_t dim_;
  std::map<std::uint64_t, NCPoly> entries_;
};

// The generator matrix: entry (i, j) is the single-letter word for T^i_j.
NCTensorOp nc_generator_matrix(int n);

// T_1 T_2 ... T_k on V^(tensor k): entry ((i_1..i_k),(j_1..j_k)) is the word
// T^{i_1}_{j_1} ... T^{i_k}_{j_k}.
NCTensorOp nc_chain(int n, int k);

NCTensorOp nc_identity(int n, int k);
NCTensorOp nc_add(const NCTensorOp& a, const NCTensorOp& b);
NCTensorOp nc_sub(const NCTensorOp& a, const NCTensorOp& b);
NCTensorOp nc_scale(const ScalarQ& c, const NCTensorOp& x);
NCTensorOp nc_left_mul(const NCPoly& p, const NCTensorOp& x);   // p * entry
NCTensorOp nc_right_mul(const NCTensorOp& x, const NCPoly& p);  // entry * p

NCTensorOp nc_compose(const NCTensorOp& a, const NCTensorOp& b);
NCTensorOp nc_compose(const TensorOp& a, const NCTensorOp& b);
NCTensorOp nc_compose(const NCTensorOp& a, const TensorOp& b);

NCTensorOp nc_embed_single(const NCTensorOp& op1, int pos, int k_total);

// Scalar operator viewed as an operator with constant entries.
NCTensorOp nc_from_scalar_op(const TensorOp& x);

NCTensorOp nc_partial_trace(const NCTensorOp& x, const FactorSet& over);
NCPoly nc_full_trace(const NCTensorOp& x);
NCTensorOp nc_weighted_partial_trace(const NCTensorOp& x, const TensorOp& weight,
                                     const FactorSet& over);
NCPoly nc_weighted_full_trace(const NCTensorOp& x, const TensorOp& weight);

// Tr_over(scalar_op * chain); the workhorse behind traced constructions.
NCTensorOp nc_sandwich_trace(const TensorOp& scalar_op, const NCTensorOp& chain,
                             const FactorSet& over);
NCPoly nc_sandwich_trace_full(const TensorOp& scalar_op, const NCTensorOp& chain);

}  // namespace qchn
