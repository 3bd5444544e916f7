// Classical-limit oracle: symmetric functions and the identity family for
// ordinary matrices with commuting exact-rational entries.
//
// Everything here is independent of the symbolic q-machinery: projectors
// come from explicit signed permutation sums, elementary symmetric functions
// from the Faddeev-LeVerrier recursion, complete ones from the Newton
// recursion. This module both checks the classical statements directly and
// serves as the q = 1 cross-check for the quantum constructions.
#pragma once

#include <cstdint>
#include <vector>

#include "json.hpp"
#include "qchn/ncpoly.hpp"
#include "qchn/nc_tensor.hpp"

namespace qchn {

struct NumericMatrix {
  int n = 0;
  std::vector<Rational> a;  // row-major

  NumericMatrix() = default;
  explicit NumericMatrix(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim, Rational(0)) {}

  static NumericMatrix identity(int dim);

  Rational& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const Rational& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

  bool is_zero() const;
  bool operator==(const NumericMatrix& o) const = default;
};

NumericMatrix mat_mul(const NumericMatrix& x, const NumericMatrix& y);
NumericMatrix mat_add(const NumericMatrix& x, const NumericMatrix& y);
NumericMatrix mat_sub(const NumericMatrix& x, const NumericMatrix& y);
NumericMatrix mat_scale(const Rational& c, const NumericMatrix& x);
Rational mat_trace(const NumericMatrix& x);
Rational mat_max_abs(const NumericMatrix& x);

// s_k = Tr X^k; e_k by Faddeev-LeVerrier (0 for k > n); h_k by the Newton
// recursion k h_k = sum_{i=1..k} s_i h_{k-i}. Index 0 entries are s_0 = n,
// e_0 = h_0 = 1; lists run up to `bound`.
struct ClassicalSymFun {
  std::vector<Rational> s, e, h;
};
ClassicalSymFun classical_symfun(const NumericMatrix& x, int bound);

// Sparse exact operator on (Q^n)^(tensor k), row-major rows.
struct RationalTensor {
  int n = 0, k = 0;
  std::uint32_t dim = 0;
  std::vector<std::vector<std::pair<std::uint32_t, Rational>>> rows;
};

// (1/k!) sum_sigma sgn(sigma) P_sigma and the unsigned average.
RationalTensor classical_antisymmetrizer(int n, int k);
RationalTensor classical_symmetrizer(int n, int k);

// Tr over all factors of proj . X^(tensor k).
Rational classical_projected_trace(const RationalTensor& proj, const NumericMatrix& x);

// Tr over all factors but one (the last for keep_last, else the first) of
// proj . X^(tensor k); an n x n matrix.
NumericMatrix classical_traced_power(const RationalTensor& proj, const NumericMatrix& x,
                                     bool keep_last);

// Tr over all factors but one of proj alone.
NumericMatrix classical_partial_trace_to_one(const RationalTensor& proj, bool keep_last);

int classical_rank(const RationalTensor& t);

// n Tr_(2..n) A(n) and n Tr_(1..n-1) A(n): both identity matrices.
std::pair<NumericMatrix, NumericMatrix> classical_d_matrices(int n);

// The four residuals at q = 1: wedge/symmetric power versions with the
// coefficient on either side (numerically the sides coincide; all four are
// produced for completeness). Exact zero expected for 1 <= j <= n + 1.
struct ClassicalChnResiduals {
  NumericMatrix le, le2, le3, le4;
  bool all_zero() const { return le.is_zero() && le2.is_zero() && le3.is_zero() && le4.is_zero(); }
};
ClassicalChnResiduals classical_chn_check(const NumericMatrix& x, int j);

// e_k via the tensor-trace definition Tr(A(k) X_1...X_k) at q = 1; the
// independent cross-check against Faddeev-LeVerrier.
Rational classical_elem_sym_tensor(const NumericMatrix& x, int k);
Rational classical_compl_sym_tensor(const NumericMatrix& x, int k);

// Substitute commuting values for the generators and evaluate coefficients
// at q0 (use q0 = 1 with an R-matrix that degenerates to the flip there).
Rational specialize_quantum(const NCPoly& p, const NumericMatrix& x, const Rational& q0);
NumericMatrix specialize_quantum(const NCTensorOp& m, const NumericMatrix& x,
                                 const Rational& q0);

// Seeded randomized run over matrices with n <= max_n, all j <= n + 1;
// also cross-checks tensor-trace e_k against Faddeev-LeVerrier and the
// classical Newton identities. Deterministic given (max_n, trials, seed).
struct ClassicalDemoResult {
  bool all_zero = true;
  int checks = 0;
  nlohmann::ordered_json report;
};
ClassicalDemoResult classical_demo(int max_n, int trials, std::uint64_t seed);

}  // namespace qchn
