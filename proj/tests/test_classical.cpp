#include <random>

#include "doctest.h"
#include "qchn/classical.hpp"
#include "qchn/identities.hpp"

using namespace qchn;

namespace {

NumericMatrix diag(std::initializer_list<long> values) {
  NumericMatrix m(static_cast<int>(values.size()));
  int i = 0;
  for (long v : values) {
    m.at(i, i) = v;
    ++i;
  }
  return m;
}

NumericMatrix random_matrix(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> numer(-6, 6);
  std::uniform_int_distribution<int> denom(1, 3);
  NumericMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = make_rational(numer(rng), denom(rng));
  return m;
}

int binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  long r = 1;
  for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
  return static_cast<int>(r);
}

}  // namespace

TEST_CASE("classical symmetric functions") {
  ClassicalSymFun id2 = classical_symfun(NumericMatrix::identity(2), 2);
  CHECK(id2.s[1] == 2);
  CHECK(id2.s[2] == 2);
  CHECK(id2.e[1] == 2);
  CHECK(id2.e[2] == 1);
  CHECK(id2.h[1] == 2);
  CHECK(id2.h[2] == 3);

  ClassicalSymFun d = classical_symfun(diag({1, 2}), 3);
  CHECK(d.s[2] == 5);
  CHECK(d.e[2] == 2);
  CHECK((d.e[1] * d.s[1] - d.s[2]) / 2 == d.e[2]);
  CHECK(d.e[3] == 0);  // e_k = 0 for k > n
  CHECK(d.h[2] == 7);  // 1 + 2 + 4
}

TEST_CASE("classical projectors") {
  // Ranks: C(n,k) for the antisymmetrizer, C(n+k-1,k) for the symmetrizer.
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= n + 1; ++k) {
      CHECK(classical_rank(classical_antisymmetrizer(n, k)) == binom(n, k));
      CHECK(classical_rank(classical_symmetrizer(n, k)) == binom(n + k - 1, k));
    }
  // Height story for the flip: rank A(k) = C(3,k) ends at height 3.
  CHECK(classical_rank(classical_antisymmetrizer(3, 3)) == 1);
  for (const auto& row : classical_antisymmetrizer(3, 4).rows) CHECK(row.empty());
}

TEST_CASE("classical D-matrices are the identity") {
  for (int n = 1; n <= 4; ++n) {
    auto [d_right, d_left] = classical_d_matrices(n);
    CHECK(d_right == NumericMatrix::identity(n));
    CHECK(d_left == NumericMatrix::identity(n));
  }
}

TEST_CASE("identity-matrix residual, n = 2, j = 2") {
  NumericMatrix x = NumericMatrix::identity(2);
  // X^(wedge 2) = I/2 for the identity matrix.
  NumericMatrix wedge = classical_traced_power(classical_antisymmetrizer(2, 2), x, true);
  CHECK(wedge == mat_scale(make_rational(1, 2), NumericMatrix::identity(2)));
  CHECK(classical_chn_check(x, 2).all_zero());
}

TEST_CASE("random residuals vanish exactly") {
  std::mt19937_64 rng(424242);
  for (int n = 1; n <= 4; ++n) {
    NumericMatrix x = random_matrix(n, rng);
    for (int j = 1; j <= n + 1; ++j) {
      ClassicalChnResiduals res = classical_chn_check(x, j);
      CHECK(res.all_zero());
    }
    // j = n is the Cayley-Hamilton matrix identity: sum (-1)^m e_m X^(n-m) = 0.
    ClassicalSymFun f = classical_symfun(x, n);
    std::vector<NumericMatrix> powers{NumericMatrix::identity(n)};
    for (int k = 1; k <= n; ++k) powers.push_back(mat_mul(powers.back(), x));
    NumericMatrix ch(n);
    for (int m = 0; m <= n; ++m) {
      const Rational sgn = m % 2 == 0 ? Rational(1) : Rational(-1);
      ch = mat_add(ch, mat_scale(sgn * f.e[static_cast<std::size_t>(m)],
                                 powers[static_cast<std::size_t>(n - m)]));
    }
    CHECK(ch.is_zero());
  }
}

TEST_CASE("tensor-trace symmetric functions match the recursions") {
  std::mt19937_64 rng(99);
  for (int n = 2; n <= 4; ++n) {
    NumericMatrix x = random_matrix(n, rng);
    ClassicalSymFun f = classical_symfun(x, n + 1);
    for (int k = 1; k <= n + 1; ++k) {
      CHECK(classical_elem_sym_tensor(x, k) == f.e[static_cast<std::size_t>(k)]);
      CHECK(classical_compl_sym_tensor(x, k) == f.h[static_cast<std::size_t>(k)]);
    }
  }
}

TEST_CASE("specialize_quantum bridges to the classical oracle") {
  HeckeContext ctx(certify_rmatrix(standard_rhat(2)));
  NumericMatrix x = diag({1, 2});
  const Rational one(1);
  // sigma_2 at q = 1 is e_2 = 2; s_k at q = 1 is Tr X^k.
  CHECK(specialize_quantum(ctx.elem_sym(2), x, one) == 2);
  ClassicalSymFun f = classical_symfun(x, 3);
  for (int k = 1; k <= 3; ++k)
    CHECK(specialize_quantum(ctx.power_sum(k), x, one) == f.s[static_cast<std::size_t>(k)]);

  // Every residual specializes to the zero matrix at q = 1.
  std::mt19937_64 rng(7);
  NumericMatrix y = random_matrix(2, rng);
  for (int j = 1; j <= 3; ++j) {
    for (auto v : {ChnVariant::le, ChnVariant::le2, ChnVariant::le3, ChnVariant::le4})
      CHECK(specialize_quantum(chn_residual(ctx, j, v), y, one).is_zero());
    for (auto v : {InvVariant::inv1, InvVariant::inv2, InvVariant::inv3, InvVariant::inv4})
      CHECK(specialize_quantum(inverse_residual(ctx, j, v), y, one).is_zero());
    for (auto v : {NewtonVariant::qnewton, NewtonVariant::qnewton2, NewtonVariant::qnewton3})
      CHECK(specialize_quantum(newton_residual(ctx, j, v), y, one) == 0);
    for (auto v : {ReVariant::wedge, ReVariant::sym})
      CHECK(specialize_quantum(re_chn_residual(ctx, j, v), y, one).is_zero());
  }
  CHECK(specialize_quantum(ch_residual(ctx, ChVariant::hc1), y, one).is_zero());
  CHECK(specialize_quantum(ch_residual(ctx, ChVariant::hc2), y, one).is_zero());
  // RE-side symmetric functions degenerate to e_k and h_k as well.
  ClassicalSymFun fy = classical_symfun(y, 2);
  CHECK(specialize_quantum(ctx.re_elem_sym(2), y, one) == fy.e[2]);
  CHECK(specialize_quantum(ctx.re_compl_sym(2), y, one) == fy.h[2]);
  // The wrong-side control does NOT vanish symbolically, but it does at q=1
  // where the entries commute; the q = 1 check alone cannot catch it.
  CHECK(specialize_quantum(chn_residual(ctx, 2, ChnVariant::le, true), y, one).is_zero());
}

TEST_CASE("classical demo is deterministic and clean") {
  ClassicalDemoResult a = classical_demo(3, 12, 7);
  ClassicalDemoResult b = classical_demo(3, 12, 7);
  CHECK(a.all_zero);
  CHECK(a.report.dump() == b.report.dump());
  CHECK(a.report["per_trial"].size() == 12);
  for (const auto& t : a.report["per_trial"]) CHECK(t["residual_norm"] == "0");
}
