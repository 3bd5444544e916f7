#include "doctest.h"
#include "qchn/rank.hpp"
#include "qchn/rmatrix.hpp"

using namespace qchn;

namespace {

const std::vector<Rational> kSamples = {make_rational(2), make_rational(3, 2),
                                        make_rational(5, 7)};

}  // namespace

TEST_CASE("level formulas") {
  for (int n = 1; n <= 3; ++n) {
    TensorOp r = standard_rhat(n);
    ProjectorTower anti(r, ProjectorKind::antisymmetrizer);
    ProjectorTower sym(r, ProjectorKind::symmetrizer);
    CHECK(anti.level(1) == identity_op(n, 1));
    CHECK(sym.level(1) == identity_op(n, 1));

    ScalarQ inv2q = ScalarQ::one() / qnum(2);
    TensorOp a2 = scale(inv2q, sub(scale(ScalarQ::q_power(1), identity_op(n, 2)), r));
    TensorOp s2 = scale(inv2q, add(scale(ScalarQ::q_power(-1), identity_op(n, 2)), r));
    CHECK(anti.level(2) == a2);
    CHECK(sym.level(2) == s2);
    CHECK(add(a2, s2) == identity_op(n, 2));
  }
}

TEST_CASE("classical specialization of level 2") {
  // With R = P the recursion coefficients at q = 1 give (I - P)/2.
  TensorOp p = permutation_op(2);
  ProjectorTower anti(p, ProjectorKind::antisymmetrizer);
  TensorOp a2 = anti.level(2);
  TensorOp classical = scale(ScalarQ(make_rational(1, 2)), sub(identity_op(2, 2), p));
  for (std::uint32_t r = 0; r < 4; ++r)
    for (std::uint32_t c = 0; c < 4; ++c)
      CHECK(a2.entry(r, c).eval_at(Rational(1)) == classical.entry(r, c).eval_at(Rational(1)));
}

TEST_CASE("projector algebra") {
  for (int n = 2; n <= 3; ++n) {
    TensorOp r = standard_rhat(n);
    ProjectorTower anti(r, ProjectorKind::antisymmetrizer);
    ProjectorTower sym(r, ProjectorKind::symmetrizer);
    for (int k = 1; k <= n + 1; ++k) {
      TensorOp ak = anti.level(k);
      TensorOp sk = sym.level(k);
      CHECK(compose(ak, ak) == ak);
      CHECK(compose(sk, sk) == sk);
      if (k >= 2) {
        CHECK(compose(ak, sk).is_zero());
        CHECK(compose(sk, ak).is_zero());
      }
      if (k >= 2) {
        // Absorption of the previous level on either side.
        TensorOp prev = embed_leading(anti.level(k - 1), k);
        CHECK(compose(ak, prev) == ak);
        CHECK(compose(prev, ak) == ak);
      }
    }
    // Height consequences for the standard, height-n R-matrix.
    CHECK(full_trace(anti.level(n)) == ScalarQ::one());
    CHECK(generic_rank(anti.level(n), kSamples) == 1);
    CHECK(anti.level(n + 1).is_zero());
  }
}

TEST_CASE("projector ranks match q-binomial dimensions") {
  // The deformation is flat: rank A(k) = C(n,k), rank S(k) = C(n+k-1,k).
  auto binom = [](int a, int b) {
    if (b < 0 || b > a) return 0;
    int r = 1;
    for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
  };
  for (int n = 2; n <= 3; ++n) {
    ProjectorTower anti(standard_rhat(n), ProjectorKind::antisymmetrizer);
    ProjectorTower sym(standard_rhat(n), ProjectorKind::symmetrizer);
    for (int k = 1; k <= n; ++k) {
      CHECK(generic_rank(anti.level(k), kSamples) == binom(n, k));
      CHECK(generic_rank(sym.level(k), kSamples) == binom(n + k - 1, k));
    }
  }
}

TEST_CASE("resolvent identity") {
  // n = 2, k = 1: q A(1) = 2_q A(2) + R on V (x) V.
  ProjectorTower anti2(standard_rhat(2), ProjectorKind::antisymmetrizer);
  CHECK(resolvent_residual(anti2, 1).is_zero());
  // n = 2, k = 2 (A(3) = 0): q^2 A(2) = 2_q A(2) R_2 A(2) on V^(x)3.
  CHECK(resolvent_residual(anti2, 2).is_zero());
  ProjectorTower anti3(standard_rhat(3), ProjectorKind::antisymmetrizer);
  for (int k = 1; k <= 3; ++k) CHECK(resolvent_residual(anti3, k).is_zero());

  // Classical check at q = 1 with R = P, n = 3, k = 2: evaluate entrywise.
  ProjectorTower antiP(permutation_op(3), ProjectorKind::antisymmetrizer);
  TensorOp res = resolvent_residual(antiP, 2);
  for (const auto& [key, v] : res.entries()) CHECK(v.eval_at(Rational(1)) == 0);
}
