#include <random>
#include <sstream>

#include "doctest.h"
#include "qchn/json_io.hpp"
#include "qchn/rank.hpp"
#include "qchn/tensor_op.hpp"

using namespace qchn;

namespace {

TensorOp flip(int n) {
  TensorOp p(n, 2);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      p.set_entry(static_cast<std::uint32_t>(b * n + a),
                  static_cast<std::uint32_t>(a * n + b), ScalarQ::one());
  return p;
}

TensorOp random_op(int n, int k, std::mt19937_64& rng, int fill = 6) {
  TensorOp x(n, k);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> expo(-2, 2);
  std::uniform_int_distribution<std::uint32_t> idx(0, x.dim() - 1);
  for (int i = 0; i < fill; ++i) {
    ScalarQ v = ScalarQ(Rational(coeff(rng))) * ScalarQ::q_power(expo(rng));
    x.add_entry(idx(rng), idx(rng), v);
  }
  return x;
}

// Independent dense evaluation of Tr_over((prod_i W_i) x): loops over all
// digit tuples, no sparse machinery.
TensorOp dense_weighted_trace(const TensorOp& x, const TensorOp& w, const FactorSet& over) {
  const int n = x.n(), k = x.k();
  const int k_rem = k - static_cast<int>(over.size());
  TensorOp out(n, k_rem);
  std::uint32_t dim = x.dim();
  for (std::uint32_t r = 0; r < dim; ++r) {
    for (std::uint32_t c = 0; c < dim; ++c) {
      // (W x)[r, c] = sum_m W_over[r, m] x[m, c]; W_over is diagonal in the
      // untouched factors, so m differs from r only in traced digits.
      ScalarQ wx;
      for (std::uint32_t m = 0; m < dim; ++m) {
        auto rd = x.digits(r), md = x.digits(m);
        bool ok = true;
        ScalarQ wprod = ScalarQ::one();
        for (int p = 1; p <= k && ok; ++p) {
          if (over.contains(p)) {
            wprod *= w.entry(static_cast<std::uint32_t>(rd[p - 1]),
                             static_cast<std::uint32_t>(md[p - 1]));
          } else if (rd[p - 1] != md[p - 1]) {
            ok = false;
          }
        }
        if (ok && !wprod.is_zero()) wx += wprod * x.entry(m, c);
      }
      if (wx.is_zero()) continue;
      auto rd = x.digits(r), cd = x.digits(c);
      bool diag = true;
      std::vector<int> rr, cc;
      for (int p = 1; p <= k; ++p) {
        if (over.contains(p)) {
          if (rd[p - 1] != cd[p - 1]) diag = false;
        } else {
          rr.push_back(rd[p - 1]);
          cc.push_back(cd[p - 1]);
        }
      }
      if (diag) out.add_entry(out.index_of(rr), out.index_of(cc), wx);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("basic algebra") {
  std::mt19937_64 rng(5);
  TensorOp x = random_op(2, 2, rng);
  CHECK(compose(identity_op(2, 2), x) == x);
  CHECK(compose(x, identity_op(2, 2)) == x);
  CHECK(compose(flip(2), flip(2)) == identity_op(2, 2));
  CHECK(add(x, scale(ScalarQ(-1), x)).is_zero());
  CHECK_THROWS_AS(add(x, identity_op(2, 3)), invalid_argument_error);
  CHECK_THROWS_AS(compose(x, identity_op(3, 2)), invalid_argument_error);
}

TEST_CASE("embed_pair") {
  TensorOp p = flip(2);
  CHECK(embed_pair(p, 1, 2) == p);
  CHECK_THROWS_AS(embed_pair(p, 3, 3), invalid_argument_error);
  CHECK_THROWS_AS(embed_pair(p, 0, 3), invalid_argument_error);

  // Permutation-action oracle: apply flip(1,2) then flip(2,3) to e_a (x) e_b (x) e_c,
  // expecting e_b (x) e_c (x) e_a.
  const int n = 2;
  TensorOp p1 = embed_pair(p, 1, 3);
  TensorOp p2 = embed_pair(p, 2, 3);
  TensorOp cycle = compose(p2, p1);
  TensorOp probe(n, 3);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        auto col = probe.index_of({a, b, c});
        auto v = apply_to_basis(cycle, col);
        REQUIRE(v.size() == 1);
        CHECK(v.begin()->first == probe.index_of({b, c, a}));
        CHECK(v.begin()->second == ScalarQ::one());
      }
}

TEST_CASE("embeddings at distance >= 2 commute") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    TensorOp a2 = random_op(2, 2, rng);
    TensorOp b2 = random_op(2, 2, rng);
    TensorOp a = embed_pair(a2, 1, 4);
    TensorOp b = embed_pair(b2, 3, 4);
    CHECK(compose(a, b) == compose(b, a));
  }
}

TEST_CASE("partial traces") {
  const int n = 3;
  CHECK(partial_trace(identity_op(n, 2), FactorSet({2})) ==
        scale(ScalarQ(n), identity_op(n, 1)));
  // Entry-level sum oracle: Tr_2 P picks P[(i,b),(j,b)] = delta_{i,b} delta_{b,j}.
  CHECK(partial_trace(flip(n), FactorSet({2})) == identity_op(n, 1));
  CHECK(full_trace(identity_op(2, 3)) == ScalarQ(8));
  CHECK(full_trace(flip(2)) == ScalarQ(2));

  std::mt19937_64 rng(23);
  TensorOp x = random_op(2, 3, rng, 10);
  // Disjoint traces compose in either order.
  TensorOp t13 = partial_trace(x, FactorSet({1, 3}));
  CHECK(t13 == partial_trace(partial_trace(x, FactorSet({3})), FactorSet({1})));
  // After tracing factor 1, old factor 3 is the new factor 2.
  CHECK(t13 == partial_trace(partial_trace(x, FactorSet({1})), FactorSet({2})));
  CHECK_THROWS_AS(partial_trace(x, FactorSet({1, 2, 3})), invalid_argument_error);
  CHECK_THROWS_AS(partial_trace(x, FactorSet({4})), invalid_argument_error);
}

TEST_CASE("trace cyclicity") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    TensorOp x = random_op(2, 2, rng, 8);
    TensorOp y = random_op(2, 2, rng, 8);
    CHECK(full_trace(compose(x, y)) == full_trace(compose(y, x)));
  }
}

TEST_CASE("weighted partial trace") {
  const int n = 2;
  std::mt19937_64 rng(41);
  TensorOp x = random_op(n, 3, rng, 12);
  TensorOp id1 = identity_op(n, 1);
  CHECK(weighted_partial_trace(x, id1, FactorSet({2})) ==
        partial_trace(x, FactorSet({2})));

  TensorOp w(n, 1);
  w.set_entry(0, 0, ScalarQ::q_power(-1));
  w.set_entry(1, 1, ScalarQ::q_power(-3));
  w.set_entry(0, 1, ScalarQ(Rational(1)));
  CHECK(weighted_full_trace(identity_op(n, 1), w) == full_trace(w));

  // Dense-evaluation oracle on random sparse operators.
  for (int trial = 0; trial < 4; ++trial) {
    TensorOp y = random_op(n, 3, rng, 10);
    FactorSet over({1, 3});
    CHECK(weighted_partial_trace(y, w, over) == dense_weighted_trace(y, w, over));
    FactorSet over2({2});
    CHECK(weighted_partial_trace(y, w, over2) == dense_weighted_trace(y, w, over2));
  }
  CHECK_THROWS_AS(weighted_partial_trace(x, random_op(3, 1, rng), FactorSet({1})),
                  invalid_argument_error);
}

TEST_CASE("generic rank") {
  std::vector<Rational> samples = {make_rational(2), make_rational(3, 2),
                                   make_rational(5, 7)};
  CHECK(generic_rank(identity_op(2, 2), samples) == 4);
  CHECK(generic_rank(TensorOp(2, 2), samples) == 0);

  // Classical antisymmetrizer (I - P)/2 on V (x) V, n = 2: rank C(2,2) = 1.
  TensorOp a2 = scale(ScalarQ(make_rational(1, 2)), sub(identity_op(2, 2), flip(2)));
  CHECK(generic_rank(a2, samples) == 1);
  CHECK(compose(a2, a2) == a2);
  // For a projector, symbolic trace gives the rank at every admissible sample.
  CHECK(full_trace(a2) == ScalarQ::one());

  // Pole handling: entry 1/(q-2) breaks q0 = 2 but the other samples survive.
  TensorOp pole(2, 1);
  pole.set_entry(0, 0, ScalarQ::one() /
                           (ScalarQ::q_power(1) - ScalarQ(2)));
  std::vector<Rational> skipped;
  CHECK(generic_rank(pole, samples, &skipped) == 1);
  CHECK(skipped == std::vector<Rational>{make_rational(2)});
  CHECK_THROWS_AS(generic_rank(pole, {make_rational(2)}), arithmetic_error);
}

TEST_CASE("json round trip") {
  std::mt19937_64 rng(61);
  TensorOp x = random_op(2, 2, rng, 7);
  auto j = tensor_op_to_json(x);
  CHECK(tensor_op_from_json(nlohmann::json::parse(j.dump())) == x);
  CHECK_THROWS_AS(tensor_op_from_json(nlohmann::json::parse("{\"n\": 2}")),
                  invalid_argument_error);
}
