#include <random>

#include "doctest.h"
#include "qchn/ideal.hpp"
#include "qchn/rmatrix.hpp"

using namespace qchn;

namespace {

const std::vector<Rational> kSamples = {make_rational(2), make_rational(3, 2),
                                        make_rational(5, 7)};

// Rank of the span of a relation set's coefficient vectors at q0.
std::size_t span_rank(const RelationSet& rel, const Rational& q0) {
  SpanBasis<Rational> span;
  const int alphabet = rel.n * rel.n;
  for (const NCPoly& r : rel.relations)
    span.insert(poly_vector(r.specialize(q0), alphabet));
  return span.rows();
}

NCPoly random_poly(int n, int max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> letter(0, n * n - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> expo(-1, 1);
  std::uniform_int_distribution<int> terms(1, 4);
  NCPoly p;
  const int d = deg(rng);
  for (int t = 0; t < terms(rng); ++t) {
    NCMonomial m;
    for (int i = 0; i < d; ++i) m.word.push_back(static_cast<GenLetter>(letter(rng)));
    p.add_term(m, ScalarQ(Rational(coeff(rng))) * ScalarQ::q_power(expo(rng)));
  }
  return p;
}

NCMonomial word(std::initializer_list<GenLetter> ls) { return NCMonomial{ls}; }

}  // namespace

TEST_CASE("ncpoly basics") {
  NCPoly a = NCPoly::generator(0);
  NCPoly b = NCPoly::generator(1);
  CHECK(a * b != b * a);
  CHECK((a * b - a * b).is_zero());
  CHECK((a * b).terms().begin()->first == word({0, 1}));
  CHECK((a * b - b * a).abelianized().is_zero());
  CHECK(a.is_homogeneous());
  NCPoly mixed = a + a * b;
  CHECK(!mixed.is_homogeneous());
  CHECK(mixed.degree() == 2);
  CHECK(NCPoly::one().degree() == 0);
}

TEST_CASE("nc_chain structure") {
  NCTensorOp t1 = nc_chain(2, 1);
  CHECK(t1 == nc_generator_matrix(2));
  // n = 1, k = 3: the single entry is the word t.t.t.
  NCTensorOp t3 = nc_chain(1, 3);
  CHECK(t3.entries().size() == 1);
  CHECK(t3.entry(0, 0) == NCPoly::monomial(word({0, 0, 0}), ScalarQ::one()));
  // Entry count n^(2k), each a single word of length k.
  NCTensorOp c = nc_chain(2, 2);
  CHECK(c.entries().size() == 16);
  for (const auto& [key, v] : c.entries()) {
    CHECK(v.term_count() == 1);
    CHECK(v.degree() == 2);
  }
}

TEST_CASE("nc traces") {
  // Tr T = sum_i T^i_i.
  NCPoly tr = nc_sandwich_trace_full(identity_op(2, 1), nc_chain(2, 1));
  NCPoly expected = NCPoly::generator(0) + NCPoly::generator(3);
  CHECK(tr == expected);
  // n = 1 has height 1: A(2) = 0 kills every sandwich.
  ProjectorTower anti1(standard_rhat(1), ProjectorKind::antisymmetrizer);
  CHECK(nc_sandwich_trace_full(anti1.level(2), nc_chain(1, 2)).is_zero());
}

TEST_CASE("rtt relations") {
  CHECK(rtt_relations(standard_rhat(1)).relations.empty());

  RelationSet rel2 = rtt_relations(standard_rhat(2));
  CHECK(!rel2.relations.empty());
  for (const NCPoly& r : rel2.relations) {
    CHECK(r.is_homogeneous());
    CHECK(r.degree() == 2);
  }

  // Classical degeneration: with R = P the relations are plain commutators,
  // spanning the 6-dimensional antisymmetric part of the 16-dim square.
  RelationSet relP = rtt_relations(permutation_op(2));
  CHECK(span_rank(relP, make_rational(2)) == 6);
  for (const NCPoly& r : relP.relations) CHECK(r.abelianized().is_zero());
  // Generic q keeps the same relation-span dimension.
  CHECK(span_rank(rel2, make_rational(2)) == 6);
}

TEST_CASE("re relations") {
  CHECK(re_relations(standard_rhat(1)).relations.empty());
  RelationSet rel = re_relations(standard_rhat(2));
  for (const NCPoly& r : rel.relations) {
    CHECK(r.is_homogeneous());
    CHECK(r.degree() == 2);
  }
  // At R = P the RE algebra degenerates to commuting entries.
  RelationSet relP = re_relations(permutation_op(2));
  CHECK(span_rank(relP, make_rational(2)) == 6);
  for (const NCPoly& r : relP.relations) CHECK(r.abelianized().is_zero());
}

TEST_CASE("ideal membership basics") {
  RelationSet rel = rtt_relations(standard_rhat(2));
  IdealVerifier verifier(rel, kSamples);

  // Any defining relation is a member.
  Certificate c1 = verifier.certify_poly(rel.relations.front(), "rel", {});
  CHECK(c1.holds());
  CHECK(c1.samples.size() == 3);
  CHECK(c1.per_sample == std::vector<std::string>{"holds", "holds", "holds"});

  // A single degree-2 word survives in the quotient.
  NCPoly bad = NCPoly::monomial(word({0, 0}), ScalarQ::one());
  Certificate c2 = verifier.certify_poly(bad, "bad", {});
  CHECK(!c2.holds());

  // Two-sided ideal: T^1_1 r - r T^1_1 stays inside.
  NCPoly g = NCPoly::generator(0);
  const NCPoly& r = rel.relations.front();
  Certificate c3 = verifier.certify_poly(g * r - r * g, "sandwich", {});
  CHECK(c3.holds());

  // Degree-0/1 elements are members iff zero.
  CHECK(verifier.certify_poly(NCPoly(), "zero", {}).holds());
  CHECK(!verifier.certify_poly(g, "gen", {}).holds());
  CHECK(!verifier.certify_poly(NCPoly::one(), "one", {}).holds());

  CHECK_THROWS_AS(verifier.certify_poly(g + g * g, "inhom", {}),
                  invalid_argument_error);
}

TEST_CASE("two-sided closure on random words") {
  RelationSet rel = rtt_relations(standard_rhat(2));
  IdealVerifier verifier(rel, kSamples);
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> letter(0, 3);
  std::uniform_int_distribution<std::size_t> pick(0, rel.relations.size() - 1);
  for (int trial = 0; trial < 6; ++trial) {
    const NCPoly& r = rel.relations[pick(rng)];
    int extra = trial % 3;  // total degree 2..4
    NCPoly u = NCPoly::one(), v = NCPoly::one();
    for (int i = 0; i < extra; ++i) {
      if (i % 2 == 0)
        u = u * NCPoly::generator(static_cast<GenLetter>(letter(rng)));
      else
        v = v * NCPoly::generator(static_cast<GenLetter>(letter(rng)));
    }
    Certificate c = verifier.certify_poly(u * r * v, "urv", {});
    CHECK(c.holds());
  }
}

TEST_CASE("classical degeneration decides by abelianization") {
  RelationSet relP = rtt_relations(permutation_op(2));
  IdealVerifier verifier(relP, kSamples);
  std::mt19937_64 rng(77);
  int nontrivial = 0;
  for (int trial = 0; trial < 40; ++trial) {
    NCPoly p = random_poly(2, 3, rng);
    if (!p.is_homogeneous()) continue;
    bool expected = p.abelianized().is_zero();
    Certificate c = verifier.certify_poly(p, "abel", {});
    CHECK(c.holds() == expected);
    if (expected && !p.is_zero()) ++nontrivial;
  }
  // Make sure the generator actually produced members, not only junk.
  NCPoly a = NCPoly::generator(0), b = NCPoly::generator(3);
  CHECK(verifier.certify_poly(a * b - b * a, "comm", {}).holds());
}

TEST_CASE("matrix certification") {
  RelationSet rel = rtt_relations(standard_rhat(2));
  IdealVerifier verifier(rel, kSamples);

  NCTensorOp zero(2, 1);
  CHECK(verifier.certify_matrix(zero, "zero-matrix", {}).holds());

  NCTensorOp m(2, 1);
  m.set_entry(0, 0, rel.relations.front());
  m.set_entry(1, 0, NCPoly::monomial(word({0, 0}), ScalarQ::one()));
  Certificate c = verifier.certify_matrix(m, "one-bad-entry", {});
  CHECK(!c.holds());
  REQUIRE(c.failed_entry.has_value());
  CHECK(c.failed_entry->first == 1);
  CHECK(c.failed_entry->second == 0);
}

TEST_CASE("pole-skipping and sample exhaustion") {
  RelationSet rel = rtt_relations(standard_rhat(2));
  // A coefficient with poles at 2 and 3/2 forces those samples out.
  ScalarQ pole_coeff = ScalarQ::one() / ((ScalarQ::q_power(1) - ScalarQ(2)) *
                                         (ScalarQ(2) * ScalarQ::q_power(1) - ScalarQ(3)));
  NCPoly p = pole_coeff * rel.relations.front();
  std::vector<Rational> five = {make_rational(2),    make_rational(3, 2),
                                make_rational(5, 7), make_rational(4, 3),
                                make_rational(7, 2)};
  IdealVerifier verifier(rel, five);
  Certificate c = verifier.certify_poly(p, "poles", {});
  CHECK(c.holds());
  CHECK(c.samples.size() == 3);
  CHECK(c.skipped_samples == std::vector<Rational>{make_rational(2), make_rational(3, 2)});

  IdealVerifier small(rel, kSamples);  // only one usable sample remains
  CHECK_THROWS_AS(small.certify_poly(p, "exhausted", {}), arithmetic_error);
  CHECK_THROWS_AS(IdealVerifier(rel, {make_rational(2), Rational(1), Rational(0)}),
                  invalid_argument_error);
}

TEST_CASE("symbolic backend agrees with the sampled backend") {
  RelationSet rel = rtt_relations(standard_rhat(2));
  IdealVerifier verifier(rel, kSamples);
  CHECK(ideal_member_symbolic(rel.relations.front(), rel));
  NCPoly bad = NCPoly::monomial(word({0, 0}), ScalarQ::one());
  CHECK(!ideal_member_symbolic(bad, rel));
  NCPoly g = NCPoly::generator(2);
  const NCPoly& r = rel.relations.back();
  NCPoly member = g * r - r * g;
  CHECK(ideal_member_symbolic(member, rel));
  CHECK(verifier.certify_poly(member, "sym-vs-sampled", {}).holds());
}

TEST_CASE("certificate json schema") {
  RelationSet rel = rtt_relations(standard_rhat(2));
  IdealVerifier verifier(rel, kSamples);
  Certificate c = verifier.certify_poly(rel.relations.front(), "schema-check",
                                        {{"n", 2}, {"j", 2}});
  auto j = certificate_to_json(c);
  CHECK(j["identity"] == "schema-check");
  CHECK(j["params"]["n"] == 2);
  CHECK(j["samples"].size() == 3);
  CHECK(j["samples"][0] == "2");
  CHECK(j["samples"][1] == "3/2");
  CHECK(j["per_sample"][0] == "holds");
  CHECK(j["verdict"] == "holds");
  CHECK(j["system_dims"].size() == 3);
  CHECK(j["system_dims"][0][0] == 16);  // degree-2 component of 4 letters
}
