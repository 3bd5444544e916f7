#include "qchn/ideal.hpp"

namespace qchn {

std::uint32_t monomial_rank(const NCMonomial& m, int alphabet) {
  std::uint64_t rank = 0;
  for (GenLetter g : m.word) {
    rank = rank * static_cast<std::uint64_t>(alphabet) + g;
    if (rank > 0xffffffffull) throw invalid_argument_error("graded component too large");
  }
  return static_cast<std::uint32_t>(rank);
}

SparseVec<Rational> poly_vector(const std::map<NCMonomial, Rational>& terms, int alphabet) {
  SparseVec<Rational> v;
  v.reserve(terms.size());
  for (const auto& [m, c] : terms) v.emplace_back(monomial_rank(m, alphabet), c);
  return v;  // map order = rank order for words of equal length
}

SparseVec<ScalarQ> poly_vector_symbolic(const NCPoly& p, int alphabet) {
  SparseVec<ScalarQ> v;
  v.reserve(p.terms().size());
  for (const auto& [m, c] : p.terms()) v.emplace_back(monomial_rank(m, alphabet), c);
  return v;
}

namespace {

template <class F>
std::vector<SparseVec<F>> reduce_to_basis(std::vector<SparseVec<F>> vectors) {
  SpanBasis<F> span;
  std::vector<SparseVec<F>> basis;
  for (auto& v : vectors) {
    if (span.reduce(v)) continue;
    const F lead = v.back().second;
    if (!(lead == F(1)))
      for (auto& [idx, c] : v) c = c / lead;
    basis.push_back(v);
    span.insert(std::move(v));
  }
  return basis;
}

nlohmann::ordered_json rationals_to_json(const std::vector<Rational>& xs) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& x : xs) arr.push_back(rational_to_string(x));
  return arr;
}

void require_admissible(const Rational& q0) {
  if (q0 == 0 || q0 == 1 || q0 == -1)
    throw invalid_argument_error("inadmissible sample q0 = " + rational_to_string(q0));
}

}  // namespace

nlohmann::ordered_json certificate_to_json(const Certificate& c) {
  nlohmann::ordered_json j;
  j["identity"] = c.identity;
  j["params"] = c.params.is_null() ? nlohmann::ordered_json::object() : c.params;
  j["samples"] = rationals_to_json(c.samples);
  j["per_sample"] = c.per_sample;
  j["verdict"] = c.verdict;
  auto dims = nlohmann::ordered_json::array();
  for (const auto& d : c.system_dims) dims.push_back({d[0], d[1]});
  j["system_dims"] = std::move(dims);
  j["skipped_samples"] = rationals_to_json(c.skipped_samples);
  if (c.failed_entry)
    j["failed_entry"] = {c.failed_entry->first, c.failed_entry->second};
  return j;
}

IdealVerifier::IdealVerifier(RelationSet rel, std::vector<Rational> samples)
    : rel_(std::move(rel)), samples_(std::move(samples)), alphabet_(rel_.n * rel_.n) {
  states_.reserve(samples_.size());
  for (const Rational& q0 : samples_) {
    require_admissible(q0);
    SampleState st;
    st.q0 = q0;
    std::vector<SparseVec<Rational>> vectors;
    try {
      vectors.reserve(rel_.relations.size());
      for (const NCPoly& r : rel_.relations)
        vectors.push_back(poly_vector(r.specialize(q0), alphabet_));
      st.rel_basis = reduce_to_basis(std::move(vectors));
    } catch (const arithmetic_error&) {
      st.usable = false;  // a relation coefficient has a pole here
    }
    states_.push_back(std::move(st));
  }
}

IdealSpan<Rational>& IdealVerifier::span_for(SampleState& st, int degree) {
  auto it = st.spans.find(degree);
  if (it == st.spans.end())
    it = st.spans.emplace(degree, IdealSpan<Rational>(&st.rel_basis, alphabet_, degree)).first;
  return it->second;
}

std::optional<bool> IdealVerifier::member_at(SampleState& st, const NCPoly& p) {
  std::map<NCMonomial, Rational> spec;
  try {
    spec = p.specialize(st.q0);
  } catch (const arithmetic_error&) {
    return std::nullopt;
  }
  if (spec.empty()) return true;
  const int d = spec.begin()->first.degree();
  if (d < 2) return false;  // nonzero degree-0/1 element is never in the ideal
  return span_for(st, d).contains(poly_vector(spec, alphabet_));
}

Certificate IdealVerifier::run(const std::string& identity, nlohmann::ordered_json params,
                               const std::vector<Query>& queries, int degree) {
  Certificate cert;
  cert.identity = identity;
  cert.params = std::move(params);
  std::uint64_t space_dim = 1;
  for (int i = 0; i < degree; ++i) space_dim *= static_cast<std::uint64_t>(alphabet_);

  for (SampleState& st : states_) {
    if (!st.usable) {
      cert.skipped_samples.push_back(st.q0);
      continue;
    }
    bool sample_ok = true;
    bool holds = true;
    for (const Query& query : queries) {
      std::optional<bool> member = member_at(st, *query.second);
      if (!member) {
        sample_ok = false;
        break;
      }
      if (!*member) {
        holds = false;
        if (!cert.failed_entry && query.first) cert.failed_entry = *query.first;
        break;
      }
    }
    if (!sample_ok) {
      cert.skipped_samples.push_back(st.q0);
      continue;
    }
    cert.samples.push_back(st.q0);
    cert.per_sample.push_back(holds ? "holds" : "fails");
    auto span_it = st.spans.find(degree);
    const std::uint64_t spanners =
        span_it == st.spans.end() ? 0 : span_it->second.spanners_enumerated();
    cert.system_dims.push_back({space_dim, spanners});
  }

  if (cert.samples.size() < 3)
    throw arithmetic_error("fewer than 3 usable q-samples for identity " + identity);
  bool all_hold = true;
  for (const auto& s : cert.per_sample)
    if (s != "holds") all_hold = false;
  cert.verdict = all_hold ? "holds" : "fails";
  return cert;
}

Certificate IdealVerifier::certify_poly(const NCPoly& p, const std::string& identity,
                                        nlohmann::ordered_json params) {
  if (!p.is_homogeneous())
    throw invalid_argument_error("ideal membership needs a homogeneous polynomial");
  const int degree = p.is_zero() ? 0 : p.degree();
  std::vector<Query> queries{{std::nullopt, &p}};
  return run(identity, std::move(params), queries, degree);
}

Certificate IdealVerifier::certify_matrix(const NCTensorOp& m, const std::string& identity,
                                          nlohmann::ordered_json params) {
  int degree = 0;
  bool first = true;
  std::vector<Query> queries;
  queries.reserve(m.entries().size());
  for (const auto& [key, v] : m.entries()) {
    if (!v.is_homogeneous())
      throw invalid_argument_error("matrix residual entries must be homogeneous");
    if (first) {
      degree = v.degree();
      first = false;
    } else if (v.degree() != degree) {
      throw invalid_argument_error("matrix residual entries must share one degree");
    }
    queries.emplace_back(std::make_pair(TensorOp::key_row(key), TensorOp::key_col(key)), &v);
  }
  return run(identity, std::move(params), queries, degree);
}

Certificate ideal_member(const NCPoly& p, const RelationSet& rel,
                         const std::vector<Rational>& samples,
                         const std::string& identity, nlohmann::ordered_json params) {
  IdealVerifier verifier(rel, samples);
  return verifier.certify_poly(p, identity, std::move(params));
}

Certificate nc_matrix_residual_member(const NCTensorOp& m, const RelationSet& rel,
                                      const std::vector<Rational>& samples,
                                      const std::string& identity,
                                      nlohmann::ordered_json params) {
  IdealVerifier verifier(rel, samples);
  return verifier.certify_matrix(m, identity, std::move(params));
}

bool ideal_member_symbolic(const NCPoly& p, const RelationSet& rel) {
  if (!p.is_homogeneous())
    throw invalid_argument_error("ideal membership needs a homogeneous polynomial");
  if (p.is_zero()) return true;
  const int alphabet = rel.n * rel.n;
  const int d = p.degree();
  if (d < 2) return false;
  std::vector<SparseVec<ScalarQ>> vectors;
  vectors.reserve(rel.relations.size());
  for (const NCPoly& r : rel.relations)
    vectors.push_back(poly_vector_symbolic(r, alphabet));
  auto basis = reduce_to_basis(std::move(vectors));
  IdealSpan<ScalarQ> span(&basis, alphabet, d);
  return span.contains(poly_vector_symbolic(p, alphabet));
}

}  // namespace qchn
