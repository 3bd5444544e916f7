// Graded ideal membership for homogeneous noncommutative polynomials.
//
// The degree-d component of the two-sided ideal generated by degree-2
// relations is span{ u r v : r relation, words |u| + 2 + |v| = d }. A
// membership query reduces the candidate against an incrementally built
// echelon basis of that span; spanning vectors are enumerated lazily in a
// fixed order, so certificates are reproducible. Queries run over exact
// rationals at specialized q values (the default backend) or over ScalarQ
// itself (the symbolic backend, for small instances).
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qchn/relations.hpp"

namespace qchn {

inline bool field_zero(const Rational& x) { return x == 0; }
inline bool field_zero(const ScalarQ& x) { return x.is_zero(); }

// Sparse coordinate vector, ascending index, no zero coefficients.
template <class F>
using SparseVec = std::vector<std::pair<std::uint32_t, F>>;

template <class F>
SparseVec<F> axpy_sub(const SparseVec<F>& a, const F& c, const SparseVec<F>& b) {
  SparseVec<F> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      F v = -(c * b[j].second);
      if (!field_zero(v)) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      F v = a[i].second - c * b[j].second;
      if (!field_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

// Row-echelon basis keyed by pivot (largest index of the row, coefficient 1).
template <class F>
class SpanBasis {
 public:
  // Repeatedly cancels the leading term; true iff v reduced to zero.
  bool reduce(SparseVec<F>& v) const {
    while (!v.empty()) {
      auto it = rows_.find(v.back().first);
      if (it == rows_.end()) return false;
      v = axpy_sub(v, v.back().second, it->second);
    }
    return true;
  }

  // Insert after reduction; returns the new pivot, or nothing if dependent.
  std::optional<std::uint32_t> insert(SparseVec<F> v) {
    if (reduce(v)) return std::nullopt;
    const std::uint32_t pivot = v.back().first;
    const F lead = v.back().second;
    if (!(lead == F(1))) {
      for (auto& [idx, c] : v) c = c / lead;
    }
    rows_.emplace(pivot, std::move(v));
    return pivot;
  }

  std::size_t rows() const { return rows_.size(); }

 private:
  std::map<std::uint32_t, SparseVec<F>> rows_;
};

// Lazily grown span of the degree-d graded component of the ideal.
template <class F>
class IdealSpan {
 public:
  // relation_basis: echelon-reduced degree-2 relation vectors over an
  // alphabet of `alphabet` letters.
  IdealSpan(const std::vector<SparseVec<F>>* relation_basis, int alphabet, int degree)
      : basis_(relation_basis), alphabet_(static_cast<std::uint64_t>(alphabet)),
        degree_(degree) {
    if (degree_ < 2 || basis_->empty()) exhausted_ = true;
  }

  std::uint64_t space_dim() const {
    std::uint64_t d = 1;
    for (int i = 0; i < degree_; ++i) d *= alphabet_;
    return d;
  }

  std::size_t spanners_enumerated() const { return enumerated_; }

  // Membership of v in the full span; extends the echelon basis only as far
  // as the query needs.
  bool contains(SparseVec<F> v) {
    if (span_.reduce(v)) return true;
    while (!exhausted_) {
      SparseVec<F> s = next_spanner();
      auto pivot = span_.insert(std::move(s));
      if (pivot && *pivot == v.back().first) {
        if (span_.reduce(v)) return true;
      }
    }
    return false;
  }

 private:
  const std::vector<SparseVec<F>>* basis_;
  std::uint64_t alphabet_;
  int degree_;
  SpanBasis<F> span_;

  // Enumeration state over (prefix length a, prefix u, relation r, suffix v).
  bool exhausted_ = false;
  int a_ = 0;
  std::uint64_t u_ = 0, v_ = 0;
  std::size_t r_ = 0;
  std::size_t enumerated_ = 0;

  std::uint64_t power(int e) const {
    std::uint64_t p = 1;
    for (int i = 0; i < e; ++i) p *= alphabet_;
    return p;
  }

  SparseVec<F> next_spanner() {
    const int b = degree_ - 2 - a_;
    const std::uint64_t suffix_count = power(b);
    const std::uint64_t middle_count = alphabet_ * alphabet_;
    const auto& rel = (*basis_)[r_];
    SparseVec<F> out;
    out.reserve(rel.size());
    for (const auto& [m, c] : rel)
      out.emplace_back(static_cast<std::uint32_t>((u_ * middle_count + m) * suffix_count + v_), c);
    ++enumerated_;

    // Advance (a, u, r, v) odometer, v fastest.
    if (++v_ >= suffix_count) {
      v_ = 0;
      if (++r_ >= basis_->size()) {
        r_ = 0;
        if (++u_ >= power(a_)) {
          u_ = 0;
          if (++a_ > degree_ - 2) exhausted_ = true;
        }
      }
    }
    return out;
  }
};

// Monomial rank within the degree-d component: the word read as a base-
// (alphabet) number, first letter most significant.
std::uint32_t monomial_rank(const NCMonomial& m, int alphabet);

SparseVec<Rational> poly_vector(const std::map<NCMonomial, Rational>& terms, int alphabet);
SparseVec<ScalarQ> poly_vector_symbolic(const NCPoly& p, int alphabet);

// Machine-readable verification certificate for one identity instance.
struct Certificate {
  std::string identity;
  nlohmann::ordered_json params;
  std::vector<Rational> samples;                       // usable samples, in order
  std::vector<std::string> per_sample;                 // "holds" / "fails"
  std::vector<Rational> skipped_samples;               // pole-skipped
  std::string verdict;                                 // "holds" / "fails"
  std::vector<std::array<std::uint64_t, 2>> system_dims;  // [space dim, spanners] per sample
  std::optional<std::pair<std::uint32_t, std::uint32_t>> failed_entry;

  bool holds() const { return verdict == "holds"; }
};

nlohmann::ordered_json certificate_to_json(const Certificate& c);

// Verifier with per-sample span caches; reuse one instance across the
// certificates of a run so identical linear systems are built once.
class IdealVerifier {
 public:
  IdealVerifier(RelationSet rel, std::vector<Rational> samples);

  const RelationSet& relations() const { return rel_; }
  const std::vector<Rational>& samples() const { return samples_; }

  // p must be homogeneous; degree 0/1 polynomials are members iff zero.
  Certificate certify_poly(const NCPoly& p, const std::string& identity,
                           nlohmann::ordered_json params);

  // Entrywise certification; entries must be homogeneous of equal degree.
  Certificate certify_matrix(const NCTensorOp& m, const std::string& identity,
                             nlohmann::ordered_json params);

 private:
  struct SampleState {
    Rational q0;
    bool usable = true;
    std::vector<SparseVec<Rational>> rel_basis;
    std::map<int, IdealSpan<Rational>> spans;
  };

  RelationSet rel_;
  std::vector<Rational> samples_;
  std::vector<SampleState> states_;
  int alphabet_;

  using Query = std::pair<std::optional<std::pair<std::uint32_t, std::uint32_t>>,
                          const NCPoly*>;

  IdealSpan<Rational>& span_for(SampleState& st, int degree);
  // nullopt on a pole in p's coefficients at this sample.
  std::optional<bool> member_at(SampleState& st, const NCPoly& p);
  Certificate run(const std::string& identity, nlohmann::ordered_json params,
                  const std::vector<Query>& queries, int degree);
};

// One-shot conveniences matching the module surface.
Certificate ideal_member(const NCPoly& p, const RelationSet& rel,
                         const std::vector<Rational>& samples,
                         const std::string& identity = "ideal-member",
                         nlohmann::ordered_json params = {});
Certificate nc_matrix_residual_member(const NCTensorOp& m, const RelationSet& rel,
                                      const std::vector<Rational>& samples,
                                      const std::string& identity = "ideal-member-matrix",
                                      nlohmann::ordered_json params = {});

// Symbolic backend over Q(q); intended for small n and low degree.
bool ideal_member_symbolic(const NCPoly& p, const RelationSet& rel);

}  // namespace qchn
