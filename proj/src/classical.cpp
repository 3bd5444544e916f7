#include "qchn/classical.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>

#include "qchn/rank.hpp"

namespace qchn {

NumericMatrix NumericMatrix::identity(int dim) {
  NumericMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

bool NumericMatrix::is_zero() const {
  for (const auto& v : a)
    if (v != 0) return false;
  return true;
}

NumericMatrix mat_mul(const NumericMatrix& x, const NumericMatrix& y) {
  NumericMatrix r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int m = 0; m < x.n; ++m) {
      if (x.at(i, m) == 0) continue;
      for (int j = 0; j < x.n; ++j) r.at(i, j) += x.at(i, m) * y.at(m, j);
    }
  return r;
}

NumericMatrix mat_add(const NumericMatrix& x, const NumericMatrix& y) {
  NumericMatrix r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

NumericMatrix mat_sub(const NumericMatrix& x, const NumericMatrix& y) {
  NumericMatrix r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

NumericMatrix mat_scale(const Rational& c, const NumericMatrix& x) {
  NumericMatrix r = x;
  for (auto& v : r.a) v *= c;
  return r;
}

Rational mat_trace(const NumericMatrix& x) {
  Rational t(0);
  for (int i = 0; i < x.n; ++i) t += x.at(i, i);
  return t;
}

Rational mat_max_abs(const NumericMatrix& x) {
  Rational m(0);
  for (const auto& v : x.a) {
    Rational av = abs(v);
    if (av > m) m = av;
  }
  return m;
}

ClassicalSymFun classical_symfun(const NumericMatrix& x, int bound) {
  const int n = x.n;
  ClassicalSymFun f;
  f.s.assign(static_cast<std::size_t>(bound) + 1, Rational(0));
  f.e.assign(static_cast<std::size_t>(bound) + 1, Rational(0));
  f.h.assign(static_cast<std::size_t>(bound) + 1, Rational(0));
  f.s[0] = n;
  f.e[0] = 1;
  f.h[0] = 1;

  NumericMatrix power = NumericMatrix::identity(n);
  for (int k = 1; k <= bound; ++k) {
    power = mat_mul(power, x);
    f.s[static_cast<std::size_t>(k)] = mat_trace(power);
  }

  // Faddeev-LeVerrier: M_1 = X, c_k = Tr(M_k)/k, M_{k+1} = X (M_k - c_k I);
  // e_k = (-1)^(k-1) c_k, zero beyond n.
  NumericMatrix m = x;
  for (int k = 1; k <= std::min(bound, n); ++k) {
    Rational c = mat_trace(m) / k;
    f.e[static_cast<std::size_t>(k)] = (k % 2 == 1) ? c : -c;
    if (k < std::min(bound, n))
      m = mat_mul(x, mat_sub(m, mat_scale(c, NumericMatrix::identity(n))));
  }

  for (int k = 1; k <= bound; ++k) {
    Rational acc(0);
    for (int i = 1; i <= k; ++i)
      acc += f.s[static_cast<std::size_t>(i)] * f.h[static_cast<std::size_t>(k - i)];
    f.h[static_cast<std::size_t>(k)] = acc / k;
  }
  return f;
}

namespace {

std::uint32_t pow_u32(int base, int exp) {
  std::uint64_t p = 1;
  for (int i = 0; i < exp; ++i) p *= static_cast<std::uint64_t>(base);
  if (p > (1u << 30)) throw invalid_argument_error("classical tensor space too large");
  return static_cast<std::uint32_t>(p);
}

void index_digits(std::uint32_t index, int n, int k, int* out) {
  for (int t = k - 1; t >= 0; --t) {
    out[t] = static_cast<int>(index % static_cast<std::uint32_t>(n));
    index /= static_cast<std::uint32_t>(n);
  }
}

RationalTensor permutation_average(int n, int k, bool signed_sum) {
  RationalTensor t;
  t.n = n;
  t.k = k;
  t.dim = pow_u32(n, k);
  std::vector<std::map<std::uint32_t, Rational>> acc(t.dim);

  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  Rational factorial(1);
  for (int i = 2; i <= k; ++i) factorial *= i;
  const Rational weight = Rational(1) / factorial;

  std::vector<int> digits(static_cast<std::size_t>(k));
  std::vector<int> image(static_cast<std::size_t>(k));
  do {
    int inversions = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    const Rational w = (signed_sum && inversions % 2 == 1) ? -weight : weight;
    for (std::uint32_t c = 0; c < t.dim; ++c) {
      index_digits(c, n, k, digits.data());
      for (int i = 0; i < k; ++i)
        image[static_cast<std::size_t>(i)] = digits[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
      std::uint32_t r = 0;
      for (int i = 0; i < k; ++i)
        r = r * static_cast<std::uint32_t>(n) + static_cast<std::uint32_t>(image[static_cast<std::size_t>(i)]);
      auto [it, inserted] = acc[r].try_emplace(c, w);
      if (!inserted) it->second += w;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  t.rows.resize(t.dim);
  for (std::uint32_t r = 0; r < t.dim; ++r)
    for (const auto& [c, v] : acc[r])
      if (v != 0) t.rows[r].emplace_back(c, v);
  return t;
}

// Process-wide cache; the projectors depend only on (n, k, kind).
const RationalTensor& cached_projector(int n, int k, bool signed_sum) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, bool>, RationalTensor> cache;
  std::lock_guard lock(mu);
  auto key = std::make_tuple(n, k, signed_sum);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, permutation_average(n, k, signed_sum)).first;
  return it->second;
}

}  // namespace

RationalTensor classical_antisymmetrizer(int n, int k) {
  return cached_projector(n, k, true);
}

RationalTensor classical_symmetrizer(int n, int k) {
  return cached_projector(n, k, false);
}

Rational classical_projected_trace(const RationalTensor& proj, const NumericMatrix& x) {
  Rational acc(0);
  std::vector<int> rd(static_cast<std::size_t>(proj.k)), cd(static_cast<std::size_t>(proj.k));
  for (std::uint32_t r = 0; r < proj.dim; ++r) {
    if (proj.rows[r].empty()) continue;
    index_digits(r, proj.n, proj.k, rd.data());
    for (const auto& [c, v] : proj.rows[r]) {
      index_digits(c, proj.n, proj.k, cd.data());
      Rational w = v;
      for (int t = 0; t < proj.k; ++t) w *= x.at(cd[static_cast<std::size_t>(t)], rd[static_cast<std::size_t>(t)]);
      acc += w;
    }
  }
  return acc;
}

NumericMatrix classical_traced_power(const RationalTensor& proj, const NumericMatrix& x,
                                     bool keep_last) {
  const int n = proj.n, k = proj.k;
  NumericMatrix out(n);
  const int kept = keep_last ? k - 1 : 0;
  std::vector<int> rd(static_cast<std::size_t>(k)), cd(static_cast<std::size_t>(k));
  for (std::uint32_t r = 0; r < proj.dim; ++r) {
    if (proj.rows[r].empty()) continue;
    index_digits(r, n, k, rd.data());
    for (const auto& [c, v] : proj.rows[r]) {
      index_digits(c, n, k, cd.data());
      // (proj . X^(x)k)[r, (u, j)] contributes when the non-kept digits of r
      // match u; summing over u leaves sum_c proj[r,c] prod X[c_t, r_t] X[c_kept, j].
      Rational w = v;
      for (int t = 0; t < k; ++t) {
        if (t == kept) continue;
        w *= x.at(cd[static_cast<std::size_t>(t)], rd[static_cast<std::size_t>(t)]);
      }
      if (w == 0) continue;
      const int row_idx = rd[static_cast<std::size_t>(kept)];
      for (int j = 0; j < n; ++j) {
        Rational term = w * x.at(cd[static_cast<std::size_t>(kept)], j);
        if (term != 0) out.at(row_idx, j) += term;
      }
    }
  }
  return out;
}

NumericMatrix classical_partial_trace_to_one(const RationalTensor& proj, bool keep_last) {
  const int n = proj.n, k = proj.k;
  NumericMatrix out(n);
  if (k == 1) {
    for (std::uint32_t r = 0; r < proj.dim; ++r)
      for (const auto& [c, v] : proj.rows[r]) out.at(static_cast<int>(r), static_cast<int>(c)) += v;
    return out;
  }
  const int kept = keep_last ? k - 1 : 0;
  std::vector<int> rd(static_cast<std::size_t>(k)), cd(static_cast<std::size_t>(k));
  for (std::uint32_t r = 0; r < proj.dim; ++r) {
    if (proj.rows[r].empty()) continue;
    index_digits(r, n, k, rd.data());
    for (const auto& [c, v] : proj.rows[r]) {
      index_digits(c, n, k, cd.data());
      bool diagonal = true;
      for (int t = 0; t < k && diagonal; ++t)
        if (t != kept && rd[static_cast<std::size_t>(t)] != cd[static_cast<std::size_t>(t)]) diagonal = false;
      if (diagonal)
        out.at(rd[static_cast<std::size_t>(kept)], cd[static_cast<std::size_t>(kept)]) += v;
    }
  }
  return out;
}

int classical_rank(const RationalTensor& t) {
  std::vector<std::vector<Rational>> dense(t.dim, std::vector<Rational>(t.dim, Rational(0)));
  for (std::uint32_t r = 0; r < t.dim; ++r)
    for (const auto& [c, v] : t.rows[r]) dense[r][c] = v;
  return rational_rank(std::move(dense));
}

std::pair<NumericMatrix, NumericMatrix> classical_d_matrices(int n) {
  const RationalTensor an = classical_antisymmetrizer(n, n);
  NumericMatrix d_right = mat_scale(Rational(n), classical_partial_trace_to_one(an, false));
  NumericMatrix d_left = mat_scale(Rational(n), classical_partial_trace_to_one(an, true));
  return {std::move(d_right), std::move(d_left)};
}

ClassicalChnResiduals classical_chn_check(const NumericMatrix& x, int j) {
  const int n = x.n;
  if (j < 1) throw invalid_argument_error("classical_chn_check needs j >= 1");
  ClassicalSymFun f = classical_symfun(x, j);

  NumericMatrix wedge(n), symm(n);
  if (j == 1) {
    wedge = x;
    symm = x;
  } else {
    wedge = classical_traced_power(classical_antisymmetrizer(n, j), x, true);
    symm = classical_traced_power(classical_symmetrizer(n, j), x, true);
  }

  std::vector<NumericMatrix> powers(static_cast<std::size_t>(j) + 1, NumericMatrix::identity(n));
  for (int k = 1; k <= j; ++k)
    powers[static_cast<std::size_t>(k)] = mat_mul(powers[static_cast<std::size_t>(k - 1)], x);

  NumericMatrix e_sum(n), h_sum(n);
  for (int k = 0; k <= j - 1; ++k) {
    const Rational sgn = ((j - k + 1) % 2 == 0) ? Rational(1) : Rational(-1);
    e_sum = mat_add(e_sum, mat_scale(sgn * f.e[static_cast<std::size_t>(k)],
                                     powers[static_cast<std::size_t>(j - k)]));
    h_sum = mat_add(h_sum, mat_scale(f.h[static_cast<std::size_t>(k)],
                                     powers[static_cast<std::size_t>(j - k)]));
  }

  ClassicalChnResiduals res;
  res.le = mat_sub(mat_scale(Rational(j), wedge), e_sum);
  res.le2 = res.le;  // commuting entries: the mirrored sums coincide
  res.le3 = mat_sub(mat_scale(Rational(j), symm), h_sum);
  res.le4 = res.le3;
  return res;
}

Rational classical_elem_sym_tensor(const NumericMatrix& x, int k) {
  if (k == 0) return Rational(1);
  return classical_projected_trace(classical_antisymmetrizer(x.n, k), x);
}

Rational classical_compl_sym_tensor(const NumericMatrix& x, int k) {
  if (k == 0) return Rational(1);
  return classical_projected_trace(classical_symmetrizer(x.n, k), x);
}

Rational specialize_quantum(const NCPoly& p, const NumericMatrix& x, const Rational& q0) {
  Rational acc(0);
  for (const auto& [m, c] : p.terms()) {
    Rational w = c.eval_at(q0);
    for (GenLetter g : m.word) w *= x.at(g / x.n, g % x.n);
    acc += w;
  }
  return acc;
}

NumericMatrix specialize_quantum(const NCTensorOp& m, const NumericMatrix& x,
                                 const Rational& q0) {
  if (m.k() != 1) throw invalid_argument_error("specialize_quantum expects a one-site matrix");
  NumericMatrix out(m.n());
  for (const auto& [key, v] : m.entries())
    out.at(static_cast<int>(TensorOp::key_row(key)), static_cast<int>(TensorOp::key_col(key))) =
        specialize_quantum(v, x, q0);
  return out;
}

ClassicalDemoResult classical_demo(int max_n, int trials, std::uint64_t seed) {
  if (max_n < 1 || trials < 1)
    throw invalid_argument_error("classical_demo needs max_n >= 1 and trials >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim(1, max_n);
  std::uniform_int_distribution<int> numer(-9, 9);
  std::uniform_int_distribution<int> denom(1, 4);

  ClassicalDemoResult result;
  auto trials_json = nlohmann::ordered_json::array();
  for (int t = 0; t < trials; ++t) {
    const int n = dim(rng);
    NumericMatrix x(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) x.at(i, j) = make_rational(numer(rng), denom(rng));

    Rational worst(0);
    bool ok = true;
    ClassicalSymFun f = classical_symfun(x, n + 1);
    for (int j = 1; j <= n + 1; ++j) {
      ClassicalChnResiduals res = classical_chn_check(x, j);
      for (const NumericMatrix* m : {&res.le, &res.le2, &res.le3, &res.le4}) {
        Rational norm = mat_max_abs(*m);
        if (norm > worst) worst = norm;
        if (!m->is_zero()) ok = false;
        ++result.checks;
      }
    }
    // Tensor-trace elementary symmetric functions vs Faddeev-LeVerrier.
    for (int k = 1; k <= n + 1; ++k) {
      if (classical_elem_sym_tensor(x, k) != f.e[static_cast<std::size_t>(k)]) ok = false;
      ++result.checks;
    }
    // Classical Newton identities on the (s, e, h) triple.
    for (int j = 1; j <= n + 1; ++j) {
      Rational lhs = Rational(j) * f.e[static_cast<std::size_t>(j)];
      Rational rhs(0);
      for (int k = 1; k <= j - 1; ++k)
        rhs += (k % 2 == 1 ? Rational(1) : Rational(-1)) *
               f.e[static_cast<std::size_t>(j - k)] * f.s[static_cast<std::size_t>(k)];
      rhs += (j % 2 == 1 ? Rational(1) : Rational(-1)) * f.s[static_cast<std::size_t>(j)];
      if (lhs != rhs) ok = false;
      Rational alt(0);
      for (int k = 0; k <= j; ++k)
        alt += (k % 2 == 0 ? Rational(1) : Rational(-1)) *
               f.h[static_cast<std::size_t>(j - k)] * f.e[static_cast<std::size_t>(k)];
      if (alt != 0) ok = false;
      result.checks += 2;
    }

    if (!ok) result.all_zero = false;
    trials_json.push_back({{"trial", t},
                           {"n", n},
                           {"residual_norm", rational_to_string(worst)},
                           {"ok", ok}});
  }
  result.report["max_n"] = max_n;
  result.report["trials"] = trials;
  result.report["seed"] = seed;
  result.report["checks"] = result.checks;
  result.report["all_zero"] = result.all_zero;
  result.report["per_trial"] = std::move(trials_json);
  return result;
}

}  // namespace qchn
