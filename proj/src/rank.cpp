#include "qchn/rank.hpp"

namespace qchn {

std::vector<std::vector<Rational>> specialize(const TensorOp& x, const Rational& q0) {
  std::vector<std::vector<Rational>> m(
      x.dim(), std::vector<Rational>(x.dim(), Rational(0)));
  for (const auto& [key, v] : x.entries())
    m[TensorOp::key_row(key)][TensorOp::key_col(key)] = v.eval_at(q0);
  return m;
}

int rational_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  // Clear denominators per row; rank is unchanged.
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer l(1);
    for (const auto& v : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) {
      Rational scaled = m[i][j] * Rational(l);
      a[i][j] = scaled.get_num();
    }
  }
  // Bareiss fraction-free elimination with row/column pivot search.
  Integer prev(1);
  std::size_t rank = 0;
  std::size_t pr = 0;
  for (std::size_t col = 0; col < cols && pr < rows; ++col) {
    std::size_t piv = pr;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[pr]);
    for (std::size_t i = pr + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Integer t = a[pr][col] * a[i][j] - a[i][col] * a[pr][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[pr][col];
    ++pr;
    ++rank;
  }
  return static_cast<int>(rank);
}

int generic_rank(const TensorOp& x, const std::vector<Rational>& samples,
                 std::vector<Rational>* skipped) {
  int best = -1;
  for (const Rational& q0 : samples) {
    try {
      int r = rational_rank(specialize(x, q0));
      if (r > best) best = r;
    } catch (const arithmetic_error&) {
      if (skipped) skipped->push_back(q0);
    }
  }
  if (best < 0)
    throw arithmetic_error("generic_rank: every sample hit a pole");
  return best;
}

}  // namespace qchn
