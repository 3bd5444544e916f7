#include "qchn/samples.hpp"

#include <random>
#include <set>

#include "qchn/errors.hpp"

namespace qchn {

std::vector<Rational> draw_samples(std::uint64_t seed, int count) {
  if (count < 1) throw invalid_argument_error("sample count must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> digits(2, 50);
  std::set<Rational> seen;
  std::vector<Rational> out;
  while (static_cast<int>(out.size()) < count) {
    Rational q0 = make_rational(digits(rng), digits(rng));
    if (q0 == 1) continue;  // a == b
    if (seen.insert(q0).second) out.push_back(q0);
  }
  return out;
}

}  // namespace qchn
