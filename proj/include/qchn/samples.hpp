// Deterministic admissible q-sample pool.
#pragma once

#include <cstdint>
#include <vector>

#include "qchn/rational.hpp"

namespace qchn {

// Draws distinct rationals a/b with 2 <= a, b <= 50 from a seeded generator,
// rejecting 0 and +-1 (no rational other than these is a root of any k_q).
std::vector<Rational> draw_samples(std::uint64_t seed, int count);

}  // namespace qchn
