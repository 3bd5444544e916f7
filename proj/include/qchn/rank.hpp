// Exact rank of specialized operators via fraction-free elimination.
#pragma once

#include <vector>

#include "qchn/tensor_op.hpp"

namespace qchn {

// Dense rational matrix of x's entries at q = q0; throws on a pole.
std::vector<std::vector<Rational>> specialize(const TensorOp& x, const Rational& q0);

// Exact rank by Bareiss elimination (denominators cleared row-wise first).
int rational_rank(std::vector<std::vector<Rational>> m);

// Max over samples of the exact rank at that sample. Samples hitting a pole
// are skipped and appended to *skipped when given; throws arithmetic_error
// if every sample fails.
int generic_rank(const TensorOp& x, const std::vector<Rational>& samples,
                 std::vector<Rational>* skipped = nullptr);

}  // namespace qchn
