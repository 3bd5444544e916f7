// Defining quadratic relations of the two quantum matrix algebras.
#pragma once

#include <string>
#include <vector>

#include "qchn/nc_tensor.hpp"

namespace qchn {

enum class AlgebraKind { rtt, re };

std::string algebra_kind_name(AlgebraKind kind);
AlgebraKind algebra_kind_from_name(const std::string& name);

// Homogeneous degree-2 polynomials, each identically zero in the quotient;
// the list spans the full space of defining relations.
struct RelationSet {
  AlgebraKind kind;
  int n;
  std::vector<NCPoly> relations;
};

// Entries of R T1 T2 - T1 T2 R on V (x) V, zero entries dropped.
RelationSet rtt_relations(const TensorOp& rhat);

// Entries of R L1 R L1 - L1 R L1 R on V (x) V.
RelationSet re_relations(const TensorOp& rhat);

}  // namespace qchn
