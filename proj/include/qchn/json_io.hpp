// JSON (de)serialization of tensor operators.
//
// Schema: {"n": int, "k": int, "entries": [[row, col, "scalar-expression"], ...]}
// with entries sorted by (row, col) and scalar expressions in the q-expression
// grammar. Indices follow the global convention (factor 1 = most significant
// base-n digit). R-matrix files additionally allow an optional "name".
#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "qchn/tensor_op.hpp"

namespace qchn {

nlohmann::ordered_json tensor_op_to_json(const TensorOp& x);
TensorOp tensor_op_from_json(const nlohmann::json& j);

struct RMatrixFile {
  TensorOp rhat;
  std::optional<std::string> name;
};

RMatrixFile load_rmatrix_file(const std::string& path);
void save_tensor_op(const TensorOp& x, const std::string& path);

// Atomic file write (temp file + rename).
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace qchn
