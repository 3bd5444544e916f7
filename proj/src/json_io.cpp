#include "qchn/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qchn/scalar_parser.hpp"

namespace qchn {

nlohmann::ordered_json tensor_op_to_json(const TensorOp& x) {
  nlohmann::ordered_json j;
  j["n"] = x.n();
  j["k"] = x.k();
  auto entries = nlohmann::ordered_json::array();
  for (const auto& [key, v] : x.entries()) {
    entries.push_back({TensorOp::key_row(key), TensorOp::key_col(key), v.str()});
  }
  j["entries"] = std::move(entries);
  return j;
}

TensorOp tensor_op_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("entries"))
    throw invalid_argument_error("tensor operator JSON needs n, k and entries");
  TensorOp x(j.at("n").get<int>(), j.at("k").get<int>());
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3)
      throw invalid_argument_error("tensor entry must be [row, col, \"scalar\"]");
    std::uint32_t row = e.at(0).get<std::uint32_t>();
    std::uint32_t col = e.at(1).get<std::uint32_t>();
    ScalarQ v = parse_scalar(e.at(2).get<std::string>());
    x.add_entry(row, col, v);
  }
  return x;
}

RMatrixFile load_rmatrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_argument_error("cannot open R-matrix file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw invalid_argument_error("bad JSON in " + path + ": " + e.what());
  }
  RMatrixFile f{tensor_op_from_json(j), std::nullopt};
  if (f.rhat.k() != 2)
    throw invalid_argument_error("R-matrix file must have k = 2");
  if (j.contains("name")) f.name = j.at("name").get<std::string>();
  return f;
}

void save_tensor_op(const TensorOp& x, const std::string& path) {
  write_file_atomic(path, tensor_op_to_json(x).dump(2) + "\n");
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw invalid_argument_error("cannot write file: " + tmp);
    out << contents;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw invalid_argument_error("cannot move report into place: " + path);
}

}  // namespace qchn
