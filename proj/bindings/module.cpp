// Python bindings for the qchn core: exact q-scalars, R-matrix tools and
// the verification commands, with reports surfaced as plain dicts.
#include <pybind11/pybind11.h>

#include "qchn/json_io.hpp"
#include "qchn/rmatrix.hpp"
#include "qchn/runner.hpp"
#include "qchn/scalar_parser.hpp"

namespace py = pybind11;
using namespace qchn;

namespace {

py::object json_to_py(const nlohmann::ordered_json& j) {
  switch (j.type()) {
    case nlohmann::ordered_json::value_t::null:
      return py::none();
    case nlohmann::ordered_json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::ordered_json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case nlohmann::ordered_json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case nlohmann::ordered_json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::ordered_json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::ordered_json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::ordered_json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
      return out;
    }
    default:
      return py::none();
  }
}

// Accepts None, an integer (standard R-matrix), a path string, or a dict in
// the tensor-operator JSON schema.
void set_rmatrix_source(RunConfig& config, const py::object& standard,
                        const py::object& rmatrix) {
  if (!standard.is_none()) config.standard_n = standard.cast<int>();
  if (rmatrix.is_none()) return;
  if (py::isinstance<py::str>(rmatrix)) {
    config.rmatrix_path = rmatrix.cast<std::string>();
  } else {
    py::object dumps = py::module_::import("json").attr("dumps");
    config.rmatrix_inline = dumps(rmatrix).cast<std::string>();
  }
}

py::dict run_to_py(const RunConfig& config) {
  RunResult result = run(config);
  py::dict out = json_to_py(result.report);
  out["exit_code"] = result.exit_code;
  return out;
}

}  // namespace

PYBIND11_MODULE(qchn, m) {
  m.doc() = "exact verification of Cayley-Hamilton-Newton identity families "
            "for quantum matrix algebras";
  m.attr("__version__") = kToolVersion;

  py::register_exception<invalid_argument_error>(m, "InvalidArgumentError",
                                                 PyExc_ValueError);
  py::register_exception<parse_error>(m, "ScalarParseError", PyExc_ValueError);
  py::register_exception<arithmetic_error>(m, "ExactArithmeticError",
                                           PyExc_ArithmeticError);

  py::class_<ScalarQ>(m, "Scalar")
      .def(py::init([](const std::string& text) { return parse_scalar(text); }),
           py::arg("text"))
      .def("__str__", &ScalarQ::str)
      .def("__repr__", [](const ScalarQ& s) { return "Scalar('" + s.str() + "')"; })
      .def("__eq__", [](const ScalarQ& a, const ScalarQ& b) { return a == b; })
      .def("__add__", [](const ScalarQ& a, const ScalarQ& b) { return a + b; })
      .def("__sub__", [](const ScalarQ& a, const ScalarQ& b) { return a - b; })
      .def("__mul__", [](const ScalarQ& a, const ScalarQ& b) { return a * b; })
      .def("__truediv__", [](const ScalarQ& a, const ScalarQ& b) { return a / b; })
      .def("__neg__", [](const ScalarQ& a) { return -a; })
      .def("is_zero", &ScalarQ::is_zero)
      .def("is_polynomial", &ScalarQ::is_polynomial)
      .def(
          "eval_at",
          [](const ScalarQ& s, const std::string& q0) {
            return rational_to_string(s.eval_at(rational_from_string(q0)));
          },
          py::arg("q0"), "exact evaluation at a rational q0 given as 'p' or 'p/q'");

  m.def("parse_scalar", &parse_scalar, py::arg("text"));
  m.def("qnum", &qnum, py::arg("k"), "the q-integer k_q as a Scalar");

  m.def(
      "standard_rhat",
      [](int n) { return json_to_py(tensor_op_to_json(standard_rhat(n))); },
      py::arg("n"));
  m.def(
      "permutation_op",
      [](int n) { return json_to_py(tensor_op_to_json(permutation_op(n))); },
      py::arg("n"));

  m.def(
      "verify_rmatrix",
      [](py::object standard, py::object rmatrix, int samples, std::uint64_t seed,
         int max_k) {
        RunConfig c;
        c.command = "verify-rmatrix";
        set_rmatrix_source(c, standard, rmatrix);
        c.sample_count = samples;
        c.seed = seed;
        c.max_k = max_k;
        return run_to_py(c);
      },
      py::arg("standard") = py::none(), py::arg("rmatrix") = py::none(),
      py::arg("samples") = 3, py::arg("seed") = 20240601, py::arg("max_k") = 6);

  m.def(
      "projectors",
      [](py::object standard, py::object rmatrix, const std::string& kind, int upto,
         int samples, std::uint64_t seed) {
        RunConfig c;
        c.command = "projectors";
        set_rmatrix_source(c, standard, rmatrix);
        c.kind = kind;
        c.upto = upto;
        c.sample_count = samples;
        c.seed = seed;
        return run_to_py(c);
      },
      py::arg("standard") = py::none(), py::arg("rmatrix") = py::none(),
      py::arg("kind") = "antisym", py::arg("upto") = 0, py::arg("samples") = 3,
      py::arg("seed") = 20240601);

  m.def(
      "verify",
      [](py::object standard, py::object rmatrix, const std::string& algebra,
         const std::string& family, const std::string& variant, int j, int k, int l,
         int samples, std::uint64_t seed) {
        RunConfig c;
        c.command = "verify";
        set_rmatrix_source(c, standard, rmatrix);
        c.algebra = algebra;
        c.family = family;
        c.variant = variant;
        c.j = j;
        c.k = k;
        c.l = l;
        c.sample_count = samples;
        c.seed = seed;
        return run_to_py(c);
      },
      py::arg("standard") = py::none(), py::arg("rmatrix") = py::none(),
      py::arg("algebra") = "rtt", py::arg("family") = "chn", py::arg("variant") = "le",
      py::arg("j") = 1, py::arg("k") = 1, py::arg("l") = 2, py::arg("samples") = 3,
      py::arg("seed") = 20240601);

  m.def(
      "classical_demo",
      [](int n, int trials, std::uint64_t seed) {
        RunConfig c;
        c.command = "classical-demo";
        c.classical_max_n = n;
        c.trials = trials;
        c.seed = seed;
        return run_to_py(c);
      },
      py::arg("n") = 4, py::arg("trials") = 200, py::arg("seed") = 20240601);

  m.def(
      "suite",
      [](py::object standard, int samples, std::uint64_t seed) {
        RunConfig c;
        c.command = "suite";
        if (!standard.is_none()) c.standard_n = standard.cast<int>();
        c.sample_count = samples;
        c.seed = seed;
        return run_to_py(c);
      },
      py::arg("standard") = py::none(), py::arg("samples") = 3,
      py::arg("seed") = 20240601);
}
