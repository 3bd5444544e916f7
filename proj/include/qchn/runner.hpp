// Command execution behind the CLI: one entry point per subcommand plus the
// aggregate suite, all emitting deterministic JSON reports.
//
// Exit codes: 0 every requested verdict holds; 1 a verification failed (the
// report is still written); 2 usage or input error; 3 arithmetic error
// (q-sample pool exhausted by poles).
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "qchn/errors.hpp"

namespace qchn {

struct RunConfig {
  std::string command;                     // verify-rmatrix | projectors | verify |
                                           // classical-demo | suite
  std::optional<int> standard_n;           // exactly one R-matrix source
  std::optional<std::string> rmatrix_path;
  std::optional<std::string> rmatrix_inline;  // JSON text (python bindings)
  std::string algebra = "rtt";             // verify: rtt | re
  std::string family;                      // verify: chn | newton | ch | inverse |
                                           //         qdet | commute
  std::string variant;                     // per family; empty where none applies
  int j = 1;                               // verify: degree parameter
  int k = 1, l = 2;                        // verify --family commute
  std::string kind = "antisym";            // projectors: antisym | sym
  int upto = 0;                            // projectors: top level (0 = height + 1)
  int sample_count = 3;
  std::uint64_t seed = 20240601;
  int trials = 200;                        // classical-demo
  int classical_max_n = 4;                 // classical-demo
  int max_k = 6;                           // height search cap
  std::optional<std::string> out_path;
};

struct RunResult {
  int exit_code = 0;
  nlohmann::ordered_json report;
};

// Dispatches on config.command, writes the report atomically when out_path
// is set. Usage errors throw invalid_argument_error before any report is
// produced; pole exhaustion throws arithmetic_error.
RunResult run(const RunConfig& config);

// The full default verification grid plus negative controls and the
// classical demo; config.standard_n restricts to one dimension.
RunResult run_suite(const RunConfig& config);

extern const char* const kToolVersion;

}  // namespace qchn
