// qchn command-line tool: R-matrix certification, projector reports,
// identity verification, classical demos.
#include <iostream>

#include "CLI11.hpp"
#include "qchn/runner.hpp"

namespace {

void add_rmatrix_source(CLI::App* cmd, qchn::RunConfig& config) {
  auto* standard = cmd->add_option("--standard", "standard R-matrix of dimension N");
  auto* file = cmd->add_option("--rmatrix", "R-matrix JSON file");
  standard->excludes(file);
  standard->each([&config](const std::string& v) { config.standard_n = std::stoi(v); });
  file->each([&config](const std::string& v) { config.rmatrix_path = v; });
}

void add_common(CLI::App* cmd, qchn::RunConfig& config) {
  cmd->add_option("--samples", config.sample_count, "number of q-samples (>= 3)");
  cmd->add_option("--seed", config.seed, "seed for the q-sample pool");
  cmd->add_option("--max-k", config.max_k, "height search cap");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of Cayley-Hamilton-Newton identity families "
               "for quantum matrix algebras"};
  app.require_subcommand(1);
  qchn::RunConfig config;

  auto* vr = app.add_subcommand("verify-rmatrix",
                                "certify the Yang-Baxter and Hecke conditions");
  add_rmatrix_source(vr, config);
  add_common(vr, config);
  vr->add_option("--out", "report file")->each([&](const std::string& v) {
    config.out_path = v;
  });

  auto* pr = app.add_subcommand("projectors", "build and report the projector towers");
  add_rmatrix_source(pr, config);
  add_common(pr, config);
  pr->add_option("--kind", config.kind, "antisym | sym");
  pr->add_option("--upto", config.upto, "top level to build (default height + 1)");
  pr->add_option("--report", "report file")->each([&](const std::string& v) {
    config.out_path = v;
  });

  auto* ve = app.add_subcommand("verify", "verify one identity instance");
  add_rmatrix_source(ve, config);
  add_common(ve, config);
  ve->add_option("--algebra", config.algebra, "rtt | re");
  ve->add_option("--family", config.family,
                 "chn | newton | ch | inverse | qdet | commute")
      ->required();
  ve->add_option("--variant", config.variant, "identity variant within the family");
  ve->add_option("--j", config.j, "degree parameter");
  ve->add_option("--k", config.k, "first index for --family commute");
  ve->add_option("--l", config.l, "second index for --family commute");
  ve->add_option("--out", "certificate file")->each([&](const std::string& v) {
    config.out_path = v;
  });

  auto* cd = app.add_subcommand("classical-demo",
                                "randomized classical identity checks");
  cd->add_option("--n", config.classical_max_n, "maximum matrix dimension");
  cd->add_option("--trials", config.trials, "number of random matrices");
  cd->add_option("--seed", config.seed, "random seed");
  cd->add_option("--out", "report file")->each([&](const std::string& v) {
    config.out_path = v;
  });

  auto* su = app.add_subcommand("suite",
                                "full default verification grid plus negative controls");
  add_rmatrix_source(su, config);
  add_common(su, config);
  su->add_option("--out", "report file")->each([&](const std::string& v) {
    config.out_path = v;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  config.command = app.get_subcommands().front()->get_name();
  try {
    qchn::RunResult result = qchn::run(config);
    std::cout << result.report.dump(2) << std::endl;
    return result.exit_code;
  } catch (const qchn::invalid_argument_error& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  } catch (const qchn::parse_error& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  } catch (const qchn::arithmetic_error& e) {
    std::cerr << "arithmetic error: " << e.what() << std::endl;
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << std::endl;
    return 3;
  }
}
