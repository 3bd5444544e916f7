#include "qchn/runner.hpp"

#include <algorithm>

#include "qchn/classical.hpp"
#include "qchn/ideal.hpp"
#include "qchn/identities.hpp"
#include "qchn/json_io.hpp"
#include "qchn/rank.hpp"
#include "qchn/samples.hpp"

namespace qchn {

const char* const kToolVersion = "0.1.0";

namespace {

using nlohmann::ordered_json;

ordered_json config_json(const RunConfig& c) {
  ordered_json j;
  j["command"] = c.command;
  if (c.standard_n) j["standard"] = *c.standard_n;
  if (c.rmatrix_path) j["rmatrix"] = *c.rmatrix_path;
  j["algebra"] = c.algebra;
  if (!c.family.empty()) j["family"] = c.family;
  if (!c.variant.empty()) j["variant"] = c.variant;
  j["j"] = c.j;
  j["k"] = c.k;
  j["l"] = c.l;
  j["kind"] = c.kind;
  j["upto"] = c.upto;
  j["samples"] = c.sample_count;
  j["seed"] = c.seed;
  j["trials"] = c.trials;
  j["classical_max_n"] = c.classical_max_n;
  j["max_k"] = c.max_k;
  return j;
}

struct LoadedRMatrix {
  TensorOp rhat;
  std::string source;
};

LoadedRMatrix load_rhat(const RunConfig& c) {
  const int sources = (c.standard_n ? 1 : 0) + (c.rmatrix_path ? 1 : 0) +
                      (c.rmatrix_inline ? 1 : 0);
  if (sources > 1)
    throw invalid_argument_error("R-matrix sources are mutually exclusive");
  if (c.standard_n) {
    if (*c.standard_n < 1)
      throw invalid_argument_error("--standard needs n >= 1");
    return {standard_rhat(*c.standard_n), "standard-" + std::to_string(*c.standard_n)};
  }
  if (c.rmatrix_path) {
    RMatrixFile f = load_rmatrix_file(*c.rmatrix_path);
    return {std::move(f.rhat), f.name.value_or(*c.rmatrix_path)};
  }
  if (c.rmatrix_inline) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(*c.rmatrix_inline);
    } catch (const nlohmann::json::exception& e) {
      throw invalid_argument_error(std::string("bad inline R-matrix JSON: ") + e.what());
    }
    TensorOp rhat = tensor_op_from_json(j);
    if (rhat.k() != 2) throw invalid_argument_error("R-matrix must have k = 2");
    std::string name = j.contains("name") ? j["name"].get<std::string>() : "inline";
    return {std::move(rhat), std::move(name)};
  }
  throw invalid_argument_error("an R-matrix source (--standard or --rmatrix) is required");
}

ordered_json entry_base(const std::string& identity, ordered_json params, bool holds) {
  ordered_json e;
  e["identity"] = identity;
  e["params"] = std::move(params);
  e["verdict"] = holds ? "holds" : "fails";
  return e;
}

ordered_json residual_coords(const TensorOp& residual, std::size_t cap = 12) {
  auto arr = ordered_json::array();
  std::size_t count = 0;
  for (const auto& [key, v] : residual.entries()) {
    if (count++ >= cap) break;
    arr.push_back({TensorOp::key_row(key), TensorOp::key_col(key), v.str()});
  }
  return arr;
}

// YBE / Hecke / height / D-trace / classical-limit entries for one R-matrix.
// Returns the certified bundle when everything passes.
std::optional<HeckeRMatrix> rmatrix_entries(const LoadedRMatrix& in, int max_k,
                                            std::vector<ordered_json>& out) {
  const std::string prefix = "rmatrix[" + in.source + "]/";
  ordered_json params{{"n", in.rhat.n()}, {"source", in.source}};
  RMatrixCheck check = check_rmatrix(in.rhat);

  ordered_json ybe = entry_base(prefix + "ybe", params, check.ybe_residual.is_zero());
  if (!check.ybe_residual.is_zero())
    ybe["residual_entries"] = residual_coords(check.ybe_residual);
  out.push_back(std::move(ybe));

  ordered_json hecke = entry_base(prefix + "hecke", params, check.hecke_residual.is_zero());
  if (!check.hecke_residual.is_zero())
    hecke["residual_entries"] = residual_coords(check.hecke_residual);
  out.push_back(std::move(hecke));

  if (!check.ok()) return std::nullopt;

  std::optional<HeckeRMatrix> certified;
  try {
    certified = certify_rmatrix(in.rhat, max_k);
  } catch (const arithmetic_error& e) {
    ordered_json height = entry_base(prefix + "height", params, false);
    height["error"] = e.what();
    out.push_back(std::move(height));
    return std::nullopt;
  }

  ordered_json height_params = params;
  height_params["height"] = certified->height;
  out.push_back(entry_base(prefix + "height", height_params, true));

  const ScalarQ expected = qnum(certified->height) * ScalarQ::q_power(-certified->height);
  const bool traces_ok = full_trace(certified->d_right) == expected &&
                         full_trace(certified->d_left) == expected;
  ordered_json dtr = entry_base(prefix + "d-traces", params, traces_ok);
  dtr["trace"] = expected.str();
  out.push_back(std::move(dtr));

  // Classical limit: R specializes to the flip at q = 1.
  bool classical_ok = true;
  std::string classical_note;
  try {
    const TensorOp flip = permutation_op(in.rhat.n());
    for (std::uint32_t r = 0; r < in.rhat.dim() && classical_ok; ++r)
      for (std::uint32_t c = 0; c < in.rhat.dim() && classical_ok; ++c)
        if (in.rhat.entry(r, c).eval_at(Rational(1)) != flip.entry(r, c).eval_at(Rational(1)))
          classical_ok = false;
  } catch (const arithmetic_error& e) {
    classical_ok = false;
    classical_note = e.what();
  }
  ordered_json cl = entry_base(prefix + "classical-limit", params, classical_ok);
  if (!classical_note.empty()) cl["error"] = classical_note;
  out.push_back(std::move(cl));

  return certified;
}

void projector_entries(HeckeContext& ctx, ProjectorKind kind, int upto,
                       const std::vector<Rational>& samples,
                       std::vector<ordered_json>& out) {
  const std::string kind_name = kind == ProjectorKind::antisymmetrizer ? "antisym" : "sym";
  for (int k = 1; k <= upto; ++k) {
    TensorOp level = kind == ProjectorKind::antisymmetrizer ? ctx.anti(k) : ctx.sym(k);
    const bool idempotent = compose(level, level) == level;
    ordered_json e = entry_base("projectors[" + kind_name + "]/level-" + std::to_string(k),
                                {{"n", ctx.n()}, {"k", k}, {"kind", kind_name}}, idempotent);
    e["trace"] = full_trace(level).str();
    if (level.is_zero()) {
      e["rank"] = 0;
    } else {
      std::vector<Rational> skipped;
      e["rank"] = generic_rank(level, samples, &skipped);
      if (!skipped.empty()) {
        auto sk = ordered_json::array();
        for (const auto& s : skipped) sk.push_back(rational_to_string(s));
        e["skipped_samples"] = std::move(sk);
      }
    }
    e["idempotent"] = idempotent;
    out.push_back(std::move(e));
  }
}

struct VerifyTask {
  std::string identity;
  ordered_json params;
  AlgebraKind algebra;
  std::optional<NCTensorOp> matrix;
  std::optional<NCPoly> poly;
  std::string expected = "holds";
};

VerifyTask matrix_task(std::string identity, ordered_json params, AlgebraKind alg,
                       NCTensorOp m, std::string expected = "holds") {
  return VerifyTask{std::move(identity), std::move(params), alg, std::move(m),
                    std::nullopt, std::move(expected)};
}

VerifyTask poly_task(std::string identity, ordered_json params, AlgebraKind alg, NCPoly p,
                     std::string expected = "holds") {
  return VerifyTask{std::move(identity), std::move(params), alg, std::nullopt,
                    std::move(p), std::move(expected)};
}

std::string tag(int n, int j) {
  return "[n=" + std::to_string(n) + ",j=" + std::to_string(j) + "]";
}

// The per-R default grid: every identity family, j up to min(4, height+1)
// for the RTT families and min(3, height+1) for the RE family.
void default_grid(HeckeContext& ctx, std::vector<VerifyTask>& tasks) {
  const int n = ctx.n();
  const int jmax = std::min(4, ctx.height() + 1);
  for (int j = 1; j <= jmax; ++j) {
    for (auto v : {ChnVariant::le, ChnVariant::le2, ChnVariant::le3, ChnVariant::le4})
      tasks.push_back(matrix_task(
          "rtt/chn/" + chn_variant_name(v) + tag(n, j),
          {{"n", n}, {"j", j}, {"variant", chn_variant_name(v)}}, AlgebraKind::rtt,
          chn_residual(ctx, j, v)));
    for (auto v : {NewtonVariant::qnewton, NewtonVariant::qnewton2, NewtonVariant::qnewton3})
      tasks.push_back(poly_task(
          "rtt/newton/" + newton_variant_name(v) + tag(n, j),
          {{"n", n}, {"j", j}, {"variant", newton_variant_name(v)}}, AlgebraKind::rtt,
          newton_residual(ctx, j, v)));
  }
  for (auto v : {ChVariant::hc1, ChVariant::hc2})
    tasks.push_back(matrix_task("rtt/ch/" + ch_variant_name(v) + tag(n, ctx.height()),
                                {{"n", n}, {"variant", ch_variant_name(v)}},
                                AlgebraKind::rtt, ch_residual(ctx, v)));
  tasks.push_back(matrix_task("rtt/qdet" + tag(n, ctx.height()), {{"n", n}},
                              AlgebraKind::rtt, qdet_residual(ctx)));
  for (int j = 1; j <= 3; ++j)
    for (auto v : {InvVariant::inv1, InvVariant::inv2, InvVariant::inv3, InvVariant::inv4})
      tasks.push_back(matrix_task(
          "rtt/inverse/" + inv_variant_name(v) + tag(n, j),
          {{"n", n}, {"j", j}, {"variant", inv_variant_name(v)}}, AlgebraKind::rtt,
          inverse_residual(ctx, j, v)));
  for (auto [k, l] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}})
    tasks.push_back(poly_task(
        "rtt/commute[n=" + std::to_string(n) + ",k=" + std::to_string(k) +
            ",l=" + std::to_string(l) + "]",
        {{"n", n}, {"k", k}, {"l", l}}, AlgebraKind::rtt,
        commutativity_residual(ctx, k, l)));
  const int re_jmax = std::min(3, ctx.height() + 1);
  for (int j = 1; j <= re_jmax; ++j)
    for (auto v : {ReVariant::wedge, ReVariant::sym})
      tasks.push_back(matrix_task(
          "re/chn/" + re_variant_name(v) + tag(n, j),
          {{"n", n}, {"j", j}, {"variant", re_variant_name(v)}}, AlgebraKind::re,
          re_chn_residual(ctx, j, v)));
}

// Deliberately wrong constructions; every one must FAIL.
void negative_controls(HeckeContext& ctx, std::vector<VerifyTask>& tasks) {
  const int n = ctx.n();
  tasks.push_back(matrix_task("control/rtt/chn/le-sigma-side" + tag(n, 2),
                              {{"n", n}, {"j", 2}}, AlgebraKind::rtt,
                              chn_residual(ctx, 2, ChnVariant::le, /*flip=*/true),
                              "fails"));
  tasks.push_back(matrix_task("control/rtt/inverse/inv1-no-q-factor" + tag(n, 2),
                              {{"n", n}, {"j", 2}}, AlgebraKind::rtt,
                              inverse_residual(ctx, 2, InvVariant::inv1, /*drop=*/true),
                              "fails"));
  tasks.push_back(matrix_task("control/rtt/ch/hc1-swapped-d" + tag(n, ctx.height()),
                              {{"n", n}}, AlgebraKind::rtt,
                              ch_residual(ctx, ChVariant::hc1, /*swap_d=*/true), "fails"));
  tasks.push_back(poly_task("control/rtt/newton/qnewton-wrong-sign" + tag(n, 2),
                            {{"n", n}, {"j", 2}}, AlgebraKind::rtt,
                            newton_residual(ctx, 2, NewtonVariant::qnewton, /*wrong=*/true),
                            "fails"));
  // Quantum determinant with the wrong scalar normalization.
  {
    const int h = ctx.height();
    const TensorOp ah = ctx.anti(h);
    NCTensorOp wrong = nc_sub(
        nc_compose(ah, ctx.chain(h)),
        nc_scale(ScalarQ::q_power(1 - h),
                 nc_right_mul(nc_from_scalar_op(ah), ctx.elem_sym(h))));
    tasks.push_back(matrix_task("control/rtt/qdet-wrong-normalization" + tag(n, h),
                                {{"n", n}}, AlgebraKind::rtt, std::move(wrong), "fails"));
  }
  // Tr T does not commute with a single generator.
  {
    NCPoly g = NCPoly::generator(1);  // T^1_2
    NCPoly p = ctx.power_sum(1) * g - g * ctx.power_sum(1);
    tasks.push_back(poly_task("control/rtt/commute-with-generator" + tag(n, 2),
                              {{"n", n}}, AlgebraKind::rtt, std::move(p), "fails"));
  }
  tasks.push_back(matrix_task(
      "control/re/chn/wedge-wrong-sign" + tag(n, 2), {{"n", n}, {"j", 2}}, AlgebraKind::re,
      re_chn_residual(ctx, 2, ReVariant::wedge, /*flip=*/false, /*wrong_sign=*/true),
      "fails"));
}

// Runs the verify tasks of one context, appending certificate entries.
void run_tasks(HeckeContext& ctx, std::vector<VerifyTask>& tasks,
               const std::vector<Rational>& samples, std::vector<ordered_json>& out) {
  std::sort(tasks.begin(), tasks.end(),
            [](const VerifyTask& a, const VerifyTask& b) { return a.identity < b.identity; });
  IdealVerifier rtt(ctx.relations(AlgebraKind::rtt), samples);
  IdealVerifier re(ctx.relations(AlgebraKind::re), samples);
  for (const VerifyTask& task : tasks) {
    IdealVerifier& verifier = task.algebra == AlgebraKind::rtt ? rtt : re;
    Certificate cert = task.matrix
                           ? verifier.certify_matrix(*task.matrix, task.identity, task.params)
                           : verifier.certify_poly(*task.poly, task.identity, task.params);
    ordered_json e = certificate_to_json(cert);
    e["algebra"] = algebra_kind_name(task.algebra);
    if (task.expected != "holds") e["expected"] = task.expected;
    out.push_back(std::move(e));
  }
}

bool entry_ok(const ordered_json& e) {
  const std::string expected = e.contains("expected") ? e["expected"].get<std::string>()
                                                      : std::string("holds");
  return e["verdict"].get<std::string>() == expected;
}

RunResult finish(const RunConfig& config, std::vector<ordered_json> entries) {
  std::sort(entries.begin(), entries.end(), [](const ordered_json& a, const ordered_json& b) {
    return a["identity"].get<std::string>() < b["identity"].get<std::string>();
  });
  bool ok = true;
  for (const auto& e : entries)
    if (!entry_ok(e)) ok = false;
  RunResult result;
  result.report["tool_version"] = kToolVersion;
  result.report["config"] = config_json(config);
  result.report["certificates"] = entries;
  result.report["verdict"] = ok ? "pass" : "fail";
  result.exit_code = ok ? 0 : 1;
  if (config.out_path)
    write_file_atomic(*config.out_path, result.report.dump(2) + "\n");
  return result;
}

RunResult run_verify_rmatrix(const RunConfig& config) {
  LoadedRMatrix in = load_rhat(config);
  std::vector<ordered_json> entries;
  rmatrix_entries(in, config.max_k, entries);
  return finish(config, std::move(entries));
}

RunResult run_projectors(const RunConfig& config) {
  LoadedRMatrix in = load_rhat(config);
  if (config.kind != "antisym" && config.kind != "sym")
    throw invalid_argument_error("--kind must be antisym or sym");
  std::vector<ordered_json> entries;
  auto certified = rmatrix_entries(in, config.max_k, entries);
  if (certified) {
    HeckeContext ctx(*certified);
    const int upto = config.upto > 0 ? config.upto : ctx.height() + 1;
    const auto samples = draw_samples(config.seed, config.sample_count);
    projector_entries(ctx,
                      config.kind == "antisym" ? ProjectorKind::antisymmetrizer
                                               : ProjectorKind::symmetrizer,
                      upto, samples, entries);
  }
  return finish(config, std::move(entries));
}

RunResult run_verify(const RunConfig& config) {
  if (config.sample_count < 3)
    throw invalid_argument_error("verification needs --samples >= 3");
  LoadedRMatrix in = load_rhat(config);
  const AlgebraKind algebra = algebra_kind_from_name(config.algebra);

  std::vector<ordered_json> entries;
  auto certified = rmatrix_entries(in, config.max_k, entries);
  if (!certified) return finish(config, std::move(entries));

  HeckeContext ctx(*certified);
  const int n = ctx.n();
  const int j = config.j;
  std::vector<VerifyTask> tasks;

  if (algebra == AlgebraKind::re) {
    if (config.family != "chn")
      throw invalid_argument_error("the RE algebra supports --family chn (wedge | sym)");
    ReVariant v = config.variant == "wedge" ? ReVariant::wedge
                : config.variant == "sym"   ? ReVariant::sym
                : throw invalid_argument_error("RE variant must be wedge or sym");
    tasks.push_back(matrix_task("re/chn/" + config.variant + tag(n, j),
                                {{"n", n}, {"j", j}, {"variant", config.variant}}, algebra,
                                re_chn_residual(ctx, j, v)));
  } else if (config.family == "chn") {
    ChnVariant v = config.variant == "le"    ? ChnVariant::le
                 : config.variant == "le2"   ? ChnVariant::le2
                 : config.variant == "le3"   ? ChnVariant::le3
                 : config.variant == "le4"   ? ChnVariant::le4
                 : throw invalid_argument_error("chn variant must be le | le2 | le3 | le4");
    tasks.push_back(matrix_task("rtt/chn/" + config.variant + tag(n, j),
                                {{"n", n}, {"j", j}, {"variant", config.variant}}, algebra,
                                chn_residual(ctx, j, v)));
  } else if (config.family == "newton") {
    NewtonVariant v = config.variant == "qnewton"  ? NewtonVariant::qnewton
                    : config.variant == "qnewton2" ? NewtonVariant::qnewton2
                    : config.variant == "qnewton3" ? NewtonVariant::qnewton3
                    : throw invalid_argument_error(
                          "newton variant must be qnewton | qnewton2 | qnewton3");
    tasks.push_back(poly_task("rtt/newton/" + config.variant + tag(n, j),
                              {{"n", n}, {"j", j}, {"variant", config.variant}}, algebra,
                              newton_residual(ctx, j, v)));
  } else if (config.family == "ch") {
    ChVariant v = config.variant == "hc1"   ? ChVariant::hc1
                : config.variant == "hc2"   ? ChVariant::hc2
                : throw invalid_argument_error("ch variant must be hc1 or hc2");
    tasks.push_back(matrix_task("rtt/ch/" + config.variant + tag(n, ctx.height()),
                                {{"n", n}, {"variant", config.variant}}, algebra,
                                ch_residual(ctx, v)));
  } else if (config.family == "inverse") {
    InvVariant v = config.variant == "inv1" ? InvVariant::inv1
                 : config.variant == "inv2" ? InvVariant::inv2
                 : config.variant == "inv3" ? InvVariant::inv3
                 : config.variant == "inv4" ? InvVariant::inv4
                 : throw invalid_argument_error(
                       "inverse variant must be inv1 | inv2 | inv3 | inv4");
    tasks.push_back(matrix_task("rtt/inverse/" + config.variant + tag(n, j),
                                {{"n", n}, {"j", j}, {"variant", config.variant}}, algebra,
                                inverse_residual(ctx, j, v)));
  } else if (config.family == "qdet") {
    tasks.push_back(matrix_task("rtt/qdet" + tag(n, ctx.height()), {{"n", n}}, algebra,
                                qdet_residual(ctx)));
  } else if (config.family == "commute") {
    tasks.push_back(poly_task(
        "rtt/commute[n=" + std::to_string(n) + ",k=" + std::to_string(config.k) +
            ",l=" + std::to_string(config.l) + "]",
        {{"n", n}, {"k", config.k}, {"l", config.l}}, algebra,
        commutativity_residual(ctx, config.k, config.l)));
  } else {
    throw invalid_argument_error("unknown family: " + config.family);
  }

  const auto samples = draw_samples(config.seed, config.sample_count);
  run_tasks(ctx, tasks, samples, entries);
  return finish(config, std::move(entries));
}

RunResult run_classical_demo(const RunConfig& config) {
  ClassicalDemoResult demo =
      classical_demo(config.classical_max_n, config.trials, config.seed);
  ordered_json e = entry_base("classical/chn-demo",
                              {{"max_n", config.classical_max_n},
                               {"trials", config.trials},
                               {"seed", config.seed}},
                              demo.all_zero);
  e["report"] = demo.report;
  std::vector<ordered_json> entries{std::move(e)};
  return finish(config, std::move(entries));
}

}  // namespace

RunResult run_suite(const RunConfig& config) {
  if (config.sample_count < 3)
    throw invalid_argument_error("verification needs --samples >= 3");
  std::vector<int> dims;
  if (config.standard_n) {
    if (*config.standard_n < 1) throw invalid_argument_error("--standard needs n >= 1");
    dims.push_back(*config.standard_n);
  } else {
    dims = {1, 2, 3};
  }
  if (dims.empty()) throw invalid_argument_error("empty suite grid");
  const auto samples = draw_samples(config.seed, config.sample_count);

  std::vector<ordered_json> entries;
  for (int n : dims) {
    LoadedRMatrix in{standard_rhat(n), "standard-" + std::to_string(n)};
    auto certified = rmatrix_entries(in, config.max_k, entries);
    if (!certified) continue;
    HeckeContext ctx(*certified);
    projector_entries(ctx, ProjectorKind::antisymmetrizer, ctx.height() + 1, samples, entries);
    projector_entries(ctx, ProjectorKind::symmetrizer, ctx.height() + 1, samples, entries);
    // Projector cross-identities: orthogonality and the resolvent recursion.
    for (int k = 2; k <= ctx.height() + 1; ++k) {
      const bool orth = compose(ctx.anti(k), ctx.sym(k)).is_zero() &&
                        compose(ctx.sym(k), ctx.anti(k)).is_zero();
      entries.push_back(entry_base("projectors[cross]/orthogonal-" + std::to_string(k),
                                   {{"n", n}, {"k", k}}, orth));
    }
    for (int k = 1; k <= ctx.height(); ++k) {
      const bool ok = resolvent_residual(ctx.anti_tower(), k).is_zero();
      entries.push_back(entry_base("projectors[cross]/resolvent-" + std::to_string(k),
                                   {{"n", n}, {"k", k}}, ok));
    }
    std::vector<VerifyTask> tasks;
    default_grid(ctx, tasks);
    if (n == 2) {
      negative_controls(ctx, tasks);
      // A perturbed R-matrix must fail certification.
      TensorOp bad = standard_rhat(2);
      bad.add_entry(0, 1, ScalarQ::one());
      RMatrixCheck check = check_rmatrix(bad);
      ordered_json e = entry_base("control/rmatrix-perturbed[n=2]", {{"n", 2}},
                                  check.ok());
      e["expected"] = "fails";
      if (!check.ybe_residual.is_zero())
        e["residual_entries"] = residual_coords(check.ybe_residual);
      entries.push_back(std::move(e));
    }
    run_tasks(ctx, tasks, samples, entries);
  }

  ClassicalDemoResult demo = classical_demo(4, 50, config.seed);
  ordered_json e = entry_base("classical/chn-demo",
                              {{"max_n", 4}, {"trials", 50}, {"seed", config.seed}},
                              demo.all_zero);
  e["report"] = demo.report;
  entries.push_back(std::move(e));

  return finish(config, std::move(entries));
}

RunResult run(const RunConfig& config) {
  if (config.command == "verify-rmatrix") return run_verify_rmatrix(config);
  if (config.command == "projectors") return run_projectors(config);
  if (config.command == "verify") return run_verify(config);
  if (config.command == "classical-demo") return run_classical_demo(config);
  if (config.command == "suite") return run_suite(config);
  throw invalid_argument_error("unknown command: " + config.command);
}

}  // namespace qchn
