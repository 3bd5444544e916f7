// Acceptance suite: one line per criterion, exact (zero-tolerance) checks.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <vector>

#include "qchn/classical.hpp"
#include "qchn/ideal.hpp"
#include "qchn/identities.hpp"
#include "qchn/rank.hpp"
#include "qchn/samples.hpp"

using namespace qchn;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, double time_limit_s,
               const std::function<bool()>& body) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit_s > 0 && elapsed > time_limit_s) ok = false;
  if (!ok) ++failures;
  std::printf("[%s] criterion %2d: %s (%.2fs%s)\n", ok ? "PASS" : "FAIL", number,
              label.c_str(), elapsed,
              time_limit_s > 0 ? (" / limit " + std::to_string(static_cast<int>(time_limit_s)) + "s").c_str()
                               : "");
  if (!error.empty()) std::printf("        error: %s\n", error.c_str());
}

const std::vector<Rational> kSamples = draw_samples(20240601, 3);

bool specializes_to_flip(const TensorOp& rhat) {
  const TensorOp flip = permutation_op(rhat.n());
  for (std::uint32_t r = 0; r < rhat.dim(); ++r)
    for (std::uint32_t c = 0; c < rhat.dim(); ++c)
      if (rhat.entry(r, c).eval_at(Rational(1)) != flip.entry(r, c).eval_at(Rational(1)))
        return false;
  return true;
}

bool all_matrix_hold(IdealVerifier& v, HeckeContext& ctx, int j_lo, int j_hi,
                     const std::function<NCTensorOp(int, int)>& make, int variants) {
  for (int j = j_lo; j <= j_hi; ++j)
    for (int var = 0; var < variants; ++var)
      if (!v.certify_matrix(make(j, var), "acceptance", {}).holds()) return false;
  return true;
}

}  // namespace

int main() {
  criterion(1, "R-matrix certification for n = 1, 2, 3", 5.0, [] {
    for (int n = 1; n <= 3; ++n) {
      const TensorOp r = standard_rhat(n);
      if (!check_ybe(r).is_zero()) return false;
      if (!check_hecke(r).is_zero()) return false;
      if (!specializes_to_flip(r)) return false;
    }
    return true;
  });

  criterion(2, "projector towers for n = 2, 3 up to k = n + 1", 60.0, [] {
    for (int n = 2; n <= 3; ++n) {
      HeckeContext ctx(certify_rmatrix(standard_rhat(n)));
      for (int k = 1; k <= n + 1; ++k) {
        const TensorOp a = ctx.anti(k), s = ctx.sym(k);
        if (compose(a, a) != a || compose(s, s) != s) return false;
        if (k >= 2 && (!compose(a, s).is_zero() || !compose(s, a).is_zero())) return false;
      }
      if (full_trace(ctx.anti(n)) != ScalarQ::one()) return false;
      if (generic_rank(ctx.anti(n), kSamples) != 1) return false;
      if (!ctx.anti(n + 1).is_zero()) return false;
      for (int k = 1; k <= n; ++k)
        if (!resolvent_residual(ctx.anti_tower(), k).is_zero()) return false;
    }
    return true;
  });

  criterion(3, "D-matrix traces and classical limit", 0, [] {
    for (int n = 2; n <= 3; ++n) {
      HeckeRMatrix r = certify_rmatrix(standard_rhat(n));
      const ScalarQ expected = qnum(n) * ScalarQ::q_power(-n);
      if (full_trace(r.d_right) != expected) return false;
      if (full_trace(r.d_left) != expected) return false;
      auto [d_right, d_left] = classical_d_matrices(n);
      if (d_right != NumericMatrix::identity(n)) return false;
      if (d_left != NumericMatrix::identity(n)) return false;
    }
    return true;
  });

  {
    HeckeContext ctx2(certify_rmatrix(standard_rhat(2)));
    IdealVerifier rtt2(ctx2.relations(AlgebraKind::rtt), kSamples);
    criterion(4, "CHN identities, n = 2, j <= 3, four variants", 60.0, [&] {
      return all_matrix_hold(rtt2, ctx2, 1, 3,
                             [&](int j, int var) {
                               return chn_residual(ctx2, j, static_cast<ChnVariant>(var));
                             },
                             4);
    });
    HeckeContext ctx3(certify_rmatrix(standard_rhat(3)));
    IdealVerifier rtt3(ctx3.relations(AlgebraKind::rtt), kSamples);
    criterion(4, "CHN identities, n = 3, j <= 3, four variants", 600.0, [&] {
      return all_matrix_hold(rtt3, ctx3, 1, 3,
                             [&](int j, int var) {
                               return chn_residual(ctx3, j, static_cast<ChnVariant>(var));
                             },
                             4);
    });

    criterion(5, "Newton identities and trace compatibility", 0, [&] {
      for (int j = 1; j <= 4; ++j)
        for (int var = 0; var < 3; ++var)
          if (!rtt2.certify_poly(newton_residual(ctx2, j, static_cast<NewtonVariant>(var)),
                                 "acceptance", {})
                   .holds())
            return false;
      for (int j = 1; j <= 3; ++j)
        for (int var = 0; var < 3; ++var)
          if (!rtt3.certify_poly(newton_residual(ctx3, j, static_cast<NewtonVariant>(var)),
                                 "acceptance", {})
                   .holds())
            return false;
      for (int j = 1; j <= 4; ++j) {
        if (nc_full_trace(chn_residual(ctx2, j, ChnVariant::le)) !=
            newton_residual(ctx2, j, NewtonVariant::qnewton))
          return false;
        if (nc_full_trace(chn_residual(ctx3, j, ChnVariant::le)) !=
            newton_residual(ctx3, j, NewtonVariant::qnewton))
          return false;
      }
      return true;
    });

    criterion(6, "Cayley-Hamilton and quantum determinant, n = 2, 3", 0, [&] {
      for (auto v : {ChVariant::hc1, ChVariant::hc2}) {
        if (!rtt2.certify_matrix(ch_residual(ctx2, v), "acceptance", {}).holds())
          return false;
        if (!rtt3.certify_matrix(ch_residual(ctx3, v), "acceptance", {}).holds())
          return false;
      }
      return rtt2.certify_matrix(qdet_residual(ctx2), "acceptance", {}).holds() &&
             rtt3.certify_matrix(qdet_residual(ctx3), "acceptance", {}).holds();
    });

    criterion(7, "inverse formulas, n = 2, j <= 3, four variants", 0, [&] {
      return all_matrix_hold(rtt2, ctx2, 1, 3,
                             [&](int j, int var) {
                               return inverse_residual(ctx2, j, static_cast<InvVariant>(var));
                             },
                             4);
    });

    criterion(8, "RE-algebra identities, n = 2, j <= 3, both variants", 0, [&] {
      IdealVerifier re2(ctx2.relations(AlgebraKind::re), kSamples);
      return all_matrix_hold(re2, ctx2, 1, 3,
                             [&](int j, int var) {
                               return re_chn_residual(ctx2, j, static_cast<ReVariant>(var));
                             },
                             2);
    });

    criterion(9, "power-sum commutativity, n = 2, k, l <= 3", 0, [&] {
      for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l)
          if (!rtt2.certify_poly(commutativity_residual(ctx2, k, l), "acceptance", {})
                   .holds())
            return false;
      return true;
    });

    criterion(10, "classical identities on 200 random matrices, n <= 4", 60.0, [] {
      ClassicalDemoResult demo = classical_demo(4, 200, 20240601);
      return demo.all_zero;
    });

    criterion(11, "negative controls produce FAILED certificates", 0, [&] {
      if (rtt2.certify_matrix(chn_residual(ctx2, 2, ChnVariant::le, /*flip=*/true),
                              "acceptance", {})
              .holds())
        return false;
      if (rtt2.certify_matrix(inverse_residual(ctx2, 2, InvVariant::inv1, /*drop=*/true),
                              "acceptance", {})
              .holds())
        return false;
      TensorOp bad = standard_rhat(2);
      bad.add_entry(0, 1, ScalarQ::one());
      return !check_rmatrix(bad).ok();
    });
  }

  if (failures == 0) {
    std::printf("acceptance: all criteria PASS\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return 1;
}
