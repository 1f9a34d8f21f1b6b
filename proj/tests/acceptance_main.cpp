// Acceptance suite: one line per criterion, exit 0 only if all pass.
// Criterion C7 includes the r=1 lower bound at n=7, which is false as
// published (N(1,2;7) = 4 sits below the claimed lower bound ~4.7797); the
// suite reports that point honestly instead of widening the check.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "mockrank/exact_series.hpp"
#include "mockrank/heegner_eval.hpp"
#include "mockrank/kloosterman.hpp"
#include "mockrank/util.hpp"
#include "mockrank/verifier.hpp"

using namespace mockrank;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& what, const std::string& detail) {
  if (!pass) ++g_failures;
  std::printf("[%s] C%-2d %s%s%s\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

}  // namespace

int main() {
  const long threads = std::min<long>(2, default_thread_count());

  // criteria 5, 6, 7, 9, 10 all need the exact tables; build once to 4600
  RankTable table = rank_counts(4600);

  // ---- C1: exact layer vs exhaustive enumeration, n <= 60, under a minute ----
  {
    Timer timer;
    bool ok = true;
    std::string detail;
    for (long n = 1; n <= 60 && ok; ++n) {
      auto counts = rank_count_brute_all(2, n);
      if (counts[0] + counts[1] != table.p[static_cast<size_t>(n)]) {
        ok = false;
        detail = "p mismatch at n=" + std::to_string(n);
      }
      if (counts[0] - counts[1] != table.alpha[static_cast<size_t>(n)]) {
        ok = false;
        detail = "alpha mismatch at n=" + std::to_string(n);
      }
    }
    double sec = timer.seconds();
    if (ok && sec >= 60) {
      ok = false;
      detail = "too slow";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1fs", sec);
    report(1, ok, "exact alpha(n), p(n) vs exhaustive enumeration, n <= 60",
           detail.empty() ? buf : detail);
  }

  // ---- C2: trace formula agrees with the exact series for 1 <= n <= 200 ----
  {
    Timer timer;
    std::vector<int> ok(201, 0);
    std::vector<std::string> why(201);
    parallel_for(1, 200, threads, [&](long n) {
      try {
        auto res = trace_S(n, PrecisionPolicy::for_n(n));
        bool match = res.alpha_int == table.alpha[static_cast<size_t>(n)] &&
                     res.residual < Real::of(1e-6, 64);
        ok[static_cast<size_t>(n)] = match ? 1 : 0;
        if (!match) why[static_cast<size_t>(n)] = "mismatch at n=" + std::to_string(n);
      } catch (const std::exception& e) {
        ok[static_cast<size_t>(n)] = 0;
        why[static_cast<size_t>(n)] = e.what();
      }
    });
    bool pass = true;
    std::string detail;
    for (long n = 1; n <= 200; ++n)
      if (!ok[static_cast<size_t>(n)] && pass) {
        pass = false;
        detail = why[static_cast<size_t>(n)];
      }
    char buf[96];
    std::snprintf(buf, sizeof buf, "includes n=24 (D=-575, eps(5)=-1); %.1fs",
                  timer.seconds());
    report(2, pass, "trace formula == exact alpha, residual < 1e-6, n <= 200",
           pass ? buf : detail);
  }

  // ---- C3: F coefficients ----
  {
    IntSeries F = f_weakly_holomorphic_coeffs(4);
    bool ok = F.at(-1) == 1 && F.at(0) == -4 && F.at(1) == -83 && F.at(2) == -296;
    report(3, ok, "c_F(-1..2) = (1, -4, -83, -296)", "");
  }

  // ---- C4: Kloosterman layer ----
  {
    bool ok = true;
    std::string detail;
    B0Series b0 = b0_series(10000);
    if (!(abs(b0.value + Real::of(4L, 128)) < Real::of(0.05, 64))) {
      ok = false;
      detail = "b0(1e4) = " + b0.value.str(10);
    }
    Real zeta2 = Real::pi(256) * Real::pi(256) / 6;
    struct Want {
      long ell, num, den;
    };
    for (auto [ell, num, den] :
         {Want{1, 1, 24}, Want{2, -1, 6}, Want{3, -3, 8}, Want{6, 3, 2}}) {
      Real target = Real::of(num, 256) / den / zeta2;
      if (!(abs(b0.subsum.at(ell) - target) < Real::of(0.01, 64))) {
        ok = false;
        detail = "subsum ell=" + std::to_string(ell);
      }
    }
    auto mu = moebius_upto(50);
    for (long c = 1; c <= 50; ++c) {
      Real s = kloosterman_sum({-1, 0, c}, 128);
      if (!(abs(s - Real::of(static_cast<long>(mu[static_cast<size_t>(c)]), 128)) <
            Real::of(1e-20, 64))) {
        ok = false;
        detail = "S(-1,0;" + std::to_string(c) + ") != mu";
      }
    }
    // plateau acceptance for a(1), a(2): oscillation of the trailing 20% of
    // snapshots under 5% of |target|, final value within 10%
    struct Tgt {
      long n, value;
    };
    std::vector<Tgt> targets = {{1, -83}, {2, -296}};
    std::vector<std::string> plateau_fail(targets.size());
    parallel_for(0, static_cast<long>(targets.size()) - 1, threads, [&](long i) {
      auto [n, target] = targets[static_cast<size_t>(i)];
      auto st = a_coefficient_series(n, 4000, 128, 250);
      Real tgt = Real::of(target, 128);
      size_t k = st.snapshots.size();
      Real lo = st.snapshots[k - 4].second, hi = lo;
      for (size_t j = k - 4; j < k; ++j) {
        lo = min(lo, st.snapshots[j].second);
        hi = max(hi, st.snapshots[j].second);
      }
      bool plateau = (hi - lo) < abs(tgt) * Real::of(0.05, 64);
      bool close = abs(st.total - tgt) < abs(tgt) * Real::of(0.10, 64);
      bool sign_ok = st.total.sign() == (target < 0 ? -1 : 1);
      if (!(plateau && close && sign_ok))
        plateau_fail[static_cast<size_t>(i)] = "a(" + std::to_string(n) + ") plateau";
    });
    for (const auto& s : plateau_fail)
      if (!s.empty()) {
        ok = false;
        detail = s;
      }
    report(4, ok, "b0 -> -4, per-ell limits, S(-1,0;c) = mu(c), a(n) plateaus at -83/-296",
           detail);
  }

  // ---- C5: effective alpha error bound, n <= 2000 ----
  {
    BoundReport rep = verify_theorem_main(table, 2000, 256, threads);
    report(5, rep.pass, "|E(n)| < 4.30e23 * 2^q(n) |D_n|^2 e^{l/3}, n <= 2000",
           "worst margin " + rep.worst_margin.str(6) + " at n=" + rep.worst_location);
  }

  // ---- C6: partition error bound and corollary bounds, 4 <= n <= 2000 ----
  {
    BoundReport r1 = verify_partition_error(table, 2000, 256, threads);
    auto cors = verify_corollaries(table, 2000, 256, threads);
    BoundReport low = verify_partition_lower(table, 2000, 256, threads);
    bool ok = r1.pass && cors[0].pass && cors[1].pass && low.pass;
    report(6, ok, "partition error, rank remainder, equidistribution bounds on 4..2000",
           "worst rank-remainder margin " + cors[0].worst_margin.str(6) + " at n=" +
               cors[0].worst_location);
  }

  // ---- C7: two-sided rank sandwich as stated + analytic threshold ----
  {
    SandwichResult s = verify_sandwich(table, 4600, 256, threads);
    bool threshold_ok = s.first_analytic_n == 4543 && s.boundary_exact;
    bool ok = s.report.pass && threshold_ok;
    std::string detail;
    if (!s.report.pass) {
      // decompose: check both sides on 8..4600 directly so the failure is
      // pinned to the stated r=1 start point alone
      bool rest_ok = true;
      long rest_bad = 0;
      for (long n = 8; n <= 4600 && rest_ok; ++n) {
        Real Mel = M_of(n, 256) * exp(l_of(n, 256));
        Real w = Real::of(1L, 256) / sqrt(Real::of(n, 256));
        Real lo = Mel * (1 - w), hi = Mel * (1 + w);
        for (int r = 0; r <= 1; ++r) {
          Real v = Real::of(r == 0 ? table.N0[static_cast<size_t>(n)]
                                   : table.N1[static_cast<size_t>(n)],
                            256);
          if (!(v > lo && v < hi)) {
            rest_ok = false;
            rest_bad = n;
          }
        }
      }
      detail = "as published the r=1 lower bound fails at " + s.report.worst_location +
               " (margin " + s.report.worst_margin.str(6) + "); both sides on 8..4600 " +
               (rest_ok ? "verified to hold" : "ALSO fail at n=" + std::to_string(rest_bad)) +
               "; ";
    }
    detail += "analytic condition first holds at n=" + std::to_string(s.first_analytic_n) +
              (s.boundary_exact ? " (fails at 4542)" : " (boundary not exact)");
    report(7, ok, "rank sandwich r=0 on 8..4600, r=1 on 7..4600; threshold 4543", detail);
  }

  // ---- C8: convexity frontier table ----
  {
    const std::vector<std::pair<double, long>> expected = {
        {2.20, 24}, {1.86, 22}, {1.62, 21}, {1.43, 20}, {1.27, 19}, {1.15, 18}, {1.05, 17}};
    bool ok = true;
    std::string detail;
    for (long a = 11; a <= 17; ++a) {
      ConvexityFrontier f = find_Ca(a);
      auto [ca, mb] = expected[static_cast<size_t>(a - 11)];
      double trunc = std::floor(f.C_a.to_double() * 100) / 100;
      if (trunc != ca || f.max_b != mb) {
        ok = false;
        detail = "a=" + std::to_string(a) + " got C_a=" + f.C_a.str(8) + ", max_b=" +
                 std::to_string(f.max_b);
      }
    }
    report(8, ok, "C_a to two decimals and max_b = {24,22,21,20,19,18,17}", detail);
  }

  // ---- C9: exact convexity + closing-inequality sweep ----
  {
    ConvexityExactResult conv = convexity_exact(table, 2000, threads);
    BoundReport fin = verify_final_ineq(5000, 1000000, 256, threads);
    bool ok = conv.report.pass && fin.pass;
    report(9, ok,
           "exact strict convexity, a,b >= 11/12, a+b <= 2000; closing inequality to 5000 + grid",
           "min product margin " + conv.report.worst_margin.str(6) + " at " +
               conv.report.worst_location);
  }

  // ---- C10: maxima table exact to 23, closed forms to 1000, closures to 40 ----
  {
    bool ok = true;
    std::string detail;
    struct T4Row {
      long n, v0, v1;
      std::vector<long> lam0;
      std::vector<std::vector<long>> lam1;
    };
    const std::vector<T4Row> rows = {
        {1, 1, 0, {1}, {{1}}},
        {2, 1, 2, {1, 1}, {{2}}},
        {3, 3, 0, {3}, {{3}, {1, 2}, {1, 1, 1}}},
        {4, 3, 4, {1, 3}, {{2, 2}}},
        {5, 5, 2, {5}, {{5}}},
        {6, 9, 8, {3, 3}, {{2, 2, 2}}},
        {7, 11, 4, {7}, {{7}, {2, 5}}},
        {8, 15, 16, {3, 5}, {{2, 2, 2, 2}}},
        {9, 27, 12, {3, 3, 3}, {{9}}},
        {10, 33, 32, {3, 7}, {{2, 2, 2, 2, 2}}},
        {11, 45, 24, {3, 3, 5}, {{2, 9}}},
        {12, 81, 64, {3, 3, 3, 3}, {{2, 2, 2, 2, 2, 2}}},
        {13, 99, 48, {3, 3, 7}, {{2, 2, 9}}},
        {14, 135, 128, {3, 3, 3, 5}, {{2, 2, 2, 2, 2, 2, 2}}},
        {15, 243, 96, {3, 3, 3, 3, 3}, {{2, 2, 2, 9}}},
        {16, 297, 256, {3, 3, 3, 7}, {{2, 2, 2, 2, 2, 2, 2, 2}}},
        {17, 405, 192, {3, 3, 3, 3, 5}, {{2, 2, 2, 2, 9}}},
        {18, 729, 512, {3, 3, 3, 3, 3, 3}, {std::vector<long>(9, 2)}},
        {19, 891, 384, {3, 3, 3, 3, 7}, {{2, 2, 2, 2, 2, 9}}},
        {20, 1215, 1024, {3, 3, 3, 3, 3, 5}, {std::vector<long>(10, 2)}},
        {21, 2187, 768, {3, 3, 3, 3, 3, 3, 3}, {{2, 2, 2, 2, 2, 2, 9}}},
        {22, 2673, 2048, {3, 3, 3, 3, 3, 7}, {std::vector<long>(11, 2)}},
        {23, 3645, 1536, {3, 3, 3, 3, 3, 3, 5}, {{2, 2, 2, 2, 2, 2, 2, 9}}},
    };
    auto dp0 = maxn_dp(0, table, 23, 23);
    auto dp1 = maxn_dp(1, table, 23, 23);
    for (const auto& row : rows) {
      const auto& r0 = dp0[static_cast<size_t>(row.n - 1)];
      const auto& r1 = dp1[static_cast<size_t>(row.n - 1)];
      std::set<std::vector<long>> expect1;
      for (const auto& lam : row.lam1)
        for (const auto& m : substitution_closure(lam)) expect1.insert(m);
      std::set<std::vector<long>> got1(r1.maximizers.begin(), r1.maximizers.end());
      if (r0.value != row.v0 || r1.value != row.v1 ||
          r0.maximizers != std::vector<std::vector<long>>{row.lam0} || got1 != expect1) {
        ok = false;
        detail = "table row n=" + std::to_string(row.n);
      }
    }
    BoundReport closed = verify_maxn(table, 1000, 40);
    if (!closed.pass) {
      ok = false;
      detail = "closed forms: " + closed.worst_location;
    }
    report(10, ok, "table of maxima exact to 23; closed forms to 1000; closures to 40", detail);
  }

  // ---- C11: growth bound on the F coefficients, n <= 500 ----
  {
    BoundReport rep = coefficient_bound_check(500);
    report(11, rep.pass, "|c_F(n)| <= (8 sqrt6 pi^1.5 + 16 pi^2 zeta(3/2)^2) e^{4 pi sqrt n}, n <= 500",
           "worst margin " + rep.worst_margin.str(6) + " at n=" + rep.worst_location);
  }

  // ---- C12: precision robustness for n <= 100 ----
  {
    Timer timer;
    std::vector<int> ok(101, 1);
    std::vector<std::string> why(101);
    parallel_for(1, 100, threads, [&](long n) {
      try {
        auto base_pol = PrecisionPolicy::for_n(n);
        auto twice_pol = PrecisionPolicy::for_n(n, base_pol.working_bits * 2);
        auto base = trace_S(n, base_pol);
        auto twice = trace_S(n, twice_pol);
        bool same = base.alpha_int == twice.alpha_int;
        bool shrunk = twice.residual < ldexp2(base.residual, -16);
        ok[static_cast<size_t>(n)] = (same && shrunk) ? 1 : 0;
        if (!same) why[static_cast<size_t>(n)] = "alpha changed at n=" + std::to_string(n);
        else if (!shrunk)
          why[static_cast<size_t>(n)] = "residual shrink < 2^16 at n=" + std::to_string(n);
      } catch (const std::exception& e) {
        ok[static_cast<size_t>(n)] = 0;
        why[static_cast<size_t>(n)] = e.what();
      }
    });
    bool pass = true;
    std::string detail;
    for (long n = 1; n <= 100; ++n)
      if (!ok[static_cast<size_t>(n)] && pass) {
        pass = false;
        detail = why[static_cast<size_t>(n)];
      }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1fs", timer.seconds());
    report(12, pass, "doubled precision: alpha unchanged, residuals shrink >= 2^16, n <= 100",
           pass ? buf : detail);
  }

  std::printf("%s: %d of 12 criteria passed\n", g_failures == 0 ? "OK" : "RESULT",
              12 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
