#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "mockrank/exact_series.hpp"
#include "mockrank/heegner_eval.hpp"
#include "mockrank/kloosterman.hpp"
#include "mockrank/quadforms.hpp"
#include "mockrank/report.hpp"
#include "mockrank/util.hpp"
#include "mockrank/verifier.hpp"

namespace mockrank {

// exit codes: 0 ok, 1 verification failure, 2 usage error, 3 certification failure
enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInternal = 3 };

namespace cli_detail {

inline std::string partition_str(const std::vector<long>& parts) {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i)
    s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

inline std::string partition_list_str(const std::vector<std::vector<long>>& list) {
  std::string s;
  for (size_t i = 0; i < list.size(); ++i) s += (i ? "; " : "") + partition_str(list[i]);
  return s;
}

struct Options {
  std::string format = "csv";
  std::string output_path;
  long threads = default_thread_count();

  OutputFormat fmt() const {
    return format == "json" ? OutputFormat::json : OutputFormat::csv;
  }
};

struct OutputSink {
  std::ofstream file;
  std::ostream* stream;

  OutputSink(const Options& opt, std::ostream& fallback) {
    if (opt.output_path.empty()) {
      stream = &fallback;
    } else {
      file.open(opt.output_path);
      if (!file) throw std::runtime_error("cannot open output file " + opt.output_path);
      stream = &file;
    }
  }
};

}  // namespace cli_detail

// Runs one subcommand; out receives the records, err the human summaries.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  using cli_detail::Options;
  using cli_detail::OutputSink;
  using cli_detail::partition_list_str;
  using cli_detail::partition_str;

  CLI::App app{"mock theta coefficients, rank statistics, and bound verification"};
  app.require_subcommand(1);
  app.fallthrough();  // --format/--output/--threads parse after the subcommand too
  Options opt;
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", opt.output_path, "write records to this file instead of stdout");
  app.add_option("--threads", opt.threads, "sweep parallelism (default MOCKRANK_THREADS or cores)")
      ->check(CLI::PositiveNumber);

  std::vector<BoundReport> reports;
  auto summarize = [&](const BoundReport& r) {
    reports.push_back(r);
    err << r.claim_id << " [" << r.range << "]: " << (r.pass ? "PASS" : "FAIL")
        << " worst margin " << r.worst_margin.str(8) << " at " << r.worst_location << "\n";
  };

  // ---- alpha ----
  auto* alpha_cmd = app.add_subcommand("alpha", "alpha(n) exactly and/or via the trace formula");
  long alpha_n = 1;
  std::string alpha_method = "both";
  long alpha_prec = 0;
  alpha_cmd->add_option("--n", alpha_n, "index n >= 1")->required()->check(CLI::PositiveNumber);
  alpha_cmd->add_option("--method", alpha_method, "exact | trace | both")
      ->check(CLI::IsMember({"exact", "trace", "both"}));
  alpha_cmd->add_option("--precision", alpha_prec, "working precision override (bits, >= 64)")
      ->check(CLI::Range(64L, 1L << 26));
  alpha_cmd->callback([&] {
    OutputSink sink(opt, out);
    TableWriter w(*sink.stream, opt.fmt(),
                  {"n", "method", "alpha_exact", "alpha_trace", "residual", "agree"});
    bool do_exact = alpha_method != "trace";
    bool do_trace = alpha_method != "exact";
    ExactInt exact_v;
    if (do_exact) exact_v = mock_theta_coeffs(alpha_n)[static_cast<size_t>(alpha_n)];
    std::vector<Cell> row{cell(alpha_n), cell(alpha_method)};
    row.push_back(do_exact ? cell(exact_v) : cell(""));
    if (do_trace) {
      auto res = trace_S(alpha_n, PrecisionPolicy::for_n(alpha_n, alpha_prec));
      row.push_back(cell(res.alpha_int));
      row.push_back(cell(res.residual));
      bool agree = !do_exact || res.alpha_int == exact_v;
      row.push_back(cell(agree));
      if (!agree)
        throw certification_error("alpha: exact and trace disagree at n=" +
                                  std::to_string(alpha_n));
    } else {
      row.push_back(cell(""));
      row.push_back(cell(""));
      row.push_back(cell(true));
    }
    w.row(row);
  });

  // ---- pn ----
  auto* pn_cmd = app.add_subcommand("pn", "partition numbers p(0..n_max)");
  long pn_max = 20;
  pn_cmd->add_option("--n-max", pn_max, "upper index")->required()->check(CLI::NonNegativeNumber);
  pn_cmd->callback([&] {
    OutputSink sink(opt, out);
    TableWriter w(*sink.stream, opt.fmt(), {"n", "p"});
    auto p = partition_counts(pn_max);
    for (long n = 0; n <= pn_max; ++n) w.row({cell(n), cell(p[static_cast<size_t>(n)])});
  });

  // ---- rank ----
  auto* rank_cmd = app.add_subcommand("rank", "exact rank parity table N(r,2;n)");
  long rank_max = 20;
  rank_cmd->add_option("--n-max", rank_max, "upper index")->required()->check(CLI::PositiveNumber);
  rank_cmd->callback([&] {
    OutputSink sink(opt, out);
    TableWriter w(*sink.stream, opt.fmt(), {"n", "p", "alpha", "N0", "N1"});
    RankTable t = rank_counts(rank_max);
    for (long n = 1; n <= rank_max; ++n) {
      size_t i = static_cast<size_t>(n);
      w.row({cell(n), cell(t.p[i]), cell(t.alpha[i]), cell(t.N0[i]), cell(t.N1[i])});
    }
  });

  // ---- fcoeffs ----
  auto* fc_cmd = app.add_subcommand("fcoeffs", "integer Fourier coefficients of F");
  long fc_max = 10;
  fc_cmd->add_option("--n-max", fc_max, "upper exponent")->required()->check(CLI::NonNegativeNumber);
  fc_cmd->callback([&] {
    OutputSink sink(opt, out);
    TableWriter w(*sink.stream, opt.fmt(), {"exponent", "c"});
    IntSeries F = f_weakly_holomorphic_coeffs(fc_max);
    for (long n = -1; n <= fc_max; ++n) w.row({cell(n), cell(F.at(n))});
  });

  // ---- acoeff-series ----
  auto* ac_cmd = app.add_subcommand("acoeff-series",
                                    "Kloosterman/Bessel series for a(n), with snapshots");
  long ac_n = 1, ac_cmax = 2000, ac_prec = 128;
  ac_cmd->add_option("--n", ac_n, "coefficient index")->required()->check(CLI::PositiveNumber);
  ac_cmd->add_option("--c-max", ac_cmax, "modulus truncation")->check(CLI::PositiveNumber);
  ac_cmd->add_option("--precision", ac_prec, "bits")->check(CLI::Range(64L, 1L << 20));
  ac_cmd->callback([&] {
    OutputSink sink(opt, out);
    TableWriter w(*sink.stream, opt.fmt(), {"kind", "key", "value"});
    auto st = a_coefficient_series(ac_n, ac_cmax, ac_prec, std::max(1L, ac_cmax / 16));
    for (auto& [c, v] : st.snapshots) w.row({cell("snapshot"), cell(c), cell(v)});
    for (auto& [ell, v] : st.partial) w.row({cell("partial"), cell(ell), cell(v)});
    w.row({cell("total"), cell(""), cell(st.total)});
  });

  // ---- b0 ----
  auto* b0_cmd = app.add_subcommand("b0", "constant-term series b_F(0) -> -4");
  long b0_cmax = 10000;
  b0_cmd->add_option("--c-max", b0_cmax, "modulus truncation")->check(CLI::PositiveNumber);
  b0_cmd->callback([&] {
    OutputSink sink(opt, out);
    TableWriter w(*sink.stream, opt.fmt(), {"kind", "ell", "value"});
    B0Series st = b0_series(b0_cmax);
    for (auto& [ell, v] : st.subsum) w.row({cell("subsum"), cell(ell), cell(v)});
    w.row({cell("value"), cell(""), cell(st.value)});
    w.row({cell("tail_bound"), cell(""), cell(st.tail_bound)});
  });

  // ---- trace-detail ----
  auto* td_cmd = app.add_subcommand("trace-detail", "per-class terms of the trace S(n)");
  long td_n = 1, td_prec = 0;
  td_cmd->add_option("--n", td_n, "index n")->required()->check(CLI::PositiveNumber);
  td_cmd->add_option("--precision", td_prec, "working precision override (bits)")
      ->check(CLI::Range(64L, 1L << 26));
  td_cmd->callback([&] {
    OutputSink sink(opt, out);
    TableWriter w(*sink.stream, opt.fmt(),
                  {"n", "u", "eps", "a", "b", "c", "cusp", "width", "shift", "re", "im"});
    auto res = trace_S(td_n, PrecisionPolicy::for_n(td_n, td_prec));
    for (const auto& t : res.per_class_terms) {
      w.row({cell(td_n), cell(t.u), cell(t.eps), cell(t.form.a), cell(t.form.b),
             cell(t.form.c), cell(cusp_name(t.assignment.cusp_class)),
             cell(t.assignment.width), cell(t.assignment.shift), cell(t.value.re()),
             cell(t.value.im())});
    }
    err << "S(" << td_n << ") = " << res.S.re().str(12) << " + " << res.S.im().str(12)
        << "i, alpha = " << res.alpha_int.get_str() << ", residual " << res.residual.str(8)
        << "\n";
  });

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "check the published bounds and theorems");
  verify_cmd->require_subcommand(1);

  auto* vt = verify_cmd->add_subcommand("theorem", "effective bound on alpha(n)");
  long vt_max = 2000;
  vt->add_option("--n-max", vt_max)->check(CLI::PositiveNumber);
  vt->callback([&] {
    OutputSink sink(opt, out);
    TableWriter w(*sink.stream, opt.fmt(), {"n", "alpha", "main", "E", "bound", "margin"});
    RankTable t = rank_counts(vt_max);
    const mpfr_prec_t prec = 256;
    std::vector<std::vector<Cell>> rows(static_cast<size_t>(vt_max) + 1);
    parallel_for(1, vt_max, opt.threads, [&](long n) {
      Real main = main_term(n, prec);
      Real E = Real::of(t.alpha[static_cast<size_t>(n)], prec) - main;
      Real bound = error_term(n, prec);
      rows[static_cast<size_t>(n)] = {cell(n),    cell(t.alpha[static_cast<size_t>(n)]),
                                      cell(main), cell(E),
                                      cell(bound), cell(bound - abs(E))};
    });
    for (long n = 1; n <= vt_max; ++n) w.row(rows[static_cast<size_t>(n)]);
    summarize(verify_theorem_main(t, vt_max, prec, opt.threads));
  });

  auto* vp = verify_cmd->add_subcommand("partition", "partition error bound and crude lower bound");
  long vp_max = 2000;
  vp->add_option("--n-max", vp_max)->check(CLI::PositiveNumber);
  vp->callback([&] {
    OutputSink sink(opt, out);
    TableWriter w(*sink.stream, opt.fmt(),
                  {"n", "p", "E_p", "bound", "margin", "lower_bound", "lower_margin"});
    RankTable t = rank_counts(vp_max);
    const mpfr_prec_t prec = 256;
    std::vector<std::vector<Cell>> rows(static_cast<size_t>(vp_max) + 1);
    parallel_for(1, vp_max, opt.threads, [&](long n) {
      size_t i = static_cast<size_t>(n);
      Real Ep = Real::of(t.p[i], prec) - M_of(n, prec) * 2 * exp(l_of(n, prec));
      Real bound = Real::of(1313L, prec) * exp(l_of(n, prec) / 2);
      Real lower = sqrt(Real::of(3L, prec)) / (12 * n) *
                   (1 - Real::of(1L, prec) / sqrt(Real::of(n, prec))) * exp(l_of(n, prec));
      rows[i] = {cell(n),          cell(t.p[i]),
                 cell(Ep),         cell(bound),
                 cell(bound - abs(Ep)), cell(lower),
                 n >= 4 ? cell(Real::of(t.p[i], prec) - lower) : cell("")};
    });
    for (long n = 1; n <= vp_max; ++n) w.row(rows[static_cast<size_t>(n)]);
    summarize(verify_partition_error(t, vp_max, prec, opt.threads));
    summarize(verify_partition_lower(t, vp_max, prec, opt.threads));
  });

  auto* vc = verify_cmd->add_subcommand("corollaries", "rank remainder and equidistribution bounds");
  long vc_max = 2000;
  vc->add_option("--n-max", vc_max)->check(CLI::PositiveNumber);
  vc->callback([&] {
    OutputSink sink(opt, out);
    TableWriter w(*sink.stream, opt.fmt(),
                  {"n", "R0", "R1", "bound1", "margin1", "R2", "bound2", "margin2"});
    RankTable t = rank_counts(vc_max);
    const mpfr_prec_t prec = 256;
    std::vector<std::vector<Cell>> rows(static_cast<size_t>(vc_max) + 1);
    parallel_for(4, vc_max, opt.threads, [&](long n) {
      size_t i = static_cast<size_t>(n);
      Real Mel = M_of(n, prec) * exp(l_of(n, prec));
      Real R0 = Real::of(t.N0[i], prec) - Mel;
      Real R1 = Real::of(t.N1[i], prec) - Mel;
      Real b1 = Real::parse("8.17e30", prec) * exp(l_of(n, prec) / 2);
      Real R2 = Real::of(t.alpha[i], prec) / (Real::of(t.p[i], prec) * 2);
      Real b2 = Real::parse("1.89e32", prec) * exp(-(l_of(n, prec) / 3));
      rows[i] = {cell(n),  cell(R0), cell(R1), cell(b1), cell(b1 - max(abs(R0), abs(R1))),
                 cell(R2), cell(b2), cell(b2 - abs(R2))};
    });
    for (long n = 4; n <= vc_max; ++n) w.row(rows[static_cast<size_t>(n)]);
    for (auto& rep : verify_corollaries(t, vc_max, prec, opt.threads)) summarize(rep);
  });

  auto* vs = verify_cmd->add_subcommand("sandwich", "two-sided rank bounds and the proof threshold");
  long vs_max = 4600;
  vs->add_option("--n-max", vs_max)->check(CLI::PositiveNumber);
  vs->callback([&] {
    OutputSink sink(opt, out);
    TableWriter w(*sink.stream, opt.fmt(), {"n", "r", "value", "lo", "hi", "margin"});
    RankTable t = rank_counts(vs_max);
    const mpfr_prec_t prec = 256;
    std::vector<std::vector<std::vector<Cell>>> rows(static_cast<size_t>(vs_max) + 1);
    parallel_for(7, vs_max, opt.threads, [&](long n) {
      size_t i = static_cast<size_t>(n);
      Real Mel = M_of(n, prec) * exp(l_of(n, prec));
      Real wgt = Real::of(1L, prec) / sqrt(Real::of(n, prec));
      Real lo = Mel * (1 - wgt), hi = Mel * (1 + wgt);
      for (int r = 0; r <= 1; ++r) {
        if (r == 0 && n < 8) continue;
        Real v = Real::of(r == 0 ? t.N0[i] : t.N1[i], prec);
        rows[i].push_back({cell(n), cell(r), cell(r == 0 ? t.N0[i] : t.N1[i]), cell(lo),
                           cell(hi), cell(min(v - lo, hi - v))});
      }
    });
    for (long n = 7; n <= vs_max; ++n)
      for (auto& row : rows[static_cast<size_t>(n)]) w.row(row);
    SandwichResult s = verify_sandwich(t, vs_max, prec, opt.threads);
    summarize(s.report);
    BoundReport thr;
    thr.claim_id = "sandwich-threshold";
    thr.range = "first n with 8.17e30 < (M/sqrt n) e^{l/2}";
    thr.worst_margin = Real::of(s.first_analytic_n == 4543 && s.boundary_exact ? 1 : -1, 64);
    thr.worst_location = std::to_string(s.first_analytic_n);
    thr.pass = s.first_analytic_n == 4543 && s.boundary_exact;
    summarize(thr);
  });

  auto* vx = verify_cmd->add_subcommand("convexity", "strict convexity of N(r,2;n)");
  long vx_max = 1000;
  vx->add_option("--max-sum", vx_max)->check(CLI::PositiveNumber);
  vx->callback([&] {
    OutputSink sink(opt, out);
    TableWriter w(*sink.stream, opt.fmt(), {"kind", "r", "a", "b", "margin", "pass"});
    RankTable t = rank_counts(vx_max);
    ConvexityExactResult res = convexity_exact(t, vx_max, opt.threads);
    w.row({cell("summary"), cell(""), cell(""), cell(""), cell(res.report.worst_margin),
           cell(res.report.pass)});
    // one margin row per (r, a+b): the binding pair for that sum
    for (int r = 0; r <= 1; ++r) {
      const auto& N = (r == 0) ? t.N0 : t.N1;
      long thr = (r == 0) ? 11 : 12;
      for (long s = 2 * thr; s <= vx_max; ++s) {
        bool have = false;
        ExactInt best;
        long best_a = 0;
        for (long a = thr; 2 * a <= s; ++a) {
          ExactInt margin = N[static_cast<size_t>(a)] * N[static_cast<size_t>(s - a)] -
                            N[static_cast<size_t>(s)];
          if (!have || margin < best) {
            have = true;
            best = margin;
            best_a = a;
          }
        }
        w.row({cell("margin"), cell(r), cell(best_a), cell(s - best_a),
               cell(Real::of(best, 128)), cell(best > 0)});
      }
    }
    for (auto [r, a, b] : res.subthreshold_failures)
      w.row({cell("subthreshold_failure"), cell(r), cell(a), cell(b), cell(""), cell(false)});
    summarize(res.report);
  });

  auto* vf = verify_cmd->add_subcommand("final-ineq", "the closing analytic inequality");
  long vf_amax = 5000, vf_grid = 1000000;
  vf->add_option("--a-max", vf_amax)->check(CLI::PositiveNumber);
  vf->add_option("--grid-max", vf_grid)->check(CLI::PositiveNumber);
  vf->callback([&] {
    OutputSink sink(opt, out);
    TableWriter w(*sink.stream, opt.fmt(), {"a", "lhs", "rhs", "margin"});
    const mpfr_prec_t prec = 256;
    std::vector<std::vector<Cell>> rows(static_cast<size_t>(vf_amax) + 1);
    parallel_for(18, vf_amax, opt.threads, [&](long a) {
      auto [lhs, rhs] = convexity_analytic(a, prec);
      rows[static_cast<size_t>(a)] = {cell(a), cell(lhs), cell(rhs), cell(lhs - rhs)};
    });
    for (long a = 18; a <= vf_amax; ++a) w.row(rows[static_cast<size_t>(a)]);
    summarize(verify_final_ineq(vf_amax, vf_grid, prec, opt.threads));
  });

  auto* vm = verify_cmd->add_subcommand("maxn", "closed forms for the maximal products");
  long vm_max = 1000, vm_sets = 40;
  vm->add_option("--n-max", vm_max)->check(CLI::PositiveNumber);
  vm->add_option("--maxset-max", vm_sets)->check(CLI::NonNegativeNumber);
  vm->callback([&] {
    OutputSink sink(opt, out);
    TableWriter w(*sink.stream, opt.fmt(),
                  {"r", "n", "value", "count", "closed_value", "match"});
    RankTable t = rank_counts(vm_max);
    for (int r = 0; r <= 1; ++r) {
      auto dp = maxn_dp(r, t, vm_max, vm_sets);
      long start = (r == 0) ? 5 : 8;
      for (const auto& res : dp) {
        if (res.n < start) continue;
        ExactInt closed = maxn_closed_value(r, res.n);
        w.row({cell(r), cell(res.n), cell(res.value), cell(res.maximizer_count),
               cell(closed), cell(res.value == closed)});
      }
    }
    summarize(verify_maxn(t, vm_max, vm_sets));
  });

  auto* vsub = verify_cmd->add_subcommand("substitutions", "the part-substitution audit");
  vsub->callback([&] {
    OutputSink sink(opt, out);
    TableWriter w(*sink.stream, opt.fmt(), bound_report_columns());
    RankTable t = rank_counts(500);
    BoundReport rep = substitution_audit(t);
    w.row(bound_report_row(rep));
    summarize(rep);
  });

  auto* vl = verify_cmd->add_subcommand("lemma32", "growth bound on the F coefficients");
  long vl_max = 500;
  vl->add_option("--n-max", vl_max)->check(CLI::PositiveNumber);
  vl->callback([&] {
    OutputSink sink(opt, out);
    TableWriter w(*sink.stream, opt.fmt(), {"n", "abs_c", "bound", "margin"});
    IntSeries F = f_weakly_holomorphic_coeffs(vl_max);
    const mpfr_prec_t prec = 256;
    Real z32 = zeta(Real::of(1.5, prec));
    Real C = Real::of(8L, prec) * sqrt(Real::of(6L, prec)) *
                 pow(Real::pi(prec), Real::of(1.5, prec)) +
             Real::of(16L, prec) * Real::pi(prec) * Real::pi(prec) * z32 * z32;
    for (long n = 1; n <= vl_max; ++n) {
      Real bound = C * exp(Real::pi(prec) * 4 * sqrt(Real::of(n, prec)));
      ExactInt ac = abs(F.at(n));
      w.row({cell(n), cell(ac), cell(bound), cell(bound - Real::of(ac, prec))});
    }
    summarize(coefficient_bound_check(vl_max, prec));
  });

  // ---- tables ----
  auto* tables_cmd = app.add_subcommand("tables", "reproduce the published tables");
  tables_cmd->require_subcommand(1);

  auto* t2 = tables_cmd->add_subcommand("table2", "small-a reduced forms of discriminant 1-24n");
  long t2_n = 1;
  t2->add_option("--n", t2_n, "which n")->required()->check(CLI::PositiveNumber);
  t2->callback([&] {
    OutputSink sink(opt, out);
    TableWriter w(*sink.stream, opt.fmt(), {"kind", "a", "b", "c"});
    ExactInt D = 1 - 24 * ExactInt(t2_n);
    for (const QForm& q : reduced_primitive_forms(D)) {
      if (q.a > 12) continue;
      bool tabulated = gcd(q.a, q.b) == 1;
      w.row({cell(tabulated ? "table" : "extra"), cell(q.a), cell(q.b), cell(q.c)});
    }
  });

  auto* t3 = tables_cmd->add_subcommand("table3", "convexity frontier C_a, a = 11..17");
  t3->callback([&] {
    OutputSink sink(opt, out);
    TableWriter w(*sink.stream, opt.fmt(), {"a", "C_a", "max_b"});
    for (long a = 11; a <= 17; ++a) {
      ConvexityFrontier f = find_Ca(a);
      w.row({cell(a), cell(f.C_a), cell(f.max_b)});
    }
  });

  auto* t4 = tables_cmd->add_subcommand("table4", "maximal products and maximizers");
  long t4_max = 23;
  t4->add_option("--n-max", t4_max)->check(CLI::PositiveNumber);
  t4->callback([&] {
    OutputSink sink(opt, out);
    TableWriter w(*sink.stream, opt.fmt(), {"n", "maxn0", "lambda0", "maxn1", "lambda1"});
    RankTable t = rank_counts(t4_max);
    auto dp0 = maxn_dp(0, t, t4_max, t4_max);
    auto dp1 = maxn_dp(1, t, t4_max, t4_max);
    for (long n = 1; n <= t4_max; ++n) {
      size_t i = static_cast<size_t>(n - 1);
      w.row({cell(n), cell(dp0[i].value), cell(partition_list_str(dp0[i].maximizers)),
             cell(dp1[i].value), cell(partition_list_str(dp1[i].maximizers))});
    }
  });

  // ---- frontier ----
  auto* fr_cmd = app.add_subcommand("frontier", "solve for a single C_a");
  long fr_a = 11;
  fr_cmd->add_option("--a", fr_a, "row index, 11..17")->required()->check(CLI::Range(11L, 17L));
  fr_cmd->callback([&] {
    OutputSink sink(opt, out);
    TableWriter w(*sink.stream, opt.fmt(), {"a", "C_a", "max_b"});
    ConvexityFrontier f = find_Ca(fr_a);
    w.row({cell(fr_a), cell(f.C_a), cell(f.max_b)});
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.name("mockrank");
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const certification_error& e) {
    err << "certification failure: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  for (const auto& r : reports)
    if (!r.pass) return kVerifyFailed;
  return kOk;
}

}  // namespace mockrank
