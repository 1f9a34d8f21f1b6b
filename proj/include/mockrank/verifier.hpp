#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mockrank/exact_series.hpp"
#include "mockrank/heegner_eval.hpp"
#include "mockrank/report.hpp"
#include "mockrank/util.hpp"

namespace mockrank {

// Main-term density of the rank counts: M(n) = sqrt(3)/(24n-1) (1 - 1/l(n)).
inline Real M_of(long n, mpfr_prec_t prec = 256) {
  return sqrt(Real::of(3L, prec)) / (24 * n - 1) * (1 - Real::of(1L, prec) / l_of(n, prec));
}

namespace verifier_detail {

// Serial, in-order min-reduction over per-index margins computed in parallel.
inline BoundReport reduce_margins(std::string claim, std::string range,
                                  const std::vector<Real>& margins, long lo, long hi,
                                  const std::function<std::string(long)>& loc) {
  BoundReport rep;
  rep.claim_id = std::move(claim);
  rep.range = std::move(range);
  bool first = true;
  for (long i = lo; i <= hi; ++i) {
    if (margins[static_cast<size_t>(i)].is_nan()) continue;
    if (first || margins[static_cast<size_t>(i)] < rep.worst_margin) {
      rep.worst_margin = margins[static_cast<size_t>(i)];
      rep.worst_location = loc(i);
      first = false;
    }
  }
  rep.pass = !first && rep.worst_margin > 0;
  return rep;
}

inline std::string loc_n(long n) { return std::to_string(n); }

}  // namespace verifier_detail

// Effective bound: |alpha(n) - main_term(n)| < (4.30e23) 2^{q(n)} |D_n|^2 e^{l(n)/3}.
inline BoundReport verify_theorem_main(const RankTable& t, long n_max,
                                       mpfr_prec_t prec = 256, long threads = 1) {
  if (t.n_max < n_max) throw std::invalid_argument("verify_theorem_main: table too short");
  std::vector<Real> margins(static_cast<size_t>(n_max) + 1);
  parallel_for(1, n_max, threads, [&](long n) {
    Real E = Real::of(t.alpha[static_cast<size_t>(n)], prec) - main_term(n, prec);
    margins[static_cast<size_t>(n)] = error_term(n, prec) - abs(E);
  });
  return verifier_detail::reduce_margins("alpha-error-bound", "1.." + std::to_string(n_max),
                                         margins, 1, n_max, verifier_detail::loc_n);
}

// Partition error bound: |p(n) - 2 M(n) e^{l(n)}| <= 1313 e^{l(n)/2}.
inline BoundReport verify_partition_error(const RankTable& t, long n_max,
                                          mpfr_prec_t prec = 256, long threads = 1) {
  if (t.n_max < n_max) throw std::invalid_argument("verify_partition_error: table too short");
  std::vector<Real> margins(static_cast<size_t>(n_max) + 1);
  parallel_for(1, n_max, threads, [&](long n) {
    Real Ep = Real::of(t.p[static_cast<size_t>(n)], prec) -
              M_of(n, prec) * 2 * exp(l_of(n, prec));
    margins[static_cast<size_t>(n)] = Real::of(1313L, prec) * exp(l_of(n, prec) / 2) - abs(Ep);
  });
  return verifier_detail::reduce_margins("partition-error-bound", "1.." + std::to_string(n_max), margins, 1,
                                         n_max, verifier_detail::loc_n);
}

// Bessenrodt/Ono crude lower bound: p(n) > (sqrt3/12n)(1 - 1/sqrt n) e^{l(n)} for n >= 4.
inline BoundReport verify_partition_lower(const RankTable& t, long n_max,
                                          mpfr_prec_t prec = 256, long threads = 1) {
  if (t.n_max < n_max) throw std::invalid_argument("verify_partition_lower: table too short");
  std::vector<Real> margins(static_cast<size_t>(n_max) + 1);
  parallel_for(4, n_max, threads, [&](long n) {
    Real lb = sqrt(Real::of(3L, prec)) / (12 * n) *
              (1 - Real::of(1L, prec) / sqrt(Real::of(n, prec))) * exp(l_of(n, prec));
    margins[static_cast<size_t>(n)] = Real::of(t.p[static_cast<size_t>(n)], prec) - lb;
  });
  return verifier_detail::reduce_margins("partition-lower-bound", "4.." + std::to_string(n_max),
                                         margins, 4, n_max, verifier_detail::loc_n);
}

// Rank remainder bound (|N(r,2;n) - M(n)e^{l}| <= 8.17e30 e^{l/2}, both r) and
// equidistribution bound (|alpha(n)/2p(n)| <= 1.89e32 e^{-l/3}), for n >= 4.
inline std::array<BoundReport, 2> verify_corollaries(const RankTable& t, long n_max,
                                                     mpfr_prec_t prec = 256,
                                                     long threads = 1) {
  if (t.n_max < n_max) throw std::invalid_argument("verify_corollaries: table too short");
  std::vector<Real> m1(static_cast<size_t>(n_max) + 1), m2(static_cast<size_t>(n_max) + 1);
  parallel_for(4, n_max, threads, [&](long n) {
    size_t i = static_cast<size_t>(n);
    Real Mel = M_of(n, prec) * exp(l_of(n, prec));
    Real bound1 = Real::parse("8.17e30", prec) * exp(l_of(n, prec) / 2);
    Real r0 = abs(Real::of(t.N0[i], prec) - Mel);
    Real r1 = abs(Real::of(t.N1[i], prec) - Mel);
    m1[i] = bound1 - max(r0, r1);
    Real R2 = abs(Real::of(t.alpha[i], prec) / (Real::of(t.p[i], prec) * 2));
    m2[i] = Real::parse("1.89e32", prec) * exp(-(l_of(n, prec) / 3)) - R2;
  });
  std::string range = "4.." + std::to_string(n_max);
  return {verifier_detail::reduce_margins("rank-remainder-bound", range, m1, 4, n_max,
                                          verifier_detail::loc_n),
          verifier_detail::reduce_margins("rank-equidistribution-bound", range, m2, 4, n_max,
                                          verifier_detail::loc_n)};
}

struct SandwichResult {
  BoundReport report;          // strict two-sided margins, r=0 from 8, r=1 from 7
  long first_analytic_n = 0;   // first n with 8.17e30 < (M(n)/sqrt n) e^{l(n)/2}
  bool boundary_exact = false; // condition fails at first_analytic_n - 1
};

// Two-sided rank bounds M(n)(1 - 1/sqrt n)e^{l} < N(r,2;n) < M(n)(1 + 1/sqrt n)e^{l},
// checked as stated for r=0 on 8..n_max and r=1 on 7..n_max, plus the
// analytic threshold scan from the proof.
inline SandwichResult verify_sandwich(const RankTable& t, long n_max,
                                      mpfr_prec_t prec = 256, long threads = 1) {
  if (t.n_max < n_max) throw std::invalid_argument("verify_sandwich: table too short");
  std::vector<Real> m0(static_cast<size_t>(n_max) + 1), m1(static_cast<size_t>(n_max) + 1);
  parallel_for(7, n_max, threads, [&](long n) {
    size_t i = static_cast<size_t>(n);
    Real Mel = M_of(n, prec) * exp(l_of(n, prec));
    Real w = Real::of(1L, prec) / sqrt(Real::of(n, prec));
    Real lo = Mel * (1 - w), hi = Mel * (1 + w);
    if (n >= 8) {
      Real v0 = Real::of(t.N0[i], prec);
      m0[i] = min(v0 - lo, hi - v0);
    }
    Real v1 = Real::of(t.N1[i], prec);
    m1[i] = min(v1 - lo, hi - v1);
  });
  SandwichResult out;
  BoundReport r0 = verifier_detail::reduce_margins("rank-sandwich", "", m0, 8, n_max,
                                                   verifier_detail::loc_n);
  BoundReport r1 = verifier_detail::reduce_margins("rank-sandwich", "", m1, 7, n_max,
                                                   verifier_detail::loc_n);
  out.report.claim_id = "rank-sandwich";
  out.report.range = "r0:8.." + std::to_string(n_max) + ",r1:7.." + std::to_string(n_max);
  if (r0.worst_margin < r1.worst_margin) {
    out.report.worst_margin = r0.worst_margin;
    out.report.worst_location = "r=0,n=" + r0.worst_location;
  } else {
    out.report.worst_margin = r1.worst_margin;
    out.report.worst_location = "r=1,n=" + r1.worst_location;
  }
  out.report.pass = out.report.worst_margin > 0;
  // analytic sufficient condition 8.17e30 < (M(n)/sqrt n) e^{l(n)/2}
  Real bigR = Real::parse("8.17e30", prec);
  auto cond = [&](long n) {
    return bigR < M_of(n, prec) / sqrt(Real::of(n, prec)) * exp(l_of(n, prec) / 2);
  };
  for (long n = 2; n <= 6000; ++n) {
    if (cond(n)) {
      out.first_analytic_n = n;
      out.boundary_exact = !cond(n - 1);
      break;
    }
  }
  return out;
}

struct ConvexityExactResult {
  BoundReport report;
  // pairs (r, a, b) with a <= b, min(a,b) below threshold, failing strictness
  std::vector<std::tuple<int, long, long>> subthreshold_failures;
};

// Exact convexity check: N(r,2;a)N(r,2;b) > N(r,2;a+b) for a,b >= 11 (r=0)
// and a,b >= 12 (r=1), a+b <= max_sum; sub-threshold failures reported too.
inline ConvexityExactResult convexity_exact(const RankTable& t, long max_sum,
                                            long threads = 1) {
  if (t.n_max < max_sum) throw std::invalid_argument("convexity_exact: table too short");
  ConvexityExactResult out;
  out.report.claim_id = "rank-convexity";
  out.report.range = "a+b<=" + std::to_string(max_sum);
  struct PerA {
    bool has_margin = false;
    ExactInt min_margin;
    long at_b = 0;
    int at_r = 0;
    std::vector<std::tuple<int, long, long>> fails;
  };
  std::vector<PerA> slots(static_cast<size_t>(max_sum) + 1);
  parallel_for(1, max_sum - 1, threads, [&](long a) {
    PerA& slot = slots[static_cast<size_t>(a)];
    for (int r = 0; r <= 1; ++r) {
      const auto& N = (r == 0) ? t.N0 : t.N1;
      long thr = (r == 0) ? 11 : 12;
      for (long b = a; a + b <= max_sum; ++b) {
        ExactInt lhs = N[static_cast<size_t>(a)] * N[static_cast<size_t>(b)];
        if (a >= thr) {
          ExactInt margin = lhs - N[static_cast<size_t>(a + b)];
          if (!slot.has_margin || margin < slot.min_margin) {
            slot.has_margin = true;
            slot.min_margin = margin;
            slot.at_b = b;
            slot.at_r = r;
          }
        } else if (lhs <= N[static_cast<size_t>(a + b)]) {
          slot.fails.emplace_back(r, a, b);
        }
      }
    }
  });
  bool first = true;
  ExactInt worst;
  std::string loc;
  for (long a = 1; a <= max_sum - 1; ++a) {
    const PerA& slot = slots[static_cast<size_t>(a)];
    if (slot.has_margin && (first || slot.min_margin < worst)) {
      worst = slot.min_margin;
      loc = "r=" + std::to_string(slot.at_r) + ",a=" + std::to_string(a) +
            ",b=" + std::to_string(slot.at_b);
      first = false;
    }
    for (auto& f : slot.fails) out.subthreshold_failures.push_back(f);
  }
  out.report.worst_margin = first ? Real(64) : Real::of(worst, 128);
  out.report.worst_location = loc;
  out.report.pass = !first && worst > 0;
  return out;
}

// l on real arguments, for T_a(C) = l(a) + l(Ca) - l(a + Ca).
inline Real l_real(const Real& x) {
  return Real::pi(x.prec()) * sqrt(x * 24 - 1) / 6;
}

inline Real T_a(long a, const Real& C) {
  Real ra = Real::of(a, C.prec());
  return l_real(ra) + l_real(C * ra) - l_real(ra + C * ra);
}

inline Real S_a(long a, const Real& C) {
  mpfr_prec_t p = C.prec();
  Real ra = Real::of(a, p);
  Real one = Real::of(1L, p);
  return (one + one / sqrt(ra + C * ra)) /
         ((one - one / sqrt(ra)) * (one - one / sqrt(C * ra)));
}

// Closing inequality sides at C=1: returns (T_a(1), log S_a(1) - log M(a)).
inline std::pair<Real, Real> convexity_analytic(long a, mpfr_prec_t prec = 256) {
  if (a < 8) throw std::invalid_argument("convexity_analytic: a must be >= 8");
  Real one = Real::of(1L, prec);
  return {T_a(a, one), log(S_a(a, one)) - log(M_of(a, prec))};
}

struct ConvexityFrontier {
  long a = 0;
  Real C_a = Real(64);
  long max_b = 0;
};

// Solves T_a(C) = log S_a(C) - log M(a) on C in [1, 16] by bisection
// (T_a increasing, S_a decreasing); tolerance 1e-9 in C.
inline ConvexityFrontier find_Ca(long a, mpfr_prec_t prec = 256) {
  if (a < 11 || a > 17) throw std::invalid_argument("find_Ca: a must be in 11..17");
  auto g = [&](const Real& C) { return T_a(a, C) - log(S_a(a, C)) + log(M_of(a, prec)); };
  Real lo = Real::of(1L, prec), hi = Real::of(16L, prec);
  if (!(g(lo) < 0) || !(g(hi) > 0))
    throw certification_error("find_Ca: no sign change on [1,16] for a=" + std::to_string(a));
  Real tol = Real::of(1e-12, prec);
  while (hi - lo > tol) {
    Real mid = (lo + hi) / 2;
    if (g(mid) < 0)
      lo = mid;
    else
      hi = mid;
  }
  ConvexityFrontier f;
  f.a = a;
  f.C_a = (lo + hi) / 2;
  f.max_b = (Real::of(a, prec) * f.C_a).round_to_int().get_si();
  // round_to_int rounds to nearest; max_b is the floor
  if (Real::of(f.max_b, prec) > Real::of(a, prec) * f.C_a) --f.max_b;
  return f;
}

// Closing inequality sweep: all integers 18..a_max plus a log-spaced grid to grid_max.
inline BoundReport verify_final_ineq(long a_max, long grid_max = 1000000,
                                     mpfr_prec_t prec = 256, long threads = 1) {
  std::vector<Real> margins(static_cast<size_t>(a_max) + 1);
  parallel_for(18, a_max, threads, [&](long a) {
    auto [lhs, rhs] = convexity_analytic(a, prec);
    margins[static_cast<size_t>(a)] = lhs - rhs;
  });
  BoundReport rep = verifier_detail::reduce_margins(
      "final-inequality", "18.." + std::to_string(a_max) + "+grid.." + std::to_string(grid_max),
      margins, 18, a_max, verifier_detail::loc_n);
  for (double x = static_cast<double>(a_max); x <= static_cast<double>(grid_max); x *= 1.05) {
    long a = static_cast<long>(x);
    auto [lhs, rhs] = convexity_analytic(a, prec);
    Real margin = lhs - rhs;
    if (margin < rep.worst_margin) {
      rep.worst_margin = margin;
      rep.worst_location = std::to_string(a);
    }
  }
  rep.pass = rep.worst_margin > 0;
  return rep;
}

// ---------------------------------------------------------------------------
// maxN(r,2;n) = max over partitions of n of prod N(r,2;part)
// ---------------------------------------------------------------------------

struct MaxNResult {
  int r = 0;
  long n = 0;
  ExactInt value;
  ExactInt maximizer_count;
  std::vector<std::vector<long>> maximizers;  // nondecreasing parts; for n <= maxset cap
  std::vector<long> canonical;
};

// All partitions of n as nondecreasing part lists.
inline std::vector<std::vector<long>> all_partitions_of(long n) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  std::function<void(long, long)> rec = [&](long remaining, long cap) {
    if (remaining == 0) {
      std::vector<long> asc(cur.rbegin(), cur.rend());
      out.push_back(asc);
      return;
    }
    for (long part = std::min(remaining, cap); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// Canonical maximizer partitions; below the closed-form thresholds the
// representatives come from the n <= 23 table.
inline std::vector<long> canonical_maximizer(int r, long n) {
  std::vector<long> parts;
  if (r == 0) {
    if (n >= 5) {
      long m = n % 3;
      long threes = (m == 0) ? n / 3 : (m == 1 ? (n - 7) / 3 : (n - 5) / 3);
      parts.assign(static_cast<size_t>(threes), 3);
      if (m == 1) parts.push_back(7);
      if (m == 2) parts.push_back(5);
    } else {
      static const std::vector<std::vector<long>> small = {{}, {1}, {1, 1}, {3}, {1, 3}};
      parts = small[static_cast<size_t>(n)];
    }
  } else {
    if (n >= 8) {
      long twos = (n % 2 == 0) ? n / 2 : (n - 9) / 2;
      parts.assign(static_cast<size_t>(twos), 2);
      if (n % 2 == 1) parts.push_back(9);
    } else {
      static const std::vector<std::vector<long>> small = {{},  {1},       {2}, {3},
                                                           {2, 2}, {5}, {2, 2, 2}, {7}};
      parts = small[static_cast<size_t>(n)];
    }
  }
  return parts;
}

// Closed-form maxN value (valid for n >= 5 when r=0, n >= 8 when r=1).
inline ExactInt maxn_closed_value(int r, long n) {
  ExactInt v;
  if (r == 0) {
    long m = n % 3;
    long e = (m == 0) ? n / 3 : (m == 1 ? (n - 7) / 3 : (n - 5) / 3);
    mpz_ui_pow_ui(v.get_mpz_t(), 3, static_cast<unsigned long>(e));
    if (m == 1) v *= 11;
    if (m == 2) v *= 5;
  } else {
    long e = (n % 2 == 0) ? n / 2 : (n - 9) / 2;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(e));
    if (n % 2 == 1) v *= 12;
  }
  return v;
}

// Substitution closure under (2,2) -> (4) and (2,2,2) -> (6).
inline std::set<std::vector<long>> substitution_closure(const std::vector<long>& start) {
  std::set<std::vector<long>> seen;
  std::vector<std::vector<long>> frontier{start};
  auto normalized = [](std::vector<long> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  frontier[0] = normalized(frontier[0]);
  while (!frontier.empty()) {
    std::vector<long> cur = frontier.back();
    frontier.pop_back();
    if (!seen.insert(cur).second) continue;
    long twos = static_cast<long>(std::count(cur.begin(), cur.end(), 2L));
    if (twos >= 2) {
      std::vector<long> next = cur;
      next.erase(std::find(next.begin(), next.end(), 2L));
      next.erase(std::find(next.begin(), next.end(), 2L));
      next.push_back(4);
      frontier.push_back(normalized(next));
    }
    if (twos >= 3) {
      std::vector<long> next = cur;
      for (int k = 0; k < 3; ++k) next.erase(std::find(next.begin(), next.end(), 2L));
      next.push_back(6);
      frontier.push_back(normalized(next));
    }
  }
  return seen;
}

// Unbounded-knapsack DP: best(n) = max over parts i of N(r,2;i) * best(n-i),
// with distinct-multiset maximizer counting, full maximizer sets recovered up
// to maxset_nmax (all partitions when the maximum is 0).
inline std::vector<MaxNResult> maxn_dp(int r, const RankTable& t, long n_max,
                                       long maxset_nmax = 40) {
  if (t.n_max < n_max) throw std::invalid_argument("maxn_dp: table too short");
  const auto& N = (r == 0) ? t.N0 : t.N1;
  std::vector<ExactInt> best(static_cast<size_t>(n_max) + 1), cnt(static_cast<size_t>(n_max) + 1);
  std::vector<bool> set_flag(static_cast<size_t>(n_max) + 1, false);
  best[0] = 1;
  cnt[0] = 1;
  set_flag[0] = true;
  for (long k = 1; k <= n_max; ++k) {
    for (long n = k; n <= n_max; ++n) {
      if (!set_flag[static_cast<size_t>(n - k)]) continue;
      ExactInt cand = N[static_cast<size_t>(k)] * best[static_cast<size_t>(n - k)];
      if (!set_flag[static_cast<size_t>(n)] || cand > best[static_cast<size_t>(n)]) {
        best[static_cast<size_t>(n)] = cand;
        cnt[static_cast<size_t>(n)] = cnt[static_cast<size_t>(n - k)];
        set_flag[static_cast<size_t>(n)] = true;
      } else if (cand == best[static_cast<size_t>(n)]) {
        cnt[static_cast<size_t>(n)] += cnt[static_cast<size_t>(n - k)];
      }
    }
  }
  // maximizer-set recovery (top-down; valid whenever best > 0, exhaustive
  // enumeration for the zero maxima)
  std::map<long, std::set<std::vector<long>>> memo;
  std::function<const std::set<std::vector<long>>&(long)> maxset = [&](long m)
      -> const std::set<std::vector<long>>& {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    std::set<std::vector<long>> s;
    if (m == 0) {
      s.insert(std::vector<long>{});
    } else if (best[static_cast<size_t>(m)] == 0) {
      for (auto& lam : all_partitions_of(m)) s.insert(lam);
    } else {
      for (long i = 1; i <= m; ++i) {
        if (N[static_cast<size_t>(i)] * best[static_cast<size_t>(m - i)] !=
            best[static_cast<size_t>(m)])
          continue;
        for (const auto& base : maxset(m - i)) {
          std::vector<long> lam = base;
          lam.insert(std::upper_bound(lam.begin(), lam.end(), i), i);
          s.insert(std::move(lam));
        }
      }
    }
    return memo.emplace(m, std::move(s)).first->second;
  };
  std::vector<MaxNResult> out;
  out.reserve(static_cast<size_t>(n_max));
  for (long n = 1; n <= n_max; ++n) {
    MaxNResult res;
    res.r = r;
    res.n = n;
    res.value = best[static_cast<size_t>(n)];
    res.maximizer_count = cnt[static_cast<size_t>(n)];
    if (n <= maxset_nmax) {
      const auto& s = maxset(n);
      res.maximizers.assign(s.begin(), s.end());
    }
    res.canonical = canonical_maximizer(r, n);
    out.push_back(std::move(res));
  }
  return out;
}

inline ExactInt partition_product(const RankTable& t, int r, const std::vector<long>& parts) {
  const auto& N = (r == 0) ? t.N0 : t.N1;
  ExactInt v = 1;
  for (long part : parts) v *= N[static_cast<size_t>(part)];
  return v;
}

// Closed-form maxima: values (r=0 from n=5, r=1 from
// n=8), uniqueness of the r=0 maximizer, and r=1 maximizer sets equal to
// substitution closures (n <= maxset cap).
inline BoundReport verify_maxn(const RankTable& t, long n_max, long maxset_nmax = 40) {
  BoundReport rep;
  rep.claim_id = "maxn-closed-forms";
  rep.range = "r0:5.." + std::to_string(n_max) + ",r1:8.." + std::to_string(n_max);
  long fails = 0;
  std::string first_fail;
  auto note_fail = [&](const std::string& what) {
    ++fails;
    if (first_fail.empty()) first_fail = what;
  };
  for (int r = 0; r <= 1; ++r) {
    auto results = maxn_dp(r, t, n_max, maxset_nmax);
    long start = (r == 0) ? 5 : 8;
    for (const auto& res : results) {
      long n = res.n;
      if (n < start) continue;
      if (res.value != maxn_closed_value(r, n))
        note_fail("value r=" + std::to_string(r) + ",n=" + std::to_string(n));
      if (partition_product(t, r, res.canonical) != res.value)
        note_fail("canonical r=" + std::to_string(r) + ",n=" + std::to_string(n));
      if (r == 0 && res.maximizer_count != 1)
        note_fail("uniqueness r=0,n=" + std::to_string(n));
      if (r == 1 && n <= maxset_nmax) {
        auto closure = substitution_closure(res.canonical);
        std::set<std::vector<long>> got(res.maximizers.begin(), res.maximizers.end());
        if (got != closure) note_fail("closure r=1,n=" + std::to_string(n));
      }
    }
  }
  rep.worst_margin = fails == 0 ? Real::of(1L, 64) : Real::of(-fails, 64);
  rep.worst_location = first_fail;
  rep.pass = fails == 0;
  return rep;
}

// Substitution audit: every listed substitution moves the product in the
// stated direction (equality exactly for (4)->(2,2), (6)->(2,2,2), (2,5)->(7)
// with r=1); large parts always split, 24 <= i <= 500; every 10 <= i <= 23 is
// beaten or matched by its table representation.
inline BoundReport substitution_audit(const RankTable& t) {
  if (t.n_max < 500) throw std::invalid_argument("substitution_audit: table must reach 500");
  BoundReport rep;
  rep.claim_id = "substitution-audit";
  rep.range = "substitution lists + split rule 24..500";
  long fails = 0;
  std::string first_fail;
  auto note_fail = [&](const std::string& what) {
    ++fails;
    if (first_fail.empty()) first_fail = what;
  };

  struct Sub {
    int r;
    std::vector<long> from, to;
    bool strict;
  };
  const std::vector<Sub> subs = {
      {0, {1, 1, 1}, {3}, true},        {0, {2}, {1, 1}, true},
      {0, {4}, {1, 3}, true},           {0, {5, 5}, {3, 7}, true},
      {0, {6}, {3, 3}, true},           {0, {7, 7}, {3, 3, 3, 5}, true},
      {0, {8}, {3, 5}, true},           {0, {9}, {3, 3, 3}, true},
      {1, {1, 1, 1, 1}, {4}, true},     {1, {3, 3}, {2, 2, 2}, true},
      {1, {4}, {2, 2}, false},          {1, {5, 5}, {2, 2, 2, 2, 2}, true},
      {1, {6}, {2, 2, 2}, false},       {1, {7, 7}, {2, 2, 2, 2, 2, 2, 2}, true},
      {1, {8}, {2, 2, 2, 2}, true},     {1, {9, 9}, {2, 2, 2, 2, 2, 2, 2, 2, 2}, true},
      {1, {2, 5}, {7}, false},
      // distinct leftover singles recombine
      {0, {1, 5}, canonical_maximizer(0, 6), true},
      {0, {1, 7}, canonical_maximizer(0, 8), true},
      {0, {5, 7}, canonical_maximizer(0, 12), true},
      {1, {1, 9}, canonical_maximizer(1, 10), true},
      // ones are absorbed
      {0, {1, 3, 3}, {7}, true},        {0, {1, 1, 3}, {5}, true},
      {1, {1, 2, 2}, {5}, true},        {1, {1, 1}, {2}, true},
      {1, {1, 1, 1, 2}, {5}, true},
  };
  for (const auto& s : subs) {
    ExactInt lhs = partition_product(t, s.r, s.from);
    ExactInt rhs = partition_product(t, s.r, s.to);
    bool ok = s.strict ? (rhs > lhs) : (rhs == lhs);
    if (!ok) {
      std::string from_str, to_str;
      for (long v : s.from) from_str += std::to_string(v) + ".";
      for (long v : s.to) to_str += std::to_string(v) + ".";
      note_fail("sub r=" + std::to_string(s.r) + " " + from_str + "->" + to_str);
    }
  }
  for (int r = 0; r <= 1; ++r) {
    const auto& N = (r == 0) ? t.N0 : t.N1;
    for (long i = 24; i <= 500; ++i) {
      if (!(N[static_cast<size_t>(i / 2)] * N[static_cast<size_t>((i + 1) / 2)] >
            N[static_cast<size_t>(i)]))
        note_fail("split r=" + std::to_string(r) + ",i=" + std::to_string(i));
    }
    for (long i = 10; i <= 23; ++i) {
      if (!(partition_product(t, r, canonical_maximizer(r, i)) >= N[static_cast<size_t>(i)]))
        note_fail("table-rep r=" + std::to_string(r) + ",i=" + std::to_string(i));
    }
  }
  rep.worst_margin = fails == 0 ? Real::of(1L, 64) : Real::of(-fails, 64);
  rep.worst_location = first_fail;
  rep.pass = fails == 0;
  return rep;
}

}  // namespace mockrank
