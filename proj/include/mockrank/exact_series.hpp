#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mockrank/errors.hpp"

namespace mockrank {

using ExactInt = mpz_class;

// Truncated integer power series, optionally with a leading pole:
// coeffs[k] is the coefficient of q^(k - pole_offset), k = 0..size-1.
// All arithmetic is exact; inversion requires a unit constant term.
struct IntSeries {
  std::vector<ExactInt> coeffs;
  long pole_offset = 0;

  long truncation_order() const {
    return static_cast<long>(coeffs.size()) - 1 - pole_offset;
  }
  const ExactInt& at(long exponent) const {
    static const ExactInt zero = 0;
    long idx = exponent + pole_offset;
    if (idx < 0 || idx >= static_cast<long>(coeffs.size())) return zero;
    return coeffs[static_cast<size_t>(idx)];
  }
};

namespace series_detail {

inline std::vector<ExactInt> mul(const std::vector<ExactInt>& a,
                                 const std::vector<ExactInt>& b, long n_max) {
  std::vector<ExactInt> out(static_cast<size_t>(n_max) + 1, 0);
  for (long i = 0; i <= n_max && i < static_cast<long>(a.size()); ++i) {
    if (a[i] == 0) continue;
    long jmax = std::min<long>(n_max - i, static_cast<long>(b.size()) - 1);
    for (long j = 0; j <= jmax; ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// Multiplicative inverse of a series with constant term +1 or -1, by the
// standard linear recurrence on coefficients (stays integral).
inline std::vector<ExactInt> invert_unit(const std::vector<ExactInt>& a, long n_max) {
  if (a.empty() || (a[0] != 1 && a[0] != -1))
    throw std::invalid_argument("series inversion requires constant term +-1");
  std::vector<ExactInt> inv(static_cast<size_t>(n_max) + 1, 0);
  inv[0] = a[0];  // 1/1 = 1, 1/-1 = -1
  for (long k = 1; k <= n_max; ++k) {
    ExactInt s = 0;
    long jmax = std::min<long>(k, static_cast<long>(a.size()) - 1);
    for (long j = 1; j <= jmax; ++j)
      if (a[j] != 0) s += a[j] * inv[k - j];
    inv[k] = -s * a[0];
  }
  return inv;
}

// Substitute q -> q^m.
inline std::vector<ExactInt> compose_qk(const std::vector<ExactInt>& a, long m, long n_max) {
  std::vector<ExactInt> out(static_cast<size_t>(n_max) + 1, 0);
  for (long k = 0; k * m <= n_max && k < static_cast<long>(a.size()); ++k) out[k * m] = a[k];
  return out;
}

// prod_{j>=1} (1 - q^{m*j}) truncated, via the pentagonal-number expansion.
inline std::vector<ExactInt> euler_product(long m, long n_max) {
  std::vector<ExactInt> out(static_cast<size_t>(n_max) + 1, 0);
  out[0] = 1;
  for (long k = 1;; ++k) {
    long g1 = m * k * (3 * k - 1) / 2;
    long g2 = m * k * (3 * k + 1) / 2;
    if (g1 > n_max) break;
    int sgn = (k % 2 == 1) ? -1 : 1;
    out[g1] += sgn;
    if (g2 <= n_max) out[g2] += sgn;
  }
  return out;
}

}  // namespace series_detail

inline ExactInt sigma3(long k) {
  if (k < 1) throw std::invalid_argument("sigma3: k must be >= 1");
  ExactInt s = 0;
  for (long d = 1; d * d <= k; ++d) {
    if (k % d != 0) continue;
    ExactInt dd = d;
    s += dd * dd * dd;
    long e = k / d;
    if (e != d) {
      ExactInt ee = e;
      s += ee * ee * ee;
    }
  }
  return s;
}

// p(0..n_max) by the Euler pentagonal recurrence.
inline std::vector<ExactInt> partition_counts(long n_max) {
  if (n_max < 0) throw std::invalid_argument("partition_counts: n_max must be >= 0");
  std::vector<ExactInt> p(static_cast<size_t>(n_max) + 1, 0);
  p[0] = 1;
  for (long n = 1; n <= n_max; ++n) {
    ExactInt s = 0;
    for (long k = 1;; ++k) {
      long g1 = k * (3 * k - 1) / 2;
      long g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      if (k % 2 == 1) {
        s += p[n - g1];
        if (g2 <= n) s += p[n - g2];
      } else {
        s -= p[n - g1];
        if (g2 <= n) s -= p[n - g2];
      }
    }
    p[n] = s;
  }
  return p;
}

// Coefficients of f(q) = sum_{m>=0} q^{m^2} / ((1+q)(1+q^2)...(1+q^m))^2.
// Entry n is alpha(n) = N(0,2;n) - N(1,2;n) for n >= 1; entry 0 is the
// series constant 1 (the table proper starts at n = 1).
inline std::vector<ExactInt> mock_theta_coeffs(long n_max) {
  if (n_max < 1) throw std::invalid_argument("mock_theta_coeffs: n_max must be >= 1");
  std::vector<ExactInt> f(static_cast<size_t>(n_max) + 1, 0);
  // g_m = ((1+q)...(1+q^m))^{-2}, built incrementally: each step divides by
  // (1+q^m) twice using the recurrence c_k = a_k - c_{k-m}.
  std::vector<ExactInt> g(static_cast<size_t>(n_max) + 1, 0);
  g[0] = 1;
  for (long m = 0; m * m <= n_max; ++m) {
    if (m > 0) {
      for (int pass = 0; pass < 2; ++pass) {
        std::vector<ExactInt> c(static_cast<size_t>(n_max) + 1, 0);
        for (long k = 0; k <= n_max; ++k) {
          c[k] = g[k];
          if (k >= m) c[k] -= c[k - m];
        }
        g = std::move(c);
      }
    }
    long off = m * m;
    for (long k = off; k <= n_max; ++k) f[k] += g[k - off];
  }
  return f;
}

// Exact rank-parity table: N0[n] + N1[n] = p[n], N0[n] - N1[n] = alpha[n].
struct RankTable {
  long n_max = 0;
  std::vector<ExactInt> p;
  std::vector<ExactInt> alpha;
  std::vector<ExactInt> N0;
  std::vector<ExactInt> N1;
};

inline RankTable rank_counts(long n_max) {
  if (n_max < 1) throw std::invalid_argument("rank_counts: n_max must be >= 1");
  RankTable t;
  t.n_max = n_max;
  t.p = partition_counts(n_max);
  t.alpha = mock_theta_coeffs(n_max);
  t.N0.resize(static_cast<size_t>(n_max) + 1);
  t.N1.resize(static_cast<size_t>(n_max) + 1);
  t.N0[0] = 1;
  t.N1[0] = 0;
  for (long n = 1; n <= n_max; ++n) {
    ExactInt s0 = t.p[n] + t.alpha[n];
    ExactInt s1 = t.p[n] - t.alpha[n];
    if (s0 % 2 != 0 || s1 % 2 != 0)
      throw certification_error("rank_counts: p(n) +- alpha(n) odd at n=" + std::to_string(n));
    t.N0[n] = s0 / 2;
    t.N1[n] = s1 / 2;
    if (t.N0[n] < 0 || t.N1[n] < 0)
      throw certification_error("rank_counts: negative count at n=" + std::to_string(n));
  }
  return t;
}

// Visits every partition of n (nonincreasing part order) as
// (largest part, number of parts).
inline void for_each_partition_shape(long n, const std::function<void(long, long)>& visit) {
  std::vector<long> parts;
  std::function<void(long, long)> rec = [&](long remaining, long cap) {
    if (remaining == 0) {
      visit(parts.front(), static_cast<long>(parts.size()));
      return;
    }
    for (long part = std::min(remaining, cap); part >= 1; --part) {
      parts.push_back(part);
      rec(remaining - part, part);
      parts.pop_back();
    }
  };
  rec(n, n);
}

inline constexpr long kDefaultEnumerationCap = 60;

// Exhaustive enumeration oracle: all residue classes of the rank mod t at once.
inline std::vector<ExactInt> rank_count_brute_all(long t, long n,
                                                  long cap = kDefaultEnumerationCap) {
  if (t < 2) throw std::invalid_argument("rank_count_brute: t must be >= 2");
  if (n < 1) throw std::invalid_argument("rank_count_brute: n must be >= 1");
  if (n > cap)
    throw std::invalid_argument("rank_count_brute: n=" + std::to_string(n) +
                                " above enumeration cap " + std::to_string(cap));
  std::vector<ExactInt> counts(static_cast<size_t>(t), 0);
  for_each_partition_shape(n, [&](long largest, long nparts) {
    long r = (largest - nparts) % t;
    if (r < 0) r += t;
    counts[static_cast<size_t>(r)] += 1;
  });
  return counts;
}

inline ExactInt rank_count_brute(long r, long t, long n, long cap = kDefaultEnumerationCap) {
  if (r < 0 || r >= t) throw std::invalid_argument("rank_count_brute: need 0 <= r < t");
  return rank_count_brute_all(t, n, cap)[static_cast<size_t>(r)];
}

// Integer Fourier coefficients of
//   F(z) = -(1/40)(E4(z) + 4E4(2z) - 9E4(3z) - 36E4(6z)) / (eta(z)eta(2z)eta(3z)eta(6z))^2
// as a series with a simple pole: c_F(-1) = 1, c_F(0) = -4, c_F(1) = -83, ...
// The eta prefactors multiply to exactly q, so everything stays integral; the
// final 1/40 must divide exactly at every retained coefficient.
inline IntSeries f_weakly_holomorphic_coeffs(long n_max) {
  if (n_max < 0) throw std::invalid_argument("f_weakly_holomorphic_coeffs: n_max must be >= 0");
  using namespace series_detail;
  long N = n_max + 1;  // one extra order absorbs the q^{-1} shift
  std::vector<ExactInt> e4(static_cast<size_t>(N) + 1, 0);
  e4[0] = 1;
  for (long k = 1; k <= N; ++k) e4[k] = 240 * sigma3(k);
  std::vector<ExactInt> num(static_cast<size_t>(N) + 1, 0);
  {
    auto e4_2 = compose_qk(e4, 2, N);
    auto e4_3 = compose_qk(e4, 3, N);
    auto e4_6 = compose_qk(e4, 6, N);
    for (long k = 0; k <= N; ++k)
      num[k] = e4[k] + 4 * e4_2[k] - 9 * e4_3[k] - 36 * e4_6[k];
  }
  auto P = euler_product(1, N);
  for (long m : {2L, 3L, 6L}) P = mul(P, euler_product(m, N), N);
  auto P2 = mul(P, P, N);
  auto G = mul(num, invert_unit(P2, N), N);
  IntSeries F;
  F.pole_offset = 1;
  F.coeffs.resize(static_cast<size_t>(N) + 1);
  for (long k = 0; k <= N; ++k) {
    if (G[k] % 40 != 0)
      throw certification_error("f_weakly_holomorphic_coeffs: 1/40 division inexact at order " +
                                std::to_string(k - 1));
    F.coeffs[k] = -G[k] / 40;
  }
  return F;
}

}  // namespace mockrank
