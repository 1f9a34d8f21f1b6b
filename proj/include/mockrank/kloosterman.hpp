#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mockrank/bigfloat.hpp"
#include "mockrank/exact_series.hpp"
#include "mockrank/report.hpp"

namespace mockrank {

struct KloostermanParams {
  long a = 0, b = 0;
  long c = 1;
};

inline int beta_of(long ell) { return (ell == 1 || ell == 2) ? 1 : -1; }

namespace kl_detail {

inline long mod_inverse(long d, long c) {
  long r0 = c, r1 = ((d % c) + c) % c;
  long t0 = 0, t1 = 1;
  while (r1 != 0) {
    long q = r0 / r1;
    long r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    long t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
  return ((t0 % c) + c) % c;
}

// The ell each admissible c belongs to (c = 0 mod 6/ell, gcd(c, ell) = 1);
// the four congruence classes partition the positive integers.
inline long ell_of_modulus(long c) {
  if (c % 6 == 0) return 1;
  if (c % 3 == 0) return 2;  // c odd multiple of 3
  if (c % 2 == 0) return 3;  // c even, coprime to 3
  return 6;                  // c coprime to 6
}

}  // namespace kl_detail

// Linear-sieve Moebius function mu(0..n).
inline std::vector<int> moebius_upto(long n) {
  std::vector<int> mu(static_cast<size_t>(n) + 1, 0);
  std::vector<long> primes;
  std::vector<bool> composite(static_cast<size_t>(n) + 1, false);
  if (n >= 1) mu[1] = 1;
  for (long i = 2; i <= n; ++i) {
    if (!composite[static_cast<size_t>(i)]) {
      primes.push_back(i);
      mu[static_cast<size_t>(i)] = -1;
    }
    for (long p : primes) {
      if (i * p > n) break;
      composite[static_cast<size_t>(i * p)] = true;
      if (i % p == 0) {
        mu[static_cast<size_t>(i * p)] = 0;
        break;
      }
      mu[static_cast<size_t>(i * p)] = -mu[static_cast<size_t>(i)];
    }
  }
  return mu;
}

// S(a,b;c) = sum over d mod c, gcd(d,c)=1 of e((a dbar + b d)/c).
// The d <-> -d pairing makes the sum real; the imaginary part is kept as a
// certificate and must vanish to 2^{-precision/2}.
inline Real kloosterman_sum(const KloostermanParams& p, mpfr_prec_t prec = 128) {
  if (p.c < 1) throw std::invalid_argument("kloosterman_sum: c must be >= 1");
  long c = p.c;
  if (c == 1) return Real::of(1L, prec);
  long a = ((p.a % c) + c) % c;
  long b = ((p.b % c) + c) % c;
  Real re = Real::zero(prec), im = Real::zero(prec);
  Real two_pi_over_c = Real::pi(prec) * 2 / c;
  Real s(prec), co(prec);
  for (long d = 1; d < c; ++d) {
    if (std::gcd(d, c) != 1) continue;
    long dbar = kl_detail::mod_inverse(d, c);
    long k = static_cast<long>((static_cast<__int128>(a) * dbar + static_cast<__int128>(b) * d) %
                               c);
    Real angle = two_pi_over_c * k;
    mpfr_sin_cos(s.raw(), co.raw(), angle.raw(), MPFR_RNDN);
    re += co;
    im += s;
  }
  if (!(abs(im) < ldexp2(Real::of(1L, 64), -static_cast<long>(prec) / 2)))
    throw certification_error("kloosterman_sum: imaginary part " + im.str(8) +
                              " not certified zero for c=" + std::to_string(c));
  return re;
}

// I_1 by the ascending series sum_k (x/2)^{2k+1} / (k! (k+1)!); relative
// error below 2^{-precision+8}.  Arguments here stay modest (<= 4 pi sqrt n).
inline Real bessel_I1(const Real& x, mpfr_prec_t prec = 128) {
  if (x.sign() < 0) throw std::invalid_argument("bessel_I1: x must be >= 0");
  if (x.sign() == 0) return Real::zero(prec);
  mpfr_prec_t wp = prec + 32;
  Real h(wp);
  mpfr_div_ui(h.raw(), x.raw(), 2, MPFR_RNDN);
  Real h2 = h * h;
  Real term = h;
  Real sum = Real::zero(wp);
  sum += term;
  Real cutoff = ldexp2(Real::of(1L, 64), -(static_cast<long>(prec) + 16));
  for (long k = 1; k < 100000; ++k) {
    term = term * h2 / (k * (k + 1));
    sum += term;
    // once the term ratio drops below 1/2 the tail is under twice the term
    if (abs(term) < cutoff * abs(sum) && h2 < Real::of(k * (k + 1), 64)) break;
  }
  Real out(prec);
  mpfr_set(out.raw(), sum.raw(), MPFR_RNDN);
  return out;
}

// Truncated Kloosterman/Bessel series for the F coefficients:
//   a(n) = (2 pi / sqrt n) sum_{ell | 6} (beta(ell)/sqrt ell)
//          sum_{c admissible} c^{-1} S(-lbar, n; c) I_1(4 pi sqrt n / (c sqrt ell)).
// partial[ell] carries the full prefactor so total = sum of beta-weighted partials.
struct CoefficientSeriesState {
  long n = 0;
  long c_max = 0;
  std::map<long, Real> partial;
  Real total = Real(64);
  std::vector<std::pair<long, Real>> snapshots;  // (c, running total)
};

inline CoefficientSeriesState a_coefficient_series(long n, long c_max,
                                                   mpfr_prec_t prec = 128,
                                                   long snapshot_every = 0) {
  if (n < 1) throw std::invalid_argument("a_coefficient_series: n must be >= 1");
  if (c_max < 6) throw std::invalid_argument("a_coefficient_series: c_max must be >= 6");
  CoefficientSeriesState st;
  st.n = n;
  st.c_max = c_max;
  std::map<long, Real> raw;  // inner sums, before the prefactors
  for (long ell : {1L, 2L, 3L, 6L}) raw.emplace(ell, Real::zero(prec));
  Real sqrt_n = sqrt(Real::of(n, prec));
  Real four_pi_sqrt_n = Real::pi(prec) * 4 * sqrt_n;
  std::map<long, Real> sqrt_ell;
  for (long ell : {1L, 2L, 3L, 6L}) sqrt_ell.emplace(ell, sqrt(Real::of(ell, prec)));
  auto total_now = [&]() {
    Real t = Real::zero(prec);
    for (long ell : {1L, 2L, 3L, 6L})
      t += Real::of(beta_of(ell), prec) * raw.at(ell) / sqrt_ell.at(ell);
    return Real::pi(prec) * 2 / sqrt_n * t;
  };
  for (long c = 1; c <= c_max; ++c) {
    long ell = kl_detail::ell_of_modulus(c);
    long lbar = (c == 1) ? 0 : kl_detail::mod_inverse(ell, c);
    Real S = kloosterman_sum({-lbar, n, c}, prec);
    Real x = four_pi_sqrt_n / (sqrt_ell.at(ell) * c);
    raw.at(ell) += S / c * bessel_I1(x, prec);
    if (snapshot_every > 0 && c % snapshot_every == 0)
      st.snapshots.emplace_back(c, total_now());
  }
  for (long ell : {1L, 2L, 3L, 6L})
    st.partial.emplace(ell, Real::pi(prec) * 2 / sqrt_n * raw.at(ell) / sqrt_ell.at(ell));
  st.total = total_now();
  return st;
}

// b_F(0) = 4 pi^2 sum_{ell|6} (beta(ell)/ell) sum_{c admissible} mu(c)/c^2,
// which converges to -4; subsum[ell] is the raw  sum mu(c)/c^2  per ell
// (limit (1/zeta(2)) {1/24, -1/6, -3/8, 3/2}).
struct B0Series {
  long c_max = 0;
  Real value = Real(64);
  Real tail_bound = Real(64);
  std::map<long, Real> subsum;
};

inline B0Series b0_series(long c_max, mpfr_prec_t prec = 128) {
  if (c_max < 6) throw std::invalid_argument("b0_series: c_max must be >= 6");
  B0Series st;
  st.c_max = c_max;
  auto mu = moebius_upto(c_max);
  for (long ell : {1L, 2L, 3L, 6L}) st.subsum.emplace(ell, Real::zero(prec));
  for (long c = 1; c <= c_max; ++c) {
    if (mu[static_cast<size_t>(c)] == 0) continue;
    long ell = kl_detail::ell_of_modulus(c);
    st.subsum.at(ell) +=
        Real::of(static_cast<long>(mu[static_cast<size_t>(c)]), prec) / (c * c);
  }
  Real t = Real::zero(prec);
  for (long ell : {1L, 2L, 3L, 6L})
    t += Real::of(beta_of(ell), prec) * st.subsum.at(ell) / ell;
  Real pi2 = Real::pi(prec) * Real::pi(prec);
  st.value = pi2 * 4 * t;
  // |sum_{c > c_max} mu(c)/c^2| <= 1/c_max per ell; beta/ell weights sum to 2
  st.tail_bound = pi2 * 8 / c_max;
  return st;
}

// Coefficient growth bound |a(n)| <= C exp(4 pi sqrt n),
// C = 8 sqrt6 pi^{3/2} + 16 pi^2 zeta(3/2)^2,
// checked against the exact integer coefficients.
inline BoundReport coefficient_bound_check(long n_max, mpfr_prec_t prec = 256) {
  if (n_max < 1) throw std::invalid_argument("coefficient_bound_check: n_max must be >= 1");
  IntSeries F = f_weakly_holomorphic_coeffs(n_max);
  Real pi = Real::pi(prec);
  Real z32 = zeta(Real::of(1.5, prec));
  Real C = Real::of(8L, prec) * sqrt(Real::of(6L, prec)) * pow(pi, Real::of(1.5, prec)) +
           Real::of(16L, prec) * pi * pi * z32 * z32;
  BoundReport rep;
  rep.claim_id = "f-coefficient-growth";
  rep.range = "1.." + std::to_string(n_max);
  bool first = true;
  for (long n = 1; n <= n_max; ++n) {
    Real bound = C * exp(pi * 4 * sqrt(Real::of(n, prec)));
    Real margin = bound - abs(Real::of(F.at(n), prec));
    if (first || margin < rep.worst_margin) {
      rep.worst_margin = margin;
      rep.worst_location = std::to_string(n);
      first = false;
    }
  }
  rep.pass = rep.worst_margin > 0;
  return rep;
}

}  // namespace mockrank
