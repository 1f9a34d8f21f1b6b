#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "mockrank/bigfloat.hpp"
#include "mockrank/quadforms.hpp"

namespace mockrank {

// l(n) = pi * sqrt(24n - 1) / 6, the growth exponent everywhere in the bounds.
inline Real l_of(long n, mpfr_prec_t prec) {
  return Real::pi(prec) * sqrt(Real::of(24 * n - 1, prec)) / 6;
}

// q(n) = log|D_n| / |log log|D_n| - 1.1714| from the class number bound.
inline Real q_of(long n, mpfr_prec_t prec) {
  Real logd = log(Real::of(24 * n - 1, prec));
  return logd / abs(log(logd) - Real::parse("1.1714", prec));
}

// Working precision and truncation lengths for evaluating the trace at a
// given n.  The per-term magnitude reaches e^{l(n)} (from a_Q h_Q = 6 classes)
// and the trace cancels down to e^{l(n)/2}, so the budget is l(n) in bits
// plus a polynomial allowance and 96 guard bits.  Truncation lengths are
// sized for the worst case |q| <= e^{-pi sqrt(3)/6} ~ 0.4038.
struct PrecisionPolicy {
  long n = 1;
  mpfr_prec_t working_bits = 192;
  long eta_terms = 0;  // pentagonal index bound
  long e4_terms = 0;   // dense series length
  Real residual_tol = Real::of(1e-6, 64);

  static PrecisionPolicy for_n(long n, mpfr_prec_t override_bits = 0,
                               double residual_tol = 1e-6) {
    if (n < 1) throw std::invalid_argument("PrecisionPolicy: n must be >= 1");
    PrecisionPolicy p;
    p.n = n;
    const double log2e = 1.4426950408889634;
    double l = M_PI * std::sqrt(24.0 * n - 1.0) / 6.0;
    long bits = static_cast<long>(std::ceil(l * log2e)) +
                static_cast<long>(std::ceil(2.0 * std::log2(24.0 * n + 2.0))) + 96;
    p.working_bits = std::max<long>(bits, 192);
    if (override_bits > 0) p.working_bits = override_bits;
    // |q| <= e^{-pi sqrt(3)/6}: each power buys log2(1/|q|) ~ 1.30838 bits.
    const double bits_per_power = (M_PI * std::sqrt(3.0) / 6.0) * log2e;
    double g_needed = (static_cast<double>(p.working_bits) + 24.0) / bits_per_power;
    p.eta_terms = static_cast<long>(std::ceil((1.0 + std::sqrt(1.0 + 24.0 * g_needed)) / 6.0)) + 2;
    long k = 8;
    while (std::log2(1000.0) + 4.0 * std::log2(k + 2.0) + 0.76 -
               (k + 1.0) * bits_per_power >
           -(static_cast<double>(p.working_bits) + 16.0))
      ++k;
    p.e4_terms = k;
    // 240 sigma_3(k) must stay inside 64 bits for the dense series
    if (p.e4_terms > 200000)
      throw std::invalid_argument("PrecisionPolicy: working precision too large");
    p.residual_tol = Real::of(residual_tol, 64);
    return p;
  }
};

namespace eval_detail {

// prod_{m>=1}(1 - x^m) via the pentagonal series
// 1 + sum_k (-1)^k (x^{k(3k-1)/2} + x^{k(3k+1)/2}); powers maintained
// incrementally (the exponent gaps grow by 3 each step).
inline Complex pentagonal_product(const Complex& x, const PrecisionPolicy& pol) {
  mpfr_prec_t wb = pol.working_bits;
  Real threshold = ldexp2(Real::of(1L, 64), -(wb + 16));
  Complex one(Real::of(1L, wb), Real::zero(wb));
  Complex sum = one;
  Complex x3 = x * x * x;
  Complex pwA = x;            // x^{gA(k)}, gA(1) = 1
  Complex pwB = x * x;        // x^{gB(k)}, gB(1) = 2
  Complex dA = pwB * pwB;     // x^{3k+1} at k = 1
  Complex dB = dA * x;        // x^{3k+2} at k = 1
  for (long k = 1; k <= pol.eta_terms; ++k) {
    Complex term = pwA + pwB;
    if (k % 2 == 1)
      sum -= term;
    else
      sum += term;
    if (abs(pwA) < threshold) break;
    pwA = pwA * dA;
    dA = dA * x3;
    pwB = pwB * dB;
    dB = dB * x3;
  }
  return sum;
}

inline const std::vector<unsigned long>& sigma3_table(long upto) {
  thread_local std::vector<unsigned long> cache;
  if (static_cast<long>(cache.size()) <= upto) {
    cache.assign(static_cast<size_t>(upto) + 1, 0);
    for (unsigned long d = 1; d <= static_cast<unsigned long>(upto); ++d) {
      unsigned long d3 = d * d * d;
      for (unsigned long m = d; m <= static_cast<unsigned long>(upto); m += d) cache[m] += d3;
    }
  }
  return cache;
}

// E4 = 1 + 240 sum sigma_3(k) x^k.
inline Complex e4_series(const Complex& x, const PrecisionPolicy& pol) {
  mpfr_prec_t wb = pol.working_bits;
  Real threshold = ldexp2(Real::of(1L, 64), -(wb + 16));
  const auto& s3 = sigma3_table(pol.e4_terms);
  Complex sum(Real::of(1L, wb), Real::zero(wb));
  Complex xk = x;
  for (long k = 1; k <= pol.e4_terms; ++k) {
    sum += xk * Real::of(static_cast<long>(240 * s3[static_cast<size_t>(k)]), wb);
    // conservative tail cutoff: remaining terms are bounded by
    // 1000 (k+2)^4 |x|^{k+1} / (1 - |x|)
    Real mag = abs(xk);
    double poly = 1000.0 * std::pow(k + 2.0, 4.0) / 0.59;
    if (mag * Real::of(poly, 64) < threshold) break;
    xk = xk * x;
  }
  return sum;
}

}  // namespace eval_detail

inline void check_im_domain(const Complex& tau, const char* who) {
  // sqrt(3)/12 - 1e-6; all callers route through the coset identities
  Real lo = sqrt(Real::of(3L, 96)) / 12 - Real::of(1e-6, 96);
  if (!(tau.im() >= lo))
    throw std::invalid_argument(std::string(who) + ": Im(tau) below sqrt(3)/12 domain");
}

// Dedekind eta(tau) = q^{1/24} prod (1 - q^m), principal branch
// q^{1/24} = e^{2 pi i tau / 24}.
inline Complex eta(const Complex& tau, const PrecisionPolicy& pol) {
  check_im_domain(tau, "eta");
  Complex q = e_of(tau);
  return e_of(tau / 24) * eval_detail::pentagonal_product(q, pol);
}

inline Complex e4(const Complex& tau, const PrecisionPolicy& pol) {
  check_im_domain(tau, "e4");
  return eval_detail::e4_series(e_of(tau), pol);
}

// F(tau) evaluated from the defining eta quotient.  The four eta prefactors
// multiply to exactly q = e(tau), so only integer powers of q appear.
inline Complex F_eval(const Complex& tau, const PrecisionPolicy& pol) {
  check_im_domain(tau, "F_eval");
  using eval_detail::e4_series;
  using eval_detail::pentagonal_product;
  Complex q = e_of(tau);
  Complex q2 = q * q;
  Complex q3 = q2 * q;
  Complex q6 = q3 * q3;
  Complex num = e4_series(q, pol) + e4_series(q2, pol) * 4L - e4_series(q3, pol) * 9L -
                e4_series(q6, pol) * 36L;
  Complex prod = pentagonal_product(q, pol) * pentagonal_product(q2, pol) *
                 pentagonal_product(q3, pol) * pentagonal_product(q6, pol);
  Complex den = q * prod * prod;
  return -(num / (den * 40L));
}

// F at the coset-transformed Heegner point:
// F|gamma_inf = F(z), F|gamma_{1/3,r} = F((z+r+1)/2),
// F|gamma_{1/2,s} = -F((z+s)/3), F|gamma_{0,t} = -F((z+t)/6).
// The argument always has Im >= sqrt(3)/(2 width) >= sqrt(3)/12.
inline Complex F_at_class(const QForm& Qr, const CosetAssignment& A,
                          const PrecisionPolicy& pol) {
  Complex tau = heegner_point(Qr, pol.working_bits).tau();
  int sign = 1;
  long shift = 0, h = 1;
  switch (A.cusp_class) {
    case CuspClass::infinity: break;
    case CuspClass::one_third: shift = A.shift + 1; h = 2; break;
    case CuspClass::one_half: sign = -1; shift = A.shift; h = 3; break;
    case CuspClass::zero: sign = -1; shift = A.shift; h = 6; break;
  }
  Complex v = F_eval((tau + shift) / h, pol);
  return sign < 0 ? -v : v;
}

struct PerClassTerm {
  long u;
  int eps;
  QForm form;
  CosetAssignment assignment;
  Complex value;  // eps(u) * F(gamma_Q tau_Q), exactly as accumulated
};

struct TraceResult {
  long n = 0;
  Complex S;
  std::vector<PerClassTerm> per_class_terms;
  Real alpha_real = Real(64);
  ExactInt alpha_int;
  Real residual = Real(64);
};

// S(n) = sum_{u^2 | D_n} eps(u) sum_{Q in Q_{D_n/u^2}} F(gamma_Q tau_Q),
// alpha(n) = -Im(S(n)) / sqrt|D_n|, rounded with a certified residual.
// Accumulation order is fixed (u ascending, then (a,b) scan order) so a run
// is reproducible bit for bit at a given precision.
inline TraceResult trace_S(long n, const PrecisionPolicy& pol) {
  if (n < 1) throw std::invalid_argument("trace_S: n must be >= 1");
  ExactInt D = 1 - 24 * ExactInt(n);
  TraceResult r;
  r.n = n;
  Complex S(pol.working_bits);
  for (auto [u, eps] : square_divisors_with_sign(D)) {
    ExactInt Dp = D / (ExactInt(u) * u);
    for (const QForm& Q : reduced_primitive_forms(Dp)) {
      CosetAssignment A = assign_coset(Q);
      Complex val = F_at_class(Q, A, pol);
      if (eps < 0) val = -val;
      S += val;
      r.per_class_terms.push_back({u, eps, Q, A, val});
    }
  }
  r.S = S;
  r.alpha_real = -(S.im() / sqrt(Real::of(-D, pol.working_bits)));
  r.alpha_int = r.alpha_real.round_to_int();
  r.residual = abs(r.alpha_real - Real::of(r.alpha_int, pol.working_bits));
  if (!(r.residual < pol.residual_tol))
    throw certification_error("trace_S: residual " + r.residual.str(8) + " at n=" +
                              std::to_string(n) + " exceeds tolerance " +
                              pol.residual_tol.str(8));
  return r;
}

// Main asymptotic term of alpha(n): (-1)^{n+1} sqrt(6)/sqrt(24n-1) e^{l(n)/2}.
inline Real main_term(long n, mpfr_prec_t prec = 256) {
  Real v = sqrt(Real::of(6L, prec)) / sqrt(Real::of(24 * n - 1, prec)) *
           exp(l_of(n, prec) / 2);
  return (n % 2 == 0) ? -v : v;
}

// Effective bound on alpha(n) - main_term(n): (4.30e23) 2^{q(n)} |D_n|^2 e^{l(n)/3}.
inline Real error_term(long n, mpfr_prec_t prec = 256) {
  Real absd = Real::of(24 * n - 1, prec);
  return Real::parse("4.30e23", prec) * pow2(q_of(n, prec)) * absd * absd *
         exp(l_of(n, prec) / 3);
}

}  // namespace mockrank
