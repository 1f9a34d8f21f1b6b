#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

#include "mockrank/errors.hpp"

namespace mockrank {

using ExactInt = mpz_class;

// Arbitrary-precision real scalar. Every value carries its own bit precision;
// binary operations round to the wider of the two operand precisions.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real of(double d, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.v_, d, MPFR_RNDN);
    return r;
  }
  static Real of(long n, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, n, MPFR_RNDN);
    return r;
  }
  static Real of(int n, mpfr_prec_t prec) { return of(static_cast<long>(n), prec); }
  static Real of(const mpz_class& z, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
    return r;
  }
  // Parses decimal strings such as "8.17e30"; used for the published bound constants.
  static Real parse(const char* s, mpfr_prec_t prec) {
    Real r(prec);
    if (mpfr_set_str(r.v_, s, 10, MPFR_RNDN) != 0)
      throw std::invalid_argument(std::string("Real::parse: bad literal ") + s);
    return r;
  }
  static Real pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  static Real zero(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_zero(r.v_, 1);
    return r;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  mpz_class round_to_int() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
  }

  // 30 significant digits by default: the CLI's fixed output format.
  std::string str(int sig_digits = 30) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", sig_digits - 1, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  friend Real operator+(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a) {
    Real r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, long b) {
    Real r(a.prec());
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(const Real& a, long b) {
    Real r(a.prec());
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator+(const Real& a, long b) {
    Real r(a.prec());
    mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator+(long a, const Real& b) { return b + a; }
  friend Real operator-(const Real& a, long b) {
    Real r(a.prec());
    mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator-(long a, const Real& b) {
    Real r(b.prec());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }

  Real& operator+=(const Real& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(const Real& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Real& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator<(const Real& a, int b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const Real& a, int b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator<(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
  friend bool operator>(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }

 private:
  mpfr_t v_;
};

inline Real abs(const Real& a) {
  Real r(a.prec());
  mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real sqrt(const Real& a) {
  Real r(a.prec());
  mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real exp(const Real& a) {
  Real r(a.prec());
  mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real log(const Real& a) {
  Real r(a.prec());
  mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real zeta(const Real& a) {
  Real r(a.prec());
  mpfr_zeta(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real gamma(const Real& a) {
  Real r(a.prec());
  mpfr_gamma(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real pow(const Real& a, const Real& b) {
  Real r(std::max(a.prec(), b.prec()));
  mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline Real pow2(const Real& e) {
  Real r(e.prec());
  mpfr_ui_pow(r.raw(), 2, e.raw(), MPFR_RNDN);
  return r;
}
// 2^k for integer k (exact scaling).
inline Real ldexp2(const Real& a, long k) {
  Real r(a.prec());
  mpfr_mul_2si(r.raw(), a.raw(), k, MPFR_RNDN);
  return r;
}
inline Real hypot(const Real& a, const Real& b) {
  Real r(std::max(a.prec(), b.prec()));
  mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }
inline Real max(const Real& a, const Real& b) { return a > b ? a : b; }

// Complex scalar over Real; all modular evaluation runs on these.
class Complex {
 public:
  Complex() : re_(64), im_(64) {
    mpfr_set_zero(re_.raw(), 1);
    mpfr_set_zero(im_.raw(), 1);
  }
  explicit Complex(mpfr_prec_t prec) : re_(Real::zero(prec)), im_(Real::zero(prec)) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }

  friend Complex operator+(const Complex& a, const Complex& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend Complex operator-(const Complex& a) { return {-a.re_, -a.im_}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend Complex operator*(const Complex& a, const Real& s) { return {a.re_ * s, a.im_ * s}; }
  friend Complex operator*(const Real& s, const Complex& a) { return a * s; }
  friend Complex operator*(const Complex& a, long s) { return {a.re_ * s, a.im_ * s}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real n = b.re_ * b.re_ + b.im_ * b.im_;
    return {(a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n};
  }
  friend Complex operator/(const Complex& a, long s) { return {a.re_ / s, a.im_ / s}; }
  friend Complex operator+(const Complex& a, long s) { return {a.re_ + s, a.im_}; }
  friend Complex operator-(const Complex& a, long s) { return {a.re_ - s, a.im_}; }

  Complex& operator+=(const Complex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    *this = *this * o;
    return *this;
  }

  Complex conj() const { return {re_, -im_}; }

 private:
  Real re_, im_;
};

inline Real abs(const Complex& z) { return hypot(z.re(), z.im()); }

// e(x) = exp(2*pi*i*x) for real x.
inline Complex e_of(const Real& x) {
  Real t = Real::pi(x.prec()) * 2 * x;
  Real c(x.prec()), s(x.prec());
  mpfr_sin_cos(s.raw(), c.raw(), t.raw(), MPFR_RNDN);
  return {c, s};
}

// e(tau) = exp(2*pi*i*tau) for tau in the upper half-plane; |result| < 1.
inline Complex e_of(const Complex& tau) {
  mpfr_prec_t p = tau.prec();
  Real two_pi = Real::pi(p) * 2;
  Real radius = exp(-(two_pi * tau.im()));
  Real angle = two_pi * tau.re();
  Real c(p), s(p);
  mpfr_sin_cos(s.raw(), c.raw(), angle.raw(), MPFR_RNDN);
  return {radius * c, radius * s};
}

inline Complex pow_ui(const Complex& z, unsigned long k) {
  Complex acc(Real::of(1L, z.prec()), Real::zero(z.prec()));
  Complex base = z;
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

}  // namespace mockrank
