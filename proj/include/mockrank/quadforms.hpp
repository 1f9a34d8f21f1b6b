#pragma once

#include <gmpxx.h>

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mockrank/bigfloat.hpp"
#include "mockrank/errors.hpp"

namespace mockrank {

// Positive definite integral binary quadratic form a*X^2 + b*XY + c*Y^2.
struct QForm {
  ExactInt a, b, c;

  ExactInt discriminant() const { return b * b - 4 * a * c; }
  ExactInt content() const { return gcd(gcd(a, b), c); }
  bool is_primitive() const { return content() == 1; }
  bool is_positive_definite() const { return a > 0 && discriminant() < 0; }
  // |b| <= a <= c, with b >= 0 on either boundary.
  bool is_reduced() const {
    if (!(abs(b) <= a && a <= c)) return false;
    if ((abs(b) == a || a == c) && b < 0) return false;
    return true;
  }
  friend bool operator==(const QForm& p, const QForm& q) {
    return p.a == q.a && p.b == q.b && p.c == q.c;
  }
  friend bool operator<(const QForm& p, const QForm& q) {
    if (p.a != q.a) return p.a < q.a;
    if (p.b != q.b) return p.b < q.b;
    return p.c < q.c;
  }
  std::string str() const {
    return "[" + a.get_str() + "," + b.get_str() + "," + c.get_str() + "]";
  }
};

// Unimodular integer matrix (w x; y z).
struct GL2Int {
  ExactInt w, x, y, z;

  ExactInt det() const { return w * z - x * y; }
  GL2Int inverse() const { return {z, -x, -y, w}; }
  static GL2Int identity() { return {1, 0, 0, 1}; }
  friend GL2Int operator*(const GL2Int& A, const GL2Int& B) {
    return {A.w * B.w + A.x * B.y, A.w * B.x + A.x * B.z,
            A.y * B.w + A.z * B.y, A.y * B.x + A.z * B.z};
  }
  friend bool operator==(const GL2Int& A, const GL2Int& B) {
    return A.w == B.w && A.x == B.x && A.y == B.y && A.z == B.z;
  }
};

// Right action Q o sigma, i.e. Q(wX+xY, yX+zY).
inline QForm act(const QForm& Q, const GL2Int& s) {
  if (s.det() != 1) throw std::invalid_argument("act: matrix must have determinant 1");
  QForm r;
  r.a = Q.a * s.w * s.w + Q.b * s.w * s.y + Q.c * s.y * s.y;
  r.b = 2 * Q.a * s.w * s.x + Q.b * (s.w * s.z + s.x * s.y) + 2 * Q.c * s.y * s.z;
  r.c = Q.a * s.x * s.x + Q.b * s.x * s.z + Q.c * s.z * s.z;
  return r;
}

// Gaussian reduction; returns the reduced representative and sigma with
// act(Q, sigma) reduced.
inline std::pair<QForm, GL2Int> reduce(const QForm& Q0) {
  if (!(Q0.a > 0) || !(Q0.discriminant() < 0))
    throw std::invalid_argument("reduce: form must be positive definite");
  QForm Q = Q0;
  GL2Int sigma = GL2Int::identity();
  auto translate = [&](const ExactInt& k) {
    GL2Int T{1, k, 0, 1};
    Q = act(Q, T);
    sigma = sigma * T;
  };
  auto flip = [&]() {
    GL2Int S{0, -1, 1, 0};
    Q = act(Q, S);
    sigma = sigma * S;
  };
  for (;;) {
    // normalize b into (-a, a]
    ExactInt k;
    mpz_fdiv_q(k.get_mpz_t(), ExactInt(Q.a - Q.b).get_mpz_t(), ExactInt(2 * Q.a).get_mpz_t());
    if (k != 0) translate(k);
    if (Q.a > Q.c) {
      flip();
      continue;
    }
    break;
  }
  if (Q.b < 0 && Q.a == Q.c) flip();       // [a,b,a] -> [a,-b,a]
  if (Q.b < 0 && -Q.b == Q.a) translate(1);  // [a,-a,c] -> [a,a,c]
  return {Q, sigma};
}

// All reduced primitive forms of discriminant D, in (a, b) scan order.
inline std::vector<QForm> reduced_primitive_forms(const ExactInt& D) {
  if (!(D < 0) || !(D % 4 == 0 || ((D % 4) + 4) % 4 == 1))
    throw std::invalid_argument("reduced_primitive_forms: need D < 0, D = 0,1 mod 4");
  std::vector<QForm> out;
  ExactInt absD = -D;
  int parity = mpz_odd_p(D.get_mpz_t()) ? 1 : 0;
  for (ExactInt a = 1; 3 * a * a <= absD; ++a) {
    for (ExactInt b = -a + 1; b <= a; ++b) {
      if (((b % 2) + 2) % 2 != parity) continue;
      ExactInt num = b * b - D;
      if (num % (4 * a) != 0) continue;
      ExactInt c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      QForm Q{a, b, c};
      if (!Q.is_primitive()) continue;
      out.push_back(Q);
    }
  }
  return out;
}

inline long class_number(const ExactInt& D) {
  return static_cast<long>(reduced_primitive_forms(D).size());
}

inline bool is_one_mod_24(const ExactInt& D) {
  ExactInt r = D % 24;
  if (r < 0) r += 24;
  return r == 1;
}

// Positive u with u^2 | D together with the genus sign
// eps(u) = +1 for u = 1,7 (mod 12), -1 for u = 5,11 (mod 12).
inline std::vector<std::pair<long, int>> square_divisors_with_sign(const ExactInt& D) {
  if (!(D < 0) || !is_one_mod_24(D))
    throw std::invalid_argument("square_divisors_with_sign: need D < 0, D = 1 mod 24");
  std::vector<std::pair<long, int>> out;
  ExactInt absD = -D;
  for (ExactInt u = 1; u * u <= absD; ++u) {
    if (absD % (u * u) != 0) continue;
    long ul = u.get_si();
    long m = ul % 12;
    if (m != 1 && m != 5 && m != 7 && m != 11)
      throw certification_error("square divisor " + std::to_string(ul) +
                                " not a unit mod 12 (D = 1 mod 24 violated?)");
    out.emplace_back(ul, (m == 1 || m == 7) ? 1 : -1);
  }
  return out;
}

// H(D) = sum over u^2 | D of h(D/u^2).  Every D/u^2 here is <= -23, so the
// classical weight adjustments at -3, -4 never arise.
inline long hurwitz_class_number(const ExactInt& D) {
  long H = 0;
  for (auto [u, eps] : square_divisors_with_sign(D)) {
    (void)eps;
    H += class_number(D / (ExactInt(u) * u));
  }
  return H;
}

enum class CuspClass { infinity, one_third, one_half, zero };

inline const char* cusp_name(CuspClass c) {
  switch (c) {
    case CuspClass::infinity: return "infinity";
    case CuspClass::one_third: return "one_third";
    case CuspClass::one_half: return "one_half";
    case CuspClass::zero: return "zero";
  }
  return "?";
}

// One of the 12 right coset representatives of Gamma_0(6) in SL_2(Z):
// gamma_inf, gamma_{1/3,r} (r=0,1), gamma_{1/2,s} (s=0,1,2), gamma_{0,t} (t=0..5).
struct CosetRep {
  GL2Int gamma;
  CuspClass cusp;
  int width;  // 1, 2, 3, 6
  int shift;  // the r/s/t translation parameter
};

inline const std::array<CosetRep, 12>& c6_cosets() {
  static const std::array<CosetRep, 12> table = [] {
    std::array<CosetRep, 12> t{};
    int i = 0;
    t[i++] = {GL2Int::identity(), CuspClass::infinity, 1, 0};
    for (int r = 0; r <= 1; ++r)
      t[i++] = {GL2Int{1, 0, 3, 1} * GL2Int{1, r, 0, 1}, CuspClass::one_third, 2, r};
    for (int s = 0; s <= 2; ++s)
      t[i++] = {GL2Int{1, 1, 2, 3} * GL2Int{1, s, 0, 1}, CuspClass::one_half, 3, s};
    for (int u = 0; u <= 5; ++u)
      t[i++] = {GL2Int{0, -1, 1, 0} * GL2Int{1, u, 0, 1}, CuspClass::zero, 6, u};
    return t;
  }();
  return table;
}

struct CosetAssignment {
  GL2Int gamma;
  CuspClass cusp_class;
  int width;
  int shift;
};

// The unique gamma in C_6 with act(Q, gamma^{-1}) in the level-6 family:
// a' = 0 (mod 6), b' = 1 (mod 12).  Exhaustive scan; zero or multiple hits
// would mean an implementation bug and are rejected loudly.
inline CosetAssignment assign_coset(const QForm& Q) {
  if (!Q.is_reduced() || !Q.is_primitive() || !is_one_mod_24(Q.discriminant()))
    throw std::invalid_argument("assign_coset: need a reduced primitive form, D = 1 mod 24");
  const CosetRep* hit = nullptr;
  int hits = 0;
  for (const auto& rep : c6_cosets()) {
    QForm img = act(Q, rep.gamma.inverse());
    ExactInt bmod = img.b % 12;
    if (bmod < 0) bmod += 12;
    if (img.a % 6 == 0 && bmod == 1) {
      ++hits;
      hit = &rep;
    }
  }
  if (hits != 1)
    throw certification_error("assign_coset: " + std::to_string(hits) +
                              " candidate cosets for " + Q.str());
  return {hit->gamma, hit->cusp, hit->width, hit->shift};
}

// The level-6 representative act(Q, gamma^{-1}) produced by the bijection.
inline QForm level6_image(const QForm& Q, const CosetAssignment& A) {
  return act(Q, A.gamma.inverse());
}

// Heegner point tau_Q = (-b + sqrt(D)) / (2a).
struct HeegnerPoint {
  Real re, im;
  QForm source_form;

  Complex tau() const { return {re, im}; }
};

inline HeegnerPoint heegner_point(const QForm& Q, mpfr_prec_t precision) {
  if (precision < 32) throw std::invalid_argument("heegner_point: precision must be >= 32");
  if (!Q.is_positive_definite())
    throw std::invalid_argument("heegner_point: form must be positive definite");
  Real two_a = Real::of(2 * Q.a, precision);
  HeegnerPoint h{Real::of(-Q.b, precision) / two_a,
                 sqrt(Real::of(-Q.discriminant(), precision)) / two_a, Q};
  return h;
}

}  // namespace mockrank
