#include <catch2/catch_amalgamated.hpp>

#include "mockrank/exact_series.hpp"
#include "mockrank/heegner_eval.hpp"

using namespace mockrank;

namespace {

Real tol_bits(long bits) { return ldexp2(Real::of(1L, 64), -bits); }

Complex zeta6_pow(long k, mpfr_prec_t prec) {
  Real turns = Real::of(k, prec) / 6;
  return e_of(turns);
}

}  // namespace

TEST_CASE("eta at i matches the gamma closed form to 50 digits") {
  auto pol = PrecisionPolicy::for_n(1, 400);
  Complex v = eta(Complex(Real::zero(400), Real::of(1L, 400)), pol);
  // Gamma(1/4) / (2 pi^{3/4})
  Real expected = gamma(Real::of(1L, 400) / 4) /
                  (pow(Real::pi(400), Real::of(0.75, 400)) * 2);
  REQUIRE(abs(v.im()) < tol_bits(380));
  REQUIRE(abs(v.re() - expected) < Real::of(1e-50, 64));
  REQUIRE(v.re().to_double() == Catch::Approx(0.7682254).margin(1e-7));
}

TEST_CASE("eta periodicity picks up e^{pi i/12}") {
  auto pol = PrecisionPolicy::for_n(1, 320);
  Complex tau(Real::of(0.5, 320), Real::of(0.5, 320));
  Complex lhs = eta(tau + 1, pol);
  Complex rhs = e_of(Real::of(1L, 320) / 24) * eta(tau, pol);
  REQUIRE(abs(lhs - rhs) < tol_bits(300));
}

TEST_CASE("eta doubling identity at 2i") {
  auto pol = PrecisionPolicy::for_n(1, 320);
  Complex at_i = eta(Complex(Real::zero(320), Real::of(1L, 320)), pol);
  Complex at_2i = eta(Complex(Real::zero(320), Real::of(2L, 320)), pol);
  // eta(2i) = eta(i) / 2^{3/8}
  Real expected = at_i.re() / pow(Real::of(2L, 320), Real::parse("0.375", 320));
  REQUIRE(abs(at_2i.re() - expected) < tol_bits(300));
}

TEST_CASE("eta rejects points too close to the real line") {
  auto pol = PrecisionPolicy::for_n(1);
  REQUIRE_THROWS_AS(eta(Complex(Real::zero(192), Real::of(0.01, 192)), pol),
                    std::invalid_argument);
}

TEST_CASE("E4 tends to 1 up the imaginary axis") {
  auto pol = PrecisionPolicy::for_n(1, 300);
  Complex v = e4(Complex(Real::zero(300), Real::of(30L, 300)), pol);
  Real dev = abs(v - 1L);
  REQUIRE(dev < Real::of(1e-79, 64));
  // the deviation is the first series term 240 e^{-60 pi} almost exactly
  Real first = Real::of(240L, 300) * exp(-(Real::pi(300) * 60));
  REQUIRE(abs(dev - first) < first * Real::of(1e-3, 64));
}

TEST_CASE("E4 at i: closed form and two-precision consistency") {
  auto pol = PrecisionPolicy::for_n(1, 300);
  Complex v = e4(Complex(Real::zero(300), Real::of(1L, 300)), pol);
  Real g = gamma(Real::of(1L, 300) / 4);
  Real closed = Real::of(3L, 300) * pow(g, Real::of(8L, 300)) /
                pow(Real::pi(300) * 2, Real::of(6L, 300));
  REQUIRE(abs(v.re() - closed) < tol_bits(280));
  REQUIRE(v.re().to_double() == Catch::Approx(1.4557628922687093).epsilon(1e-14));
  auto pol2 = PrecisionPolicy::for_n(1, 600);
  Complex v2 = e4(Complex(Real::zero(600), Real::of(1L, 600)), pol2);
  REQUIRE(abs(v.re() - v2.re()) < tol_bits(280));
}

TEST_CASE("E4 is 1-periodic") {
  auto pol = PrecisionPolicy::for_n(1, 256);
  Complex tau(Real::of(0.311, 256), Real::of(0.83, 256));
  REQUIRE(abs(e4(tau + 1, pol) - e4(tau, pol)) < tol_bits(240));
}

TEST_CASE("F matches its integer q-expansion high up") {
  auto pol = PrecisionPolicy::for_n(1, 400);
  Complex v = F_eval(Complex(Real::zero(400), Real::of(10L, 400)), pol);
  IntSeries cf = f_weakly_holomorphic_coeffs(3);
  // q = e^{-20 pi}: partial sum c(-1)/q + c(0) + c(1) q + c(2) q^2
  Real q = exp(-(Real::pi(400) * 20));
  Real expect = Real::of(cf.at(-1), 400) / q + Real::of(cf.at(0), 400) +
                Real::of(cf.at(1), 400) * q + Real::of(cf.at(2), 400) * q * q;
  REQUIRE(abs(v.im()) < tol_bits(350));
  REQUIRE(abs(v.re() - expect) < abs(expect) * Real::of(1e-30, 64));
}

TEST_CASE("F is 1-periodic") {
  auto pol = PrecisionPolicy::for_n(1, 256);
  Complex tau(Real::of(0.3, 256), Real::of(0.5, 256));
  Complex a = F_eval(tau + 1, pol);
  Complex b = F_eval(tau, pol);
  REQUIRE(abs(a - b) < abs(b) * tol_bits(230));
}

TEST_CASE("two-route consistency at the [6,1,1] Heegner point") {
  auto pol = PrecisionPolicy::for_n(1, 320);
  // reduced form [1,1,6] -> gamma_{0,1}; its level-6 image is [6,1,1] with
  // Heegner point (-1 + i sqrt 23)/12
  QForm q{1, 1, 6};
  CosetAssignment A = assign_coset(q);
  REQUIRE(level6_image(q, A) == QForm{6, 1, 1});
  Complex via_coset = F_at_class(q, A, pol);
  Complex direct = F_eval(heegner_point(QForm{6, 1, 1}, 320).tau(), pol);
  REQUIRE(abs(via_coset - direct) < abs(direct) * tol_bits(280));
}

TEST_CASE("identity coset evaluates F at the Heegner point itself") {
  auto pol = PrecisionPolicy::for_n(6, 320);
  QForm q{6, 1, 6};
  CosetAssignment A = assign_coset(q);
  REQUIRE(A.cusp_class == CuspClass::infinity);
  Complex lhs = F_at_class(q, A, pol);
  Complex rhs = F_eval(heegner_point(q, 320).tau(), pol);
  REQUIRE(abs(lhs - rhs) < abs(rhs) * tol_bits(280));
}

TEST_CASE("n=1 class [1,1,6]: e^{l(1)}-scale growth with dominant imaginary part") {
  auto pol = PrecisionPolicy::for_n(1, 320);
  QForm q{1, 1, 6};
  Complex v = F_at_class(q, assign_coset(q), pol);
  Real scale = exp(Real::pi(320) * sqrt(Real::of(23L, 320)) / 6);
  REQUIRE(abs(abs(v) - scale) < scale * Real::of(0.05, 64));
  REQUIRE(abs(v.im()) > abs(v.re()));
}

TEST_CASE("leading coefficients at a synthetic point, all 12 cosets") {
  // F|gamma(z) - [zeta_Q e(-z/h) - 4 beta(h)] should be subleading-small,
  // the next term being a(1) e(z/h) with a(1) = -83.
  mpfr_prec_t P = 400;
  auto pol = PrecisionPolicy::for_n(1, P);
  Complex z(Real::of(0.37, P), Real::of(8L, P));
  for (const CosetRep& rep : c6_cosets()) {
    int sign = 1;
    long shift2 = 0, h = rep.width;
    long zeta_k = 0;  // zeta_Q = zeta_6^{zeta_k}
    switch (rep.cusp) {
      case CuspClass::infinity: break;
      case CuspClass::one_third: shift2 = rep.shift + 1; zeta_k = 3 - 3 * rep.shift; break;
      case CuspClass::one_half: sign = -1; shift2 = rep.shift; zeta_k = 3 - 2 * rep.shift; break;
      case CuspClass::zero: sign = -1; shift2 = rep.shift; zeta_k = 3 - rep.shift; break;
    }
    Complex val = F_eval((z + shift2) / h, pol);
    if (sign < 0) val = -val;
    int beta_h = (h == 1 || h == 2) ? 1 : -1;
    Complex leading = zeta6_pow(zeta_k, P) * e_of(-(z / h)) - Complex(Real::of(4L * beta_h, P), Real::zero(P));
    Real residual = abs(val - leading);
    // budget: 2 |a(1)| e^{-2 pi 8 / h}
    Real budget = Real::of(166L, P) * exp(-(Real::pi(P) * 16 / h));
    REQUIRE(residual < budget);
  }
}

TEST_CASE("trace formula reproduces alpha at small n") {
  auto alpha = mock_theta_coeffs(24);
  for (long n : {1L, 2L, 3L, 24L}) {
    auto res = trace_S(n, PrecisionPolicy::for_n(n));
    REQUIRE(res.alpha_int == alpha[static_cast<size_t>(n)]);
    REQUIRE(res.residual < Real::of(1e-6, 64));
  }
}

TEST_CASE("trace n=1 has three classes, n=24 uses eps(5) = -1") {
  auto r1 = trace_S(1, PrecisionPolicy::for_n(1));
  REQUIRE(r1.per_class_terms.size() == 3);
  REQUIRE(r1.alpha_int == 1);

  auto r24 = trace_S(24, PrecisionPolicy::for_n(24));
  bool has_u5 = false;
  for (const auto& term : r24.per_class_terms) {
    if (term.u == 5) {
      has_u5 = true;
      REQUIRE(term.eps == -1);
    }
  }
  REQUIRE(has_u5);
  REQUIRE(r24.alpha_int == -53);
}

TEST_CASE("per-class terms sum to S exactly as accumulated") {
  auto res = trace_S(10, PrecisionPolicy::for_n(10));
  Complex sum(res.S.prec());
  for (const auto& t : res.per_class_terms) sum += t.value;
  REQUIRE(abs(sum - res.S) < tol_bits(static_cast<long>(res.S.prec()) - 8));
}

TEST_CASE("exact cancellation of the four a_Q h_Q = 6 classes") {
  for (long n : {6L, 10L, 20L, 50L}) {
    auto res = trace_S(n, PrecisionPolicy::for_n(n));
    ExactInt nn = n;
    std::vector<QForm> four = {{1, 1, 6 * nn}, {2, 1, 3 * nn}, {3, 1, 2 * nn}, {6, 1, nn}};
    Complex sum(res.S.prec());
    int found = 0;
    for (const auto& t : res.per_class_terms) {
      for (const auto& f : four)
        if (t.u == 1 && t.form == f) {
          sum += t.value;
          ++found;
        }
    }
    REQUIRE(found == 4);
    Real scale = exp(l_of(n, res.S.prec()));
    REQUIRE(abs(sum) / scale < Real::of(1e-3, 64));
  }
}

TEST_CASE("subleading deviation of Im S(n) shrinks along a sample") {
  Real prev = Real::of(1e9, 64);
  for (long n : {20L, 50L, 100L, 200L}) {
    auto res = trace_S(n, PrecisionPolicy::for_n(n));
    mpfr_prec_t p = res.S.prec();
    Real ratio = res.S.im() / exp(l_of(n, p) / 2);
    Real target = (n % 2 == 0) ? sqrt(Real::of(6L, p)) : -sqrt(Real::of(6L, p));
    Real dev = abs(ratio - target);
    REQUIRE(dev < prev);
    prev = dev;
  }
}

TEST_CASE("two-route check where the raw level-6 point is high enough") {
  for (long n : {2L, 3L, 7L, 10L}) {
    auto pol = PrecisionPolicy::for_n(n);
    Real half = Real::of(0.5, 64);
    ExactInt D = 1 - 24 * ExactInt(n);
    for (const QForm& q : reduced_primitive_forms(D)) {
      CosetAssignment A = assign_coset(q);
      QForm img = level6_image(q, A);
      auto hp = heegner_point(img, pol.working_bits);
      if (!(hp.im > half)) continue;
      Complex via_coset = F_at_class(q, A, pol);
      Complex direct = F_eval(hp.tau(), pol);
      Real allowed = ldexp2(max(Real::of(1L, 64), abs(direct)),
                            -static_cast<long>(pol.working_bits) / 2);
      REQUIRE(abs(via_coset - direct) < allowed);
    }
  }
}

TEST_CASE("doubling precision keeps alpha and crushes the residual") {
  for (long n : {1L, 24L, 37L}) {
    auto base = PrecisionPolicy::for_n(n);
    auto twice = PrecisionPolicy::for_n(n, base.working_bits * 2);
    auto r1 = trace_S(n, base);
    auto r2 = trace_S(n, twice);
    REQUIRE(r1.alpha_int == r2.alpha_int);
    REQUIRE(r2.residual < ldexp2(r1.residual, -16));
  }
}

TEST_CASE("main term and error bound at n=1") {
  Real m1 = main_term(1);
  REQUIRE(m1.to_double() == Catch::Approx(1.7926202640).epsilon(1e-9));
  Real e1 = Real::of(1L, 256) - m1;  // alpha(1) = 1
  REQUIRE(abs(e1).to_double() == Catch::Approx(0.7926202640).epsilon(1e-8));
  REQUIRE(abs(e1) < error_term(1));
  REQUIRE(error_term(1) > Real::parse("1e25", 64));
}

TEST_CASE("main term alternates in sign") {
  for (long n = 1; n <= 50; ++n) {
    Real m = main_term(n);
    REQUIRE((n % 2 == 1 ? m.sign() > 0 : m.sign() < 0));
  }
}

TEST_CASE("q(1) matches its definition") {
  Real q1 = q_of(1, 256);
  // log(23)/|log log 23 - 1.1714|
  REQUIRE(q1.to_double() == Catch::Approx(109.5821).margin(0.01));
}

TEST_CASE("precision policy invariant") {
  for (long n : {1L, 10L, 100L, 200L}) {
    auto pol = PrecisionPolicy::for_n(n);
    double l = M_PI * std::sqrt(24.0 * n - 1.0) / 6.0;
    double need = std::ceil(l * 1.4426950408889634) + std::ceil(2 * std::log2(24.0 * n + 2)) + 96;
    REQUIRE(pol.working_bits >= static_cast<mpfr_prec_t>(need));
    REQUIRE(pol.eta_terms > 0);
    REQUIRE(pol.e4_terms > 0);
  }
}

TEST_CASE("trace residual certification trips on absurd tolerance") {
  auto pol = PrecisionPolicy::for_n(5, 0, 1e-80);
  pol.working_bits = 192;
  REQUIRE_THROWS_AS(trace_S(5, pol), certification_error);
}
