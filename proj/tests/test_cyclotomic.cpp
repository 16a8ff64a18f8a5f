#include "generators.hpp"

#include "weave/cyclotomic.hpp"
#include "weave/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

using namespace weave;
using weave::testing::random_cyclo;
using weave::testing::random_poly;

namespace {

const CycloInt i_unit = CycloInt::i_unit();
const CycloInt sqrt3 = CycloInt::sqrt3();

std::complex<double> embed(const CycloInt& v) { return {v.real_approx(), v.imag_approx()}; }

// Floating-point evaluation of p at s = exp(i pi k / 6).
std::complex<double> float_eval(const LaurentPoly& p, long long k) {
  std::complex<double> sum = 0;
  for (const auto& [e, c] : p.terms())
    sum += c.convert_to<double>() * std::polar(1.0, std::numbers::pi * double(e * k) / 6.0);
  return sum;
}

}  // namespace

TEST_CASE("zeta powers") {
  CHECK(CycloInt::zeta_power(3) == CycloInt(0, 0, 0, 1));
  CHECK(CycloInt::zeta_power(6) == CycloInt(-1, 0, 0, 0));
  CHECK(CycloInt::zeta_power(-1) == CycloInt(0, 1, 0, -1));
  CHECK(CycloInt::zeta_power(12) == CycloInt(1));
  CHECK(CycloInt::zeta_power(-13) == CycloInt::zeta_power(-1));
  CHECK(CycloInt::zeta_power(5) == CycloInt(0, -1, 0, 1));

  const CycloInt zeta = CycloInt::zeta_power(1);
  CHECK((zeta.pow(4) - zeta.pow(2) + CycloInt(1)).is_zero());
  CHECK(zeta.pow(12) == CycloInt(1));
  CHECK((zeta.pow(6) + CycloInt(1)).is_zero());
  for (int k = -24; k <= 24; ++k) {
    const auto z = embed(CycloInt::zeta_power(k));
    CHECK(std::abs(z - std::polar(1.0, std::numbers::pi * k / 6.0)) < 1e-12);
  }
}

TEST_CASE("ring operations") {
  CHECK(i_unit * i_unit == CycloInt(-1));
  CHECK(sqrt3 * sqrt3 == CycloInt(3));
  CHECK(std::abs(sqrt3.real_approx() - std::sqrt(3.0)) < 1e-12);
  CHECK(std::abs(sqrt3.imag_approx()) < 1e-12);
  CHECK(i_unit.conj() == CycloInt(0, 0, 0, -1));
  CHECK(CycloInt::omega().conj() == CycloInt::zeta_power(-2));
  CHECK(-CycloInt(2, 0, 1, 0) == CycloInt(-2, 0, -1, 0));
}

TEST_CASE("conj is an involutive automorphism; norms are real") {
  for (int k = 0; k < 200; ++k) {
    const CycloInt a = random_cyclo();
    const CycloInt b = random_cyclo();
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK(a.norm() == a.norm().conj());
    CHECK(std::abs(embed(a.conj()) - std::conj(embed(a))) < 1e-9);
    CHECK(std::abs(embed(a * b) - embed(a) * embed(b)) < 1e-6);
  }
}

TEST_CASE("eval_at") {
  const LaurentPoly hopf = LaurentPoly::monomial(-1, 1) + LaurentPoly::monomial(-1, 5);
  CHECK(eval_at(hopf, kAtOmega) == -i_unit);
  CHECK(eval_at(LaurentPoly(1), kAtOmega) == CycloInt(1));

  const LaurentPoly fig8 = parse_laurent("t^-2 - t^-1 + 1 - t + t^2");
  CHECK(eval_at(fig8, kAtMinusOne) == CycloInt(5));
  CHECK(eval_at(fig8, kAtOmega) == CycloInt(-1));
  CHECK(eval_at(hopf, kAtMinusOne) == CycloInt(0, 0, 0, -2));
}

TEST_CASE("eval_at is a ring homomorphism and matches floating point") {
  for (int k = 0; k < 100; ++k) {
    const auto p = random_poly(6, -20, 20, 1000);
    const auto q = random_poly(6, -20, 20, 1000);
    for (long long h : {kAtOmega, kAtMinusOne, 5LL, -1LL}) {
      CHECK(eval_at(p + q, h) == eval_at(p, h) + eval_at(q, h));
      CHECK(eval_at(p * q, h) == eval_at(p, h) * eval_at(q, h));
    }
    CHECK(std::abs(embed(eval_at(p, kAtOmega)) - float_eval(p, kAtOmega)) < 1e-6);
  }
}

TEST_CASE("lm_decompose") {
  auto d = lm_decompose(CycloInt(3), 1);
  CHECK(d.n_L == 2);
  CHECK(d.sign == -1);

  d = lm_decompose(sqrt3, 2);
  CHECK(d.n_L == 1);
  CHECK(d.sign == -1);

  d = lm_decompose(CycloInt(1), 1);
  CHECK(d.n_L == 0);
  CHECK(d.sign == 1);

  d = lm_decompose(-i_unit, 2);
  CHECK(d.n_L == 0);
  CHECK(d.sign == -1);

  // The shape is reconstructed exactly for every (mu, n, sign).
  const CycloInt i_sqrt3 = i_unit * sqrt3;
  for (unsigned mu = 1; mu <= 5; ++mu)
    for (unsigned n = 0; n <= 6; ++n)
      for (int sign : {1, -1}) {
        const CycloInt v = CycloInt(sign) * i_unit.pow(mu - 1) * i_sqrt3.pow(n);
        const auto got = lm_decompose(v, mu);
        CHECK(got.n_L == n);
        CHECK(got.sign == sign);
      }
}

TEST_CASE("lm_decompose rejects other values") {
  CHECK_THROWS_AS(lm_decompose(CycloInt(2), 1), NotLMForm);
  CHECK_THROWS_AS(lm_decompose(CycloInt(0), 1), NotLMForm);
  CHECK_THROWS_AS(lm_decompose(i_unit, 1), NotLMForm);   // right norm, wrong mu parity
  CHECK_THROWS_AS(lm_decompose(CycloInt(1), 2), NotLMForm);
  CHECK_THROWS_AS(lm_decompose(CycloInt::omega(), 1), NotLMForm);
  CHECK_THROWS_AS(lm_decompose(sqrt3 + CycloInt(1), 1), NotLMForm);
  CHECK_THROWS_AS(lm_decompose(CycloInt(1), 0), DomainError);
}

TEST_CASE("abs_if_real_integerlike") {
  CHECK(abs_if_real_integerlike(CycloInt(0, 0, 0, -2)) == 2);
  CHECK(abs_if_real_integerlike(CycloInt(5)) == 5);
  CHECK(abs_if_real_integerlike(CycloInt(0)) == 0);
  CHECK(abs_if_real_integerlike(CycloInt(-1860496)) == 1860496);
  CHECK_THROWS_AS(abs_if_real_integerlike(sqrt3), NotUnitTimesInteger);
  CHECK_THROWS_AS(abs_if_real_integerlike(CycloInt(1, 0, 0, 1)), NotUnitTimesInteger);
  CHECK_THROWS_AS(abs_if_real_integerlike(CycloInt(2) + sqrt3), NotUnitTimesInteger);
}

TEST_CASE("rendering") {
  CHECK(format_basis(CycloInt(0, 2, 0, -1)) == "2*zeta - zeta^3");
  CHECK(format_basis(CycloInt()) == "0");
  CHECK(format_basis(CycloInt(-3, 0, 1, 0)) == "-3 + zeta^2");
  CHECK(format_pretty(sqrt3) == "√3");
  CHECK(format_pretty(-sqrt3) == "-√3");
  CHECK(format_pretty(i_unit) == "i");
  CHECK(format_pretty(-i_unit) == "-i");
  CHECK(format_pretty(CycloInt(3)) == "3");
  CHECK(format_pretty(CycloInt(-1)) == "-1");
  CHECK(format_pretty(CycloInt(1)) == "1");
  CHECK(format_pretty(CycloInt(-3)) == "-3");  // outside the alphabet: basis form
  CHECK_FALSE(pretty_symbol(CycloInt::omega()).has_value());
}
