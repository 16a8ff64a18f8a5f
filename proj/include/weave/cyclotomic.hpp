#pragma once

// Exact arithmetic in Z[zeta], zeta = exp(i pi / 6), with zeta^4 = zeta^2 - 1.
//
// Every value is stored as c0 + c1 zeta + c2 zeta^2 + c3 zeta^3. The ring
// contains the points where Jones polynomials are evaluated here:
//   w = exp(i pi / 3) = zeta^2,   i = zeta^3,   -1 = zeta^6,
// together with sqrt(3) = 2 zeta - zeta^3.

#include "weave/laurent_poly.hpp"

#include <array>
#include <optional>
#include <string>

namespace weave {

class CycloInt {
public:
  using Coeffs = std::array<BigInt, 4>;

  CycloInt() = default;
  explicit CycloInt(BigInt c0) : c_{std::move(c0), 0, 0, 0} {}
  CycloInt(BigInt c0, BigInt c1, BigInt c2, BigInt c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  // zeta^k for any integer k (period 12).
  static CycloInt zeta_power(long long k);
  static CycloInt i_unit() { return zeta_power(3); }
  static CycloInt omega() { return zeta_power(2); }
  static CycloInt sqrt3() { return CycloInt(0, 2, 0, -1); }

  const Coeffs& coeffs() const noexcept { return c_; }
  const BigInt& operator[](std::size_t k) const { return c_[k]; }
  bool is_zero() const;

  // Complex conjugation, the automorphism zeta -> zeta^-1.
  CycloInt conj() const;
  // v * conj(v); always lies in the real subring Z[sqrt3].
  CycloInt norm() const { return *this * conj(); }
  // Some(n) iff the value is the rational integer n.
  std::optional<BigInt> as_integer() const;

  CycloInt& operator+=(const CycloInt& rhs);
  CycloInt& operator-=(const CycloInt& rhs);
  CycloInt operator-() const;
  friend CycloInt operator+(CycloInt a, const CycloInt& b) { return a += b; }
  friend CycloInt operator-(CycloInt a, const CycloInt& b) { return a -= b; }
  friend CycloInt operator*(const CycloInt& a, const CycloInt& b);
  CycloInt& operator*=(const CycloInt& rhs) { return *this = *this * rhs; }
  friend bool operator==(const CycloInt&, const CycloInt&) = default;

  CycloInt pow(unsigned exponent) const;

  // Numerical embedding, for sanity checks only.
  double real_approx() const;
  double imag_approx() const;

private:
  Coeffs c_{0, 0, 0, 0};
};

// Image of p under s = t^(1/2) -> zeta^half_power_of_zeta.
// half_power_of_zeta = 1 evaluates at t = w, 3 at t = -1.
CycloInt eval_at(const LaurentPoly& p, long long half_power_of_zeta);

inline constexpr long long kAtOmega = 1;
inline constexpr long long kAtMinusOne = 3;

// v = sign * i^(mu-1) * (i sqrt3)^n_L
struct LMDecomposition {
  unsigned n_L = 0;
  int sign = 1;
};

// Throws NotLMForm unless v has the shape above; DomainError if mu < 1.
LMDecomposition lm_decompose(const CycloInt& v, unsigned mu);

// The d >= 0 with v conj(v) = d^2; throws NotUnitTimesInteger otherwise.
BigInt abs_if_real_integerlike(const CycloInt& v);

// "c0 + c1*zeta + c2*zeta^2 + c3*zeta^3" with zero terms dropped.
std::string format_basis(const CycloInt& v);
// One of 1, -1, i, -i, √3, -√3, 3 when v is in that set.
std::optional<std::string> pretty_symbol(const CycloInt& v);
// pretty_symbol with format_basis as the fallback.
std::string format_pretty(const CycloInt& v);

}  // namespace weave
