#include "weave/cyclotomic.hpp"

#include "weave/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace weave {

namespace {

// Fold a degree <= 6 coefficient vector back into the basis using
// zeta^d = zeta^(d-2) - zeta^(d-4).
CycloInt reduce(std::array<BigInt, 7> r) {
  for (int d = 6; d >= 4; --d) {
    if (r[d] == 0) continue;
    r[d - 2] += r[d];
    r[d - 4] -= r[d];
    r[d] = 0;
  }
  return CycloInt(r[0], r[1], r[2], r[3]);
}

const std::array<CycloInt, 12>& zeta_table() {
  static const std::array<CycloInt, 12> table = [] {
    std::array<CycloInt, 12> t;
    t[0] = CycloInt(1);
    for (int k = 1; k < 12; ++k) {
      const auto& prev = t[k - 1].coeffs();
      // multiply by zeta: shift up one degree
      t[k] = reduce({0, prev[0], prev[1], prev[2], prev[3], 0, 0});
    }
    return t;
  }();
  return table;
}

}  // namespace

CycloInt CycloInt::zeta_power(long long k) {
  long long m = k % 12;
  if (m < 0) m += 12;
  return zeta_table()[static_cast<std::size_t>(m)];
}

bool CycloInt::is_zero() const {
  return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

CycloInt CycloInt::conj() const {
  CycloInt out;
  for (int k = 0; k < 4; ++k) {
    if (c_[k] == 0) continue;
    out += CycloInt(c_[k]) * zeta_power(-k);
  }
  return out;
}

std::optional<BigInt> CycloInt::as_integer() const {
  if (c_[1] != 0 || c_[2] != 0 || c_[3] != 0) return std::nullopt;
  return c_[0];
}

CycloInt& CycloInt::operator+=(const CycloInt& rhs) {
  for (int k = 0; k < 4; ++k) c_[k] += rhs.c_[k];
  return *this;
}

CycloInt& CycloInt::operator-=(const CycloInt& rhs) {
  for (int k = 0; k < 4; ++k) c_[k] -= rhs.c_[k];
  return *this;
}

CycloInt CycloInt::operator-() const {
  return CycloInt(-c_[0], -c_[1], -c_[2], -c_[3]);
}

CycloInt operator*(const CycloInt& a, const CycloInt& b) {
  std::array<BigInt, 7> r{0, 0, 0, 0, 0, 0, 0};
  for (int i = 0; i < 4; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < 4; ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return reduce(std::move(r));
}

CycloInt CycloInt::pow(unsigned exponent) const {
  CycloInt result(1);
  CycloInt base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

double CycloInt::real_approx() const {
  double x = 0;
  for (int k = 0; k < 4; ++k)
    x += c_[k].convert_to<double>() * std::cos(k * std::numbers::pi / 6);
  return x;
}

double CycloInt::imag_approx() const {
  double y = 0;
  for (int k = 0; k < 4; ++k)
    y += c_[k].convert_to<double>() * std::sin(k * std::numbers::pi / 6);
  return y;
}

CycloInt eval_at(const LaurentPoly& p, long long half_power_of_zeta) {
  // Collect coefficients by residue mod 12 first; one multiply per residue.
  std::array<BigInt, 12> by_residue{};
  for (const auto& [e, c] : p.terms()) {
    long long m = (e * half_power_of_zeta) % 12;
    if (m < 0) m += 12;
    by_residue[static_cast<std::size_t>(m)] += c;
  }
  CycloInt out;
  for (int m = 0; m < 12; ++m) {
    if (by_residue[m] == 0) continue;
    out += CycloInt(by_residue[m]) * CycloInt::zeta_power(m);
  }
  return out;
}

LMDecomposition lm_decompose(const CycloInt& v, unsigned mu) {
  if (mu < 1) throw DomainError("lm_decompose: component count must be positive");
  auto norm = v.norm().as_integer();
  if (!norm || *norm <= 0)
    throw NotLMForm("value " + format_basis(v) + " has no power-of-3 norm");

  BigInt m = *norm;
  unsigned n = 0;
  while (m % 3 == 0) {
    m /= 3;
    ++n;
  }
  if (m != 1) throw NotLMForm("norm of " + format_basis(v) + " is not a power of 3");

  const CycloInt i_sqrt3 = CycloInt::i_unit() * CycloInt::sqrt3();
  const CycloInt base = CycloInt::zeta_power(3LL * (mu - 1)) * i_sqrt3.pow(n);
  if (v == base) return {n, 1};
  if (v == -base) return {n, -1};
  throw NotLMForm("value " + format_basis(v) + " is not +-i^(mu-1) (i sqrt3)^n for mu = " +
                  std::to_string(mu));
}

BigInt abs_if_real_integerlike(const CycloInt& v) {
  auto norm = v.norm().as_integer();
  if (!norm || *norm < 0)
    throw NotUnitTimesInteger("norm of " + format_basis(v) + " is not a rational integer");
  BigInt d = boost::multiprecision::sqrt(*norm);
  if (d * d != *norm)
    throw NotUnitTimesInteger("norm of " + format_basis(v) + " is not a perfect square");
  return d;
}

std::string format_basis(const CycloInt& v) {
  static const char* const names[4] = {"", "zeta", "zeta^2", "zeta^3"};
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    const BigInt& c = v[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    if (k == 0)
      out << magnitude;
    else if (magnitude == 1)
      out << names[k];
    else
      out << magnitude << '*' << names[k];
  }
  return first ? "0" : out.str();
}

std::optional<std::string> pretty_symbol(const CycloInt& v) {
  static const std::array<std::pair<CycloInt, const char*>, 7> alphabet = {{
      {CycloInt(1), "1"},
      {CycloInt(-1), "-1"},
      {CycloInt::i_unit(), "i"},
      {-CycloInt::i_unit(), "-i"},
      {CycloInt::sqrt3(), "√3"},
      {-CycloInt::sqrt3(), "-√3"},
      {CycloInt(3), "3"},
  }};
  for (const auto& [value, symbol] : alphabet)
    if (value == v) return std::string(symbol);
  return std::nullopt;
}

std::string format_pretty(const CycloInt& v) {
  if (auto s = pretty_symbol(v)) return *s;
  return format_basis(v);
}

}  // namespace weave
