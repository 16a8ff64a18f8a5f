#pragma once

/*
 * Sparse Laurent polynomials in s = t^(1/2) with arbitrary-precision integer
 * coefficients.
 *
 * Exponents are stored in half-units of t: the key k stands for s^k = t^(k/2).
 * Knots have only even keys, two-component links only odd keys, so both live
 * in the same type. The same container doubles as a polynomial in the bracket
 * variable A (keys are then whole powers of A); see bracket.hpp.
 *
 * Values are canonical: no zero coefficient is ever stored, so equality of
 * polynomials is equality of their term maps.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace weave {

using BigInt = boost::multiprecision::cpp_int;

class LaurentPoly {
public:
  using Exponent = std::int64_t;
  using TermMap = std::map<Exponent, BigInt>;

  LaurentPoly() = default;
  explicit LaurentPoly(BigInt constant);

  // coeff * s^half_exponent; zero coeff gives the zero polynomial.
  static LaurentPoly monomial(BigInt coeff, Exponent half_exponent);
  // t^k for integer k, i.e. s^(2k).
  static LaurentPoly t_power(Exponent k, BigInt coeff = 1);
  static LaurentPoly from_terms(const TermMap& terms);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  BigInt coefficient(Exponent half_exponent) const;

  Exponent min_exponent() const;  // requires !is_zero()
  Exponent max_exponent() const;  // requires !is_zero()

  // Substitution t -> 1/t.
  LaurentPoly mirror() const;
  // Value at t = 1 (s = 1).
  BigInt sum_of_coefficients() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  LaurentPoly pow(unsigned exponent) const;

private:
  void add_term(Exponent e, const BigInt& c);

  TermMap terms_;
};

// Convenience aliases for the constants that appear everywhere.
inline LaurentPoly t_pow(LaurentPoly::Exponent k) { return LaurentPoly::t_power(k); }
LaurentPoly z_variable();  // t^(1/2) - t^(-1/2)

// Text form, e.g. "-t^(1/2) - t^(5/2)" or "t^-2 - t^-1 + 1 - t + t^2".
// Terms are emitted in increasing exponent order; the zero polynomial is "0".
std::string format(const LaurentPoly& p);
// Same polynomial rendered as an integer-exponent polynomial in `variable`
// (keys taken as whole powers), used for Kauffman brackets in A.
std::string format_whole(const LaurentPoly& p, std::string_view variable);

// Accepts the grammar produced by format() plus "c*t^k", "c t^k" and
// parenthesised exponents "t^(k)", "t^(k/2)". Throws ParseError.
LaurentPoly parse_laurent(std::string_view text);

}  // namespace weave
