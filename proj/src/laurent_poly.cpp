#include "weave/laurent_poly.hpp"

#include "weave/errors.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace weave {

LaurentPoly::LaurentPoly(BigInt constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(BigInt coeff, Exponent half_exponent) {
  LaurentPoly p;
  p.add_term(half_exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::t_power(Exponent k, BigInt coeff) {
  return monomial(std::move(coeff), 2 * k);
}

LaurentPoly LaurentPoly::from_terms(const TermMap& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

BigInt LaurentPoly::coefficient(Exponent half_exponent) const {
  auto it = terms_.find(half_exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPoly::Exponent LaurentPoly::min_exponent() const { return terms_.begin()->first; }
LaurentPoly::Exponent LaurentPoly::max_exponent() const { return terms_.rbegin()->first; }

void LaurentPoly::add_term(Exponent e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::mirror() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

BigInt LaurentPoly::sum_of_coefficients() const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

LaurentPoly z_variable() {
  return LaurentPoly::monomial(1, 1) - LaurentPoly::monomial(1, -1);
}

namespace {

std::string power_of_t(LaurentPoly::Exponent half) {
  if (half % 2 == 0) {
    auto k = half / 2;
    if (k == 1) return "t";
    return "t^" + std::to_string(k);
  }
  return "t^(" + std::to_string(half) + "/2)";
}

template <class PowerFn>
std::string render(const LaurentPoly& p, PowerFn power) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    if (e == 0)
      out << magnitude;
    else if (magnitude == 1)
      out << power(e);
    else
      out << magnitude << '*' << power(e);
  }
  return out.str();
}

class PolyParser {
public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    LaurentPoly result;
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      result += parse_term(sign);
      skip_ws();
      if (at_end()) break;
    }
    return result;
  }

private:
  LaurentPoly parse_term(int sign) {
    BigInt coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_digits();
      have_coeff = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 't') fail("expected 't' after '*'");
      }
    }
    LaurentPoly::Exponent half = 0;
    if (peek() == 't') {
      ++pos_;
      half = 2;
      if (peek() == '^') {
        ++pos_;
        half = parse_exponent();
      }
    } else if (!have_coeff) {
      fail("expected a coefficient or 't'");
    }
    return LaurentPoly::monomial(sign * coeff, half);
  }

  LaurentPoly::Exponent parse_exponent() {
    if (peek() == '(') {
      ++pos_;
      skip_ws();
      auto numer = parse_signed_small();
      skip_ws();
      LaurentPoly::Exponent denom = 1;
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        denom = parse_signed_small();
        if (denom != 1 && denom != 2) fail("exponent denominator must be 1 or 2");
        skip_ws();
      }
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return numer * (2 / denom);
    }
    return 2 * parse_signed_small();
  }

  LaurentPoly::Exponent parse_signed_small() {
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    BigInt v = parse_digits();
    if (v > 1'000'000'000) fail("exponent out of range");
    auto e = v.convert_to<LaurentPoly::Exponent>();
    return negative ? -e : e;
  }

  BigInt parse_digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format(const LaurentPoly& p) { return render(p, power_of_t); }

std::string format_whole(const LaurentPoly& p, std::string_view variable) {
  std::string var(variable);
  return render(p, [&var](LaurentPoly::Exponent e) {
    return e == 1 ? var : var + "^" + std::to_string(e);
  });
}

LaurentPoly parse_laurent(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace weave
