#include "weave/weaving.hpp"

#include "weave/errors.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace weave {

namespace {

LaurentPoly t_linear(int c0, int c1) {  // c0 + c1 t
  return LaurentPoly(c0) + LaurentPoly::t_power(1, c1);
}

void require_n(int n) {
  if (n < 1) throw DomainError("W(3,n) needs n >= 1, got n = " + std::to_string(n));
}

void require_p(int p) {
  if (p < 2) throw DomainError("W(p,2) needs p >= 2, got p = " + std::to_string(p));
}

}  // namespace

PolyMatrix matrix_M() {
  const LaurentPoly t = t_pow(1);
  const LaurentPoly t_minus_1 = t_linear(-1, 1);
  PolyMatrix m(5, 5);
  m(0, 1) = -(t * t_minus_1);
  m(0, 4) = t_pow(2);
  m(1, 0) = -t_minus_1;
  m(1, 1) = -(t_minus_1 * t_minus_1);
  m(2, 1) = t;
  m(3, 0) = LaurentPoly(1);
  m(3, 1) = t_minus_1;
  m(4, 3) = t;
  return m;
}

PolyMatrix c1_vector() {
  PolyMatrix c(5, 1);
  c(1, 0) = -t_linear(-1, 1);
  c(3, 0) = LaurentPoly(1);
  return c;
}

PolyMatrix z_row() {
  const LaurentPoly one_plus_t = t_linear(1, 1);
  PolyMatrix z(1, 5);
  z(0, 0) = one_plus_t * one_plus_t;
  z(0, 1) = one_plus_t * t_pow(2);
  z(0, 2) = one_plus_t * t_pow(2);
  z(0, 3) = t_pow(4);
  z(0, 4) = t_pow(4);
  return z;
}

LaurentPoly jones_w3n(int n) {
  require_n(n);
  const PolyMatrix m = matrix_M();
  PolyMatrix state = c1_vector();
  for (int k = 1; k < n; ++k) state = m * state;
  const PolyMatrix v = z_row() * state;
  return t_pow(-n - 1) * v(0, 0);
}

W3nState w3n_state(int n) {
  require_n(n);
  const LaurentPoly t = t_pow(1);
  const LaurentPoly t_minus_1 = t_linear(-1, 1);
  W3nState s{LaurentPoly(), -t_minus_1, LaurentPoly(), LaurentPoly(1), LaurentPoly()};
  for (int k = 2; k <= n; ++k) {
    W3nState next;
    next.c0 = -(t * t_minus_1) * s.c1 + t_pow(2) * s.c21;
    next.c1 = -t_minus_1 * s.c0 - t_minus_1 * t_minus_1 * s.c1;
    next.c2 = t * s.c1;
    next.c12 = s.c0 + t_minus_1 * s.c1;
    next.c21 = t * s.c12;
    s = std::move(next);
  }
  return s;
}

LaurentPoly jones_w3n_scalar_recursion(int n) {
  const W3nState s = w3n_state(n);
  const LaurentPoly one_plus_t = t_linear(1, 1);
  LaurentPoly bracketed = one_plus_t * one_plus_t * s.c0 +
                          one_plus_t * (s.c1 + s.c2) * t_pow(2) + (s.c12 + s.c21) * t_pow(4);
  return t_pow(-n - 1) * bracketed;
}

LaurentPoly jones_wp2(int p) {
  require_p(p);
  const LaurentPoly z = z_variable();
  std::vector<LaurentPoly> v(static_cast<std::size_t>(std::max(p, 3)) + 1);
  v[2] = -(LaurentPoly::monomial(1, 5) + LaurentPoly::monomial(1, 1));
  v[3] = t_pow(-2) - t_pow(-1) * z * v[2];
  for (int k = 4; k <= p; ++k) {
    if (k % 2 == 0)
      v[k] = t_pow(2) * v[k - 2] + t_pow(1) * z * v[k - 1];
    else
      v[k] = t_pow(-2) * v[k - 2] - t_pow(-1) * z * v[k - 1];
  }
  return v[static_cast<std::size_t>(p)];
}

CycloInt eval_w3n_at_w(int n) {
  require_n(n);
  switch (n % 4) {
    case 0: return CycloInt(3);
    case 2: return CycloInt(-1);
    default: return CycloInt(1);
  }
}

CycloInt eval_wp2_at_w(int p) {
  require_p(p);
  const int half = p / 2;
  if (p % 2 == 0) {
    if (half % 2 == 1) {  // half = 2k - 1: (-1)^k i
      const int k = (half + 1) / 2;
      return k % 2 == 0 ? CycloInt::i_unit() : -CycloInt::i_unit();
    }
    const int k = half / 2;  // half = 2k: (-1)^(k+1) sqrt3
    return k % 2 == 1 ? CycloInt::sqrt3() : -CycloInt::sqrt3();
  }
  switch (half % 4) {
    case 1:
    case 2: return CycloInt(-1);
    default: return CycloInt(1);
  }
}

BigInt det_w3n(int n) {
  require_n(n);
  BigInt prev = 1, cur = 5;
  if (n == 1) return prev;
  for (int k = 3; k <= n; ++k) {
    BigInt next = 3 * cur - prev + 2;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt det_wp2(int p) {
  require_p(p);
  const int k = p / 2;
  BigInt prev = p % 2 == 0 ? 2 : 5;
  BigInt cur = p % 2 == 0 ? 12 : 29;
  if (k == 1) return prev;
  for (int j = 3; j <= k; ++j) {
    BigInt next = 6 * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

CycloMatrix matrix_M_at_omega() { return eval_matrix(matrix_M(), kAtOmega); }

CycloMatrix a_matrix(int i) {
  if (i < 1) throw DomainError("A_i needs i >= 1");
  // w^(-i-1) = zeta^(-2i-2)
  return CycloInt::zeta_power(-2LL * i - 2) * matrix_M_at_omega().pow(static_cast<unsigned>(i - 1));
}

}  // namespace weave
