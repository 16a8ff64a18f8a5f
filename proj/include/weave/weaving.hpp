#pragma once

// Closed forms and recurrences for the weaving families W(3,n) and W(p,2).
//
// W(3,n) is computed from the 5x5 transfer system
//   C_n = M C_{n-1},  V = t^(-n-1) Z C_n,
// with state vector C_n = [C_{n,0}, C_{n,1}, C_{n,2}, C_{n,12}, C_{n,21}]^T.
// W(p,2) is computed from the interleaved even/odd skein recursion in
// z = t^(1/2) - t^(-1/2).

#include "weave/cyclotomic.hpp"
#include "weave/laurent_poly.hpp"
#include "weave/poly_matrix.hpp"

namespace weave {

// Transfer matrix M(t), 5x5.
PolyMatrix matrix_M();
// Initial state C_1(t) = [0, -(t-1), 0, 1, 0]^T, 5x1.
PolyMatrix c1_vector();
// Read-out row Z(t) = [(1+t)^2, (1+t)t^2, (1+t)t^2, t^4, t^4], 1x5.
PolyMatrix z_row();

// Components of C_n, indexed like the state vector.
struct W3nState {
  LaurentPoly c0, c1, c2, c12, c21;
};
W3nState w3n_state(int n);

// Jones polynomial of W(3,n) by matrix powering: Z (t^(-n-1) M^(n-1)) C_1.
LaurentPoly jones_w3n(int n);
// Same value through the five scalar recurrences.
LaurentPoly jones_w3n_scalar_recursion(int n);
// Jones polynomial of W(p,2).
LaurentPoly jones_wp2(int p);

// V(w), w = exp(i pi/3), from the residue of n mod 4.
CycloInt eval_w3n_at_w(int n);
// V(w) for W(p,2), from the period-4 patterns in p/2 and (p-1)/2.
CycloInt eval_wp2_at_w(int p);

// det W(3,n): d_1 = 1, d_2 = 5, d_n = 3 d_{n-1} - d_{n-2} + 2.
BigInt det_w3n(int n);
// det W(p,2): x_{k+1} = 6 x_k - x_{k-1}; seeds 2, 12 for p = 2k and 5, 29 for p = 2k+1.
BigInt det_wp2(int p);

// M evaluated at t = w.
CycloMatrix matrix_M_at_omega();
// A_i = w^(-i-1) M(w)^(i-1), i >= 1.
CycloMatrix a_matrix(int i);

}  // namespace weave
