#pragma once

// Closed formulas for q-Euler numbers, A_n, B_n, q-Eulerian numbers and the
// crossing distribution of involutions. Every quotient by a power of (1-q)
// is checked to be exact.

#include "qeuler/polynomial.hpp"

namespace qeuler {

/// value * (1-q)^divisor_power == numerator
struct FormulaResult {
  Poly value;
  Poly numerator;
  int divisor_power = 0;
};

/// Divides numerator by (1-q)^power, throwing NotDivisible on a remainder.
FormulaResult make_formula(Poly numerator, int power);

FormulaResult tangent_formula(int n);
FormulaResult secant_formula(int n);
FormulaResult a_n_formula(int n);
FormulaResult b_n_formula(int n);
FormulaResult touchard_formula(int n);

/// E_{2n+1}(q)
Poly tangent_closed(int n);
/// E_{2n}(q)
Poly secant_closed(int n);
/// A_n(y,q)
Poly a_n_closed(int n);
/// B_n(y,q)
Poly b_n_closed(int n);
/// The q-polynomial C(n,k,j) appearing in b_n_closed.
Poly c_nkj(int n, int k, int j);
/// sum over fixed-point-free involutions of size 2n of q^{cr/2}
Poly touchard_riordan(int n);

/// q-Eulerian number; throws NotPolynomial if negative powers survive.
/// (0,0) gives 1 (the empty tableau), whereas the sum itself is empty.
Poly williams_q_eulerian(int k, int n);

/// sum_{j=0}^{2k+1} (-1)^{j+k} q^{j(2k+2-j)}, and 0 for k = -1.
Poly p_k(int k);
/// sum_{j=0}^{2k} (-1)^{j+k} q^{j(2k-j)+k}
Poly m_k_closed(int k);
/// (P_k + P_{k-1}) / (1-q)
Poly n_k_closed(int k);

/// E_{2n+1}(q) as (1-q)^{-2n} sum_k (binom(2n,n-k) - binom(2n,n-k-1)) N_k(q).
Poly tangent_via_nk(int n);

/// sum_j (-1)^j binom(2n+1,j) binom(2n+1,j+k)
Integer g_sum(int n, int k);
/// 0 for even k, (-1)^{n+(k-1)/2} binom(2n+1, n-(k-1)/2) for odd k.
Integer g_closed_value(int n, int k);

struct ParityParts {
  /// sum_k ballot(n,k) sum_i (-1)^{k+i} q^{i(n-2k-i)+i}
  HalfExponentPolynomial first;
  /// sum_k ballot(n,k) sum_i (-1)^{k+i} q^{i(n-2k-i)+n/2-k}
  HalfExponentPolynomial second;
};

/// The two numerators whose sum, times (-1)^{floor(n/2)} (1-q)^{-n}, is E_n.
ParityParts parity_parts(int n);
/// E_n(q) from the parity-independent formula; n = 0 returns 1.
Poly parity_independent_e(int n);

/// sum_{0<=k<=j<=n} (-1)^j (binom(n,k) - binom(n,k-1)) q^{(j-k)(n-j-k)-k}
Poly weighted_involution_sum(int n);
/// (-q)^n (q-1)^{-2n} weighted_involution_sum(2n)
Poly secant_via_involutions(int n);

}  // namespace qeuler
