#include "qeuler/closed_forms.hpp"

#include <stdexcept>

#include "qeuler/errors.hpp"

namespace qeuler {
namespace {

/// binom(size, m-k) - binom(size, m-k-1) with m = floor(size/2).
Integer ballot(long size, long k) {
  const long m = size / 2;
  return binom_safe(size, m - k) - binom_safe(size, m - k - 1);
}

Integer sign(long e) { return e % 2 == 0 ? 1 : -1; }

void require_nonnegative(const char* what, int n) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative argument");
}

/// sum_{i=0}^k y^i q^{i(k+1-i)}
Poly y_row(int k) {
  std::vector<Term> terms;
  for (int i = 0; i <= k; ++i) terms.push_back(Term{1, i, i * (k + 1 - i)});
  return Poly::from_terms(std::move(terms));
}

}  // namespace

FormulaResult make_formula(Poly numerator, int power) {
  FormulaResult r;
  r.value = exact_div_one_minus_q_pow(numerator, power);
  r.numerator = std::move(numerator);
  r.divisor_power = power;
  return r;
}

Poly p_k(int k) {
  if (k < -1) throw std::invalid_argument("p_k: k must be at least -1");
  std::vector<Term> terms;
  for (int j = 0; j <= 2 * k + 1; ++j) terms.push_back(Term{sign(j + k), 0, j * (2 * k + 2 - j)});
  return Poly::from_terms(std::move(terms));
}

Poly m_k_closed(int k) {
  require_nonnegative("m_k_closed", k);
  std::vector<Term> terms;
  for (int j = 0; j <= 2 * k; ++j) terms.push_back(Term{sign(j + k), 0, j * (2 * k - j) + k});
  return Poly::from_terms(std::move(terms));
}

Poly n_k_closed(int k) {
  require_nonnegative("n_k_closed", k);
  return exact_div_one_minus_q_pow(p_k(k) + p_k(k - 1), 1);
}

FormulaResult tangent_formula(int n) {
  require_nonnegative("tangent_formula", n);
  Poly numerator;
  for (int k = 0; k <= n; ++k) numerator += p_k(k).scaled(ballot(2 * n + 1, k));
  return make_formula(std::move(numerator), 2 * n + 1);
}

FormulaResult secant_formula(int n) {
  require_nonnegative("secant_formula", n);
  Poly numerator;
  for (int k = 0; k <= n; ++k) numerator += m_k_closed(k).scaled(ballot(2 * n, k));
  return make_formula(std::move(numerator), 2 * n);
}

FormulaResult a_n_formula(int n) {
  require_nonnegative("a_n_formula", n);
  Poly numerator;
  for (int k = 0; k <= n; ++k) {
    std::vector<Term> left;
    for (int j = 0; j <= n - k; ++j) {
      left.push_back(Term{binom_safe(n, j) * binom_safe(n, j + k) -
                              binom_safe(n, j - 1) * binom_safe(n, j + k + 1),
                          j, 0});
    }
    numerator += (Poly::from_terms(std::move(left)) * y_row(k)).scaled(sign(k));
  }
  return make_formula(std::move(numerator), n);
}

Poly c_nkj(int n, int k, int j) {
  std::vector<Term> terms;
  for (int i = 0; i <= j; ++i) {
    terms.push_back(Term{binom_safe(n, j) * binom_safe(j, i) * binom_safe(n - j, i + k), 0, j - i});
    terms.push_back(Term{-(binom_safe(n, j - 1) * binom_safe(j - 1, i - 1) *
                           binom_safe(n - j + 1, i + k + 1)),
                         0, j - i});
  }
  return Poly::from_terms(std::move(terms));
}

FormulaResult b_n_formula(int n) {
  require_nonnegative("b_n_formula", n);
  Poly numerator;
  for (int k = 0; k <= n; ++k) {
    Poly left;
    for (int j = 0; j <= n - k; ++j) left += c_nkj(n, k, j).scaled(1, j, 0);
    numerator += (left * y_row(k)).scaled(sign(k));
  }
  return make_formula(std::move(numerator), n);
}

FormulaResult touchard_formula(int n) {
  require_nonnegative("touchard_formula", n);
  std::vector<Term> terms;
  for (int k = 0; k <= n; ++k) terms.push_back(Term{ballot(2 * n, k) * sign(k), 0, k * (k + 1) / 2});
  return make_formula(Poly::from_terms(std::move(terms)), n);
}

Poly tangent_closed(int n) {
  FormulaResult r = tangent_formula(n);
  if (!r.value.has_nonnegative_coefficients() || !r.value.is_polynomial()) {
    throw NotPolynomial("tangent_closed: negative coefficient or exponent");
  }
  return r.value;
}

Poly secant_closed(int n) { return secant_formula(n).value; }
Poly a_n_closed(int n) { return a_n_formula(n).value; }
Poly b_n_closed(int n) { return b_n_formula(n).value; }
Poly touchard_riordan(int n) { return touchard_formula(n).value; }

Poly williams_q_eulerian(int k, int n) {
  if (k < 0 || k > n) throw std::invalid_argument("williams_q_eulerian: need 0 <= k <= n");
  if (n == 0) return Poly(1);
  Poly total;
  for (int i = 0; i < k; ++i) {
    Poly bracket = Poly::monomial(binom_safe(n, i), 0, k - i) + Poly(binom_safe(n, i - 1));
    total += (pow(q_integer(k - i), static_cast<unsigned>(n)) * bracket)
                 .scaled(sign(i), 0, k * i - k * k);
  }
  if (!total.is_polynomial()) {
    throw NotPolynomial("williams_q_eulerian(" + std::to_string(k) + "," + std::to_string(n) +
                        ") has negative powers of q");
  }
  return total;
}

Poly tangent_via_nk(int n) {
  require_nonnegative("tangent_via_nk", n);
  Poly numerator;
  for (int k = 0; k <= n; ++k) numerator += n_k_closed(k).scaled(ballot(2 * n, k));
  return exact_div_one_minus_q_pow(numerator, 2 * n);
}

Integer g_sum(int n, int k) {
  require_nonnegative("g_sum", n);
  Integer total = 0;
  for (int j = 0; j <= 2 * n + 1; ++j) {
    total += sign(j) * binom_safe(2 * n + 1, j) * binom_safe(2 * n + 1, j + k);
  }
  return total;
}

Integer g_closed_value(int n, int k) {
  if (k % 2 == 0) return 0;
  const int m = (k - 1) / 2;
  return sign(n + m) * binom_safe(2 * n + 1, n - m);
}

ParityParts parity_parts(int n) {
  require_nonnegative("parity_parts", n);
  ParityParts parts;
  for (int k = 0; k <= n / 2; ++k) {
    const Integer weight = binom_safe(n, k) - binom_safe(n, k - 1);
    for (int i = 0; i <= n - 2 * k; ++i) {
      const Integer c = weight * sign(k + i);
      const int base = i * (n - 2 * k - i);
      parts.first += HalfExponentPolynomial::half_monomial(c, 2 * (base + i));
      parts.second += HalfExponentPolynomial::half_monomial(c, 2 * base + n - 2 * k);
    }
  }
  return parts;
}

Poly parity_independent_e(int n) {
  require_nonnegative("parity_independent_e", n);
  if (n == 0) return Poly(1);
  const ParityParts parts = parity_parts(n);
  const Poly numerator = (parts.first + parts.second).to_q();
  return exact_div_one_minus_q_pow(numerator.scaled(sign(n / 2)), n);
}

Poly weighted_involution_sum(int n) {
  require_nonnegative("weighted_involution_sum", n);
  std::vector<Term> terms;
  for (int k = 0; k <= n; ++k) {
    const Integer weight = binom_safe(n, k) - binom_safe(n, k - 1);
    for (int j = k; j <= n; ++j) terms.push_back(Term{weight * sign(j), 0, (j - k) * (n - j - k) - k});
  }
  return Poly::from_terms(std::move(terms));
}

Poly secant_via_involutions(int n) {
  require_nonnegative("secant_via_involutions", n);
  const Poly scaled = weighted_involution_sum(2 * n).scaled(sign(n), 0, n);
  return exact_div_one_minus_q_pow(scaled, 2 * n);
}

}  // namespace qeuler
