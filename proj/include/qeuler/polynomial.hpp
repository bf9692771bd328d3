#pragma once

// Exact bivariate Laurent polynomials in y and q with arbitrary precision
// integer coefficients.

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qeuler {

using Integer = mpz_class;

struct Term {
  Integer coef;
  int y_exp = 0;
  int q_exp = 0;

  friend bool operator==(const Term& a, const Term& b) {
    return a.y_exp == b.y_exp && a.q_exp == b.q_exp && a.coef == b.coef;
  }
};

/// Sparse polynomial in y and q. Terms are kept sorted by (y_exp, q_exp)
/// ascending with no zero coefficients, so structural equality is equality
/// of polynomials.
class Poly {
 public:
  Poly() = default;
  Poly(long constant);  // NOLINT(google-explicit-constructor)
  explicit Poly(const Integer& constant);

  static Poly monomial(const Integer& coef, int y_exp, int q_exp);
  static Poly y(int exp = 1) { return monomial(1, exp, 0); }
  static Poly q(int exp = 1) { return monomial(1, 0, exp); }
  /// Builds the canonical form of an arbitrary term list (duplicates are
  /// merged, zeros dropped).
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// True when no term involves y.
  bool is_q_only() const;
  /// True when every exponent is nonnegative.
  bool is_polynomial() const;
  bool has_nonnegative_coefficients() const;
  int min_q_exp() const;
  int max_q_exp() const;
  int max_y_exp() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Multiplies by coef * y^dy * q^dq.
  Poly scaled(const Integer& coef, int dy = 0, int dq = 0) const;

  /// Replaces y by sign * q^q_power.
  Poly substitute_y(int sign, int q_power) const;
  /// The q-polynomial multiplying y^k.
  Poly coefficient_of_y(int k) const;
  /// Coefficient of y^yk q^qk.
  Integer coefficient(int y_exp, int q_exp) const;

  /// Evaluates at integer points. Negative exponents are only allowed when
  /// the corresponding value is +1 or -1.
  Integer evaluate(long y_value, long q_value) const;

  /// Human-readable form, e.g. "2 + 5q + 5q^2" or "y + y^2q".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

Poly pow(const Poly& base, unsigned exponent);

/// [n]_q = 1 + q + ... + q^{n-1}.
Poly q_integer(int n);

/// Binomial coefficient, 0 whenever k < 0 or k > n (and for n < 0).
Integer binom_safe(long n, long k);

/// (1 - q)^m.
Poly one_minus_q_pow(int m);

/// Quotient of p by (1-q)^m; throws NotDivisible if the remainder is nonzero.
Poly exact_div_one_minus_q_pow(const Poly& p, int m);

/// JSON serialization {"vars":["y","q"],"terms":[[coef,yExp,qExp],...]}
/// with terms in canonical order and integers in full decimal.
std::string to_json(const Poly& p);
/// Inverse of to_json; throws std::invalid_argument on malformed input.
Poly poly_from_json(std::string_view text);

/// Polynomial in s where q = s^2. Stores the s-exponent in the q slot of a
/// Poly so half-integer q-powers stay integral.
class HalfExponentPolynomial {
 public:
  HalfExponentPolynomial() = default;

  /// Embeds an ordinary polynomial in q (q^a becomes s^{2a}).
  static HalfExponentPolynomial from_q(const Poly& p);
  /// coef * q^{half_exp/2}.
  static HalfExponentPolynomial half_monomial(const Integer& coef, int half_exp);

  const Poly& in_s() const { return s_poly_; }
  bool is_zero() const { return s_poly_.is_zero(); }
  /// True when every s-exponent is even.
  bool is_integral() const;
  /// Back to q; throws HalfPowerResidue if an odd s-power survived.
  Poly to_q() const;

  HalfExponentPolynomial& operator+=(const HalfExponentPolynomial& other);
  friend HalfExponentPolynomial operator+(HalfExponentPolynomial a,
                                          const HalfExponentPolynomial& b) {
    return a += b;
  }
  friend HalfExponentPolynomial operator*(const HalfExponentPolynomial& a,
                                          const HalfExponentPolynomial& b);
  friend bool operator==(const HalfExponentPolynomial& a, const HalfExponentPolynomial& b) {
    return a.s_poly_ == b.s_poly_;
  }

 private:
  explicit HalfExponentPolynomial(Poly s_poly) : s_poly_(std::move(s_poly)) {}
  Poly s_poly_;
};

}  // namespace qeuler
