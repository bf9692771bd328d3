#include "qeuler/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "qeuler/errors.hpp"

namespace qeuler {

namespace {

bool key_less(const Term& a, const Term& b) {
  return a.y_exp != b.y_exp ? a.y_exp < b.y_exp : a.q_exp < b.q_exp;
}

// Sorts, merges equal keys, drops zeros.
void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), key_less);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term acc = std::move(terms[i]);
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].y_exp == acc.y_exp && terms[j].q_exp == acc.q_exp; ++j) {
      acc.coef += terms[j].coef;
    }
    if (acc.coef != 0) terms[out++] = std::move(acc);
    i = j;
  }
  terms.resize(out);
}

// Merge of two canonical lists, the second scaled by `sign`.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && key_less(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || key_less(b[j], a[i])) {
      Term t = b[j++];
      if (sign < 0) t.coef = -t.coef;
      out.push_back(std::move(t));
    } else {
      Term t = a[i++];
      if (sign < 0) {
        t.coef -= b[j++].coef;
      } else {
        t.coef += b[j++].coef;
      }
      if (t.coef != 0) out.push_back(std::move(t));
    }
  }
  return out;
}

Integer int_pow(long base, int exp) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), Integer(base).get_mpz_t(), static_cast<unsigned long>(exp));
  return result;
}

Integer eval_power(long value, int exp) {
  if (exp >= 0) return int_pow(value, exp);
  if (value == 1) return 1;
  if (value == -1) return (-exp) % 2 == 0 ? 1 : -1;
  throw std::domain_error("negative exponent at a non-unit evaluation point");
}

std::string monomial_text(int y_exp, int q_exp) {
  std::string s;
  if (y_exp != 0) {
    s += "y";
    if (y_exp != 1) s += "^" + std::to_string(y_exp);
  }
  if (q_exp != 0) {
    s += "q";
    if (q_exp != 1) s += "^" + std::to_string(q_exp);
  }
  return s;
}

}  // namespace

Poly::Poly(long constant) {
  if (constant != 0) terms_.push_back(Term{Integer(constant), 0, 0});
}

Poly::Poly(const Integer& constant) {
  if (constant != 0) terms_.push_back(Term{constant, 0, 0});
}

Poly Poly::monomial(const Integer& coef, int y_exp, int q_exp) {
  Poly p;
  if (coef != 0) p.terms_.push_back(Term{coef, y_exp, q_exp});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  canonicalize(terms);
  Poly p;
  p.terms_ = std::move(terms);
  return p;
}

bool Poly::is_q_only() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.y_exp == 0; });
}

bool Poly::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.y_exp >= 0 && t.q_exp >= 0; });
}

bool Poly::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coef > 0; });
}

int Poly::min_q_exp() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& t : terms_) m = std::min(m, t.q_exp);
  return terms_.empty() ? 0 : m;
}

int Poly::max_q_exp() const {
  int m = std::numeric_limits<int>::min();
  for (const auto& t : terms_) m = std::max(m, t.q_exp);
  return terms_.empty() ? 0 : m;
}

int Poly::max_y_exp() const { return terms_.empty() ? 0 : terms_.back().y_exp; }

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge(terms_, other.terms_, +1);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  if (b.terms_.size() == 1) {
    const Term& t = b.terms_.front();
    return a.scaled(t.coef, t.y_exp, t.q_exp);
  }
  if (a.terms_.size() == 1) {
    const Term& t = a.terms_.front();
    return b.scaled(t.coef, t.y_exp, t.q_exp);
  }
  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      products.push_back(Term{s.coef * t.coef, s.y_exp + t.y_exp, s.q_exp + t.q_exp});
    }
  }
  return Poly::from_terms(std::move(products));
}

Poly Poly::scaled(const Integer& coef, int dy, int dq) const {
  if (coef == 0) return Poly{};
  Poly p = *this;
  for (auto& t : p.terms_) {
    t.coef *= coef;
    t.y_exp += dy;
    t.q_exp += dq;
  }
  return p;
}

Poly Poly::substitute_y(int sign, int q_power) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term r{t.coef, 0, t.q_exp + t.y_exp * q_power};
    if (sign < 0 && t.y_exp % 2 != 0) r.coef = -r.coef;
    out.push_back(std::move(r));
  }
  return from_terms(std::move(out));
}

Poly Poly::coefficient_of_y(int k) const {
  Poly p;
  for (const auto& t : terms_) {
    if (t.y_exp == k) p.terms_.push_back(Term{t.coef, 0, t.q_exp});
  }
  return p;
}

Integer Poly::coefficient(int y_exp, int q_exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{0, y_exp, q_exp}, key_less);
  if (it != terms_.end() && it->y_exp == y_exp && it->q_exp == q_exp) return it->coef;
  return 0;
}

Integer Poly::evaluate(long y_value, long q_value) const {
  Integer sum = 0;
  for (const auto& t : terms_) {
    sum += t.coef * eval_power(y_value, t.y_exp) * eval_power(q_value, t.q_exp);
  }
  return sum;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coef < 0;
    Integer magnitude = abs(t.coef);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono = monomial_text(t.y_exp, t.q_exp);
    if (mono.empty()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str();
      out += mono;
    }
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

Poly pow(const Poly& base, unsigned exponent) {
  Poly result = 1;
  Poly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

Poly q_integer(int n) {
  if (n < 0) throw std::invalid_argument("q_integer: negative argument");
  std::vector<Term> terms;
  terms.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) terms.push_back(Term{1, 0, i});
  return Poly::from_terms(std::move(terms));
}

Integer binom_safe(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

Poly one_minus_q_pow(int m) { return pow(Poly(1) - Poly::q(), static_cast<unsigned>(m)); }

Poly exact_div_one_minus_q_pow(const Poly& p, int m) {
  if (m < 0) throw std::invalid_argument("exact_div_one_minus_q_pow: negative power");
  // Each y-slice is divided on its own. Dividing a Laurent polynomial in q
  // by (1-q) is a prefix sum over the dense coefficient range; the full sum
  // is the remainder and must vanish.
  std::vector<Term> quotient = p.terms();
  for (int round = 0; round < m; ++round) {
    std::vector<Term> next;
    for (std::size_t i = 0; i < quotient.size();) {
      const int y_exp = quotient[i].y_exp;
      std::size_t end = i;
      while (end < quotient.size() && quotient[end].y_exp == y_exp) ++end;
      const int low = quotient[i].q_exp;
      const int high = quotient[end - 1].q_exp;
      std::vector<Integer> dense(static_cast<std::size_t>(high - low + 1));
      for (std::size_t j = i; j < end; ++j) {
        dense[static_cast<std::size_t>(quotient[j].q_exp - low)] = quotient[j].coef;
      }
      Integer running = 0;
      for (int e = low; e <= high; ++e) {
        running += dense[static_cast<std::size_t>(e - low)];
        if (e < high && running != 0) next.push_back(Term{running, y_exp, e});
      }
      if (running != 0) {
        throw NotDivisible("polynomial " + p.to_string() + " is not divisible by (1-q)^" +
                           std::to_string(m));
      }
      i = end;
    }
    quotient = std::move(next);
  }
  return Poly::from_terms(std::move(quotient));
}

std::string to_json(const Poly& p) {
  std::string out = R"({"vars":["y","q"],"terms":[)";
  bool first = true;
  for (const auto& t : p.terms()) {
    if (!first) out += ",";
    out += "[" + t.coef.get_str() + "," + std::to_string(t.y_exp) + "," +
           std::to_string(t.q_exp) + "]";
    first = false;
  }
  out += "]}";
  return out;
}

namespace {

// SAX handler that keeps integer literals as text, so coefficients beyond
// 64 bits survive parsing.
class PolySax : public nlohmann::json_sax<nlohmann::json> {
 public:
  bool null() override { return fail(); }
  bool boolean(bool) override { return fail(); }
  bool number_integer(number_integer_t v) override { return number(std::to_string(v)); }
  bool number_unsigned(number_unsigned_t v) override { return number(std::to_string(v)); }
  bool number_float(number_float_t, const string_t& raw) override { return number(raw); }
  bool string(string_t& s) override {
    if (section_ != Section::Vars || depth_ != 2) return fail();
    vars_.push_back(s);
    return true;
  }
  bool binary(binary_t&) override { return fail(); }
  bool start_object(std::size_t) override {
    if (depth_ != 0) return fail();
    ++depth_;
    return true;
  }
  bool key(string_t& k) override {
    if (k == "vars") {
      section_ = Section::Vars;
    } else if (k == "terms") {
      section_ = Section::Terms;
    } else {
      return fail();
    }
    return true;
  }
  bool end_object() override {
    --depth_;
    return true;
  }
  bool start_array(std::size_t) override {
    ++depth_;
    if (depth_ == 3) {
      if (section_ != Section::Terms) return fail();
      current_.clear();
    }
    return depth_ <= 3;
  }
  bool end_array() override {
    if (depth_ == 3) {
      if (current_.size() != 3) return fail();
      raw_terms_.push_back(current_);
    }
    --depth_;
    return true;
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override {
    return fail();
  }

  bool ok() const { return ok_; }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<std::vector<std::string>>& raw_terms() const { return raw_terms_; }

 private:
  enum class Section { None, Vars, Terms };

  bool number(const std::string& raw) {
    if (section_ != Section::Terms || depth_ != 3) return fail();
    current_.push_back(raw);
    return true;
  }
  bool fail() {
    ok_ = false;
    return false;
  }

  int depth_ = 0;
  Section section_ = Section::None;
  bool ok_ = true;
  std::vector<std::string> vars_;
  std::vector<std::string> current_;
  std::vector<std::vector<std::string>> raw_terms_;
};

bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

int to_exponent(const std::string& s) {
  if (!is_integer_literal(s) || s.size() > 10) {
    throw std::invalid_argument("poly_from_json: bad exponent '" + s + "'");
  }
  long long v = std::stoll(s);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw std::invalid_argument("poly_from_json: exponent out of range");
  }
  return static_cast<int>(v);
}

}  // namespace

Poly poly_from_json(std::string_view text) {
  PolySax sax;
  const bool parsed = nlohmann::json::sax_parse(text.begin(), text.end(), &sax);
  if (!parsed || !sax.ok()) throw std::invalid_argument("poly_from_json: malformed document");
  if (sax.vars() != std::vector<std::string>{"y", "q"}) {
    throw std::invalid_argument("poly_from_json: vars must be [\"y\",\"q\"]");
  }
  std::vector<Term> terms;
  for (const auto& raw : sax.raw_terms()) {
    if (!is_integer_literal(raw[0])) {
      throw std::invalid_argument("poly_from_json: coefficient is not an integer");
    }
    terms.push_back(Term{Integer(raw[0]), to_exponent(raw[1]), to_exponent(raw[2])});
  }
  return Poly::from_terms(std::move(terms));
}

HalfExponentPolynomial HalfExponentPolynomial::from_q(const Poly& p) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) terms.push_back(Term{t.coef, t.y_exp, 2 * t.q_exp});
  return HalfExponentPolynomial(Poly::from_terms(std::move(terms)));
}

HalfExponentPolynomial HalfExponentPolynomial::half_monomial(const Integer& coef, int half_exp) {
  return HalfExponentPolynomial(Poly::monomial(coef, 0, half_exp));
}

bool HalfExponentPolynomial::is_integral() const {
  return std::all_of(s_poly_.terms().begin(), s_poly_.terms().end(),
                     [](const Term& t) { return t.q_exp % 2 == 0; });
}

Poly HalfExponentPolynomial::to_q() const {
  std::vector<Term> terms;
  for (const auto& t : s_poly_.terms()) {
    if (t.q_exp % 2 != 0) {
      throw HalfPowerResidue("odd power s^" + std::to_string(t.q_exp) + " in " +
                             s_poly_.to_string());
    }
    terms.push_back(Term{t.coef, t.y_exp, t.q_exp / 2});
  }
  return Poly::from_terms(std::move(terms));
}

HalfExponentPolynomial& HalfExponentPolynomial::operator+=(const HalfExponentPolynomial& other) {
  s_poly_ += other.s_poly_;
  return *this;
}

HalfExponentPolynomial operator*(const HalfExponentPolynomial& a,
                                 const HalfExponentPolynomial& b) {
  return HalfExponentPolynomial(a.s_poly_ * b.s_poly_);
}

}  // namespace qeuler
