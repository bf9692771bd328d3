#pragma once

// Normal ordering of words in two operators D, E under a relation
//   D E = a E D + b I + c E + d D
// and evaluation against the boundary vectors <W| and |V>.

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "qeuler/polynomial.hpp"

namespace qeuler {

enum class Relation {
  /// DE = qED + I + qE + D; <W|E = 0, D|V> = 0.
  Standard,
  /// D'E' = qE'D' + D' + E'; <W|E' = 0, D'|V> = |V>.
  Primed,
  /// D^E^ = qE^D^ + (1-q)/q; <W|E^ = <W|, D^|V> = |V>.
  Hat,
};

std::string relation_name(Relation r);

struct RewriteRule {
  Poly ed;
  Poly identity;
  Poly e;
  Poly d;
};

RewriteRule rewrite_rule(Relation r);

/// sum c_ij E^i D^j, keyed by (i, j); no zero entries.
class NormalFormExpression {
 public:
  explicit NormalFormExpression(Relation relation) : relation_(relation) {}
  static NormalFormExpression identity(Relation relation);

  Relation relation() const { return relation_; }
  const std::map<std::pair<int, int>, Poly>& entries() const { return entries_; }
  Poly at(int i, int j) const;
  bool is_zero() const { return entries_.empty(); }
  void add(int i, int j, const Poly& coef);

  friend bool operator==(const NormalFormExpression&, const NormalFormExpression&) = default;

 private:
  Relation relation_;
  std::map<std::pair<int, int>, Poly> entries_;
};

NormalFormExpression operator*(const NormalFormExpression& a, const NormalFormExpression& b);

/// Normal form of (coeff_d D + coeff_e E + coeff_identity I)^n, by repeated
/// left multiplication.
NormalFormExpression normal_power(Relation relation, int n, const Poly& coeff_d,
                                  const Poly& coeff_e, const Poly& coeff_identity = Poly());

/// Normal form of a word over {D, E}, multiplying letters from the right.
NormalFormExpression normal_word(Relation relation, std::string_view word);

enum class RewriteStrategy { Leftmost, Rightmost };

/// Normal form of a word by rewriting one DE factor at a time, always the
/// leftmost or always the rightmost one.
NormalFormExpression rewrite_word(Relation relation, std::string_view word,
                                  RewriteStrategy strategy);

/// Standard: c_00. Primed: sum_j c_0j. Hat: sum_ij c_ij. Throws
/// RelationMismatch if expr was built under another relation.
Poly boundary_eval(Relation relation, const NormalFormExpression& expr);

struct AnsatzOptions {
  int bound = 14;
};

/// <W|(yD + E)^n|V> under the standard relation; equals B_n(y,q).
Poly ansatz_B(int n, const AnsatzOptions& opts = {});
/// <W|(yD' + E')^n|V>; equals A_n(y,q).
Poly ansatz_A(int n, const AnsatzOptions& opts = {});
/// <W|(-D^ + E^)^n|V>
Poly ansatz_hat(int n, const AnsatzOptions& opts = {});

}  // namespace qeuler
