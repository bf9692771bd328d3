#include "qeuler/matrix_ansatz.hpp"

#include <stdexcept>

#include "qeuler/errors.hpp"

namespace qeuler {

std::string relation_name(Relation r) {
  switch (r) {
    case Relation::Standard:
      return "DE=qED+I+qE+D";
    case Relation::Primed:
      return "D'E'=qE'D'+D'+E'";
    case Relation::Hat:
      return "D^E^=qE^D^+(1-q)/q";
  }
  return "unknown";
}

RewriteRule rewrite_rule(Relation r) {
  switch (r) {
    case Relation::Standard:
      return RewriteRule{Poly::q(), Poly(1), Poly::q(), Poly(1)};
    case Relation::Primed:
      return RewriteRule{Poly::q(), Poly(), Poly(1), Poly(1)};
    case Relation::Hat:
      return RewriteRule{Poly::q(), Poly::q(-1) - Poly(1), Poly(), Poly()};
  }
  throw std::invalid_argument("unknown relation");
}

NormalFormExpression NormalFormExpression::identity(Relation relation) {
  NormalFormExpression e(relation);
  e.add(0, 0, Poly(1));
  return e;
}

Poly NormalFormExpression::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? Poly() : it->second;
}

void NormalFormExpression::add(int i, int j, const Poly& coef) {
  if (coef.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace({i, j}, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

namespace {

/// Normal forms of D^b E^c, memoized.
class Normalizer {
 public:
  explicit Normalizer(Relation relation) : relation_(relation), rule_(rewrite_rule(relation)) {}

  const NormalFormExpression& d_power_e_power(int b, int c) {
    auto it = cache_.find({b, c});
    if (it != cache_.end()) return it->second;
    NormalFormExpression out(relation_);
    if (b == 0 || c == 0) {
      out.add(c, b, Poly(1));
    } else if (b == 1) {
      // D E^c = (ed E + d) D E^{c-1} + (identity + e E) E^{c-1}
      const NormalFormExpression prev = d_power_e_power(1, c - 1);
      for (const auto& [key, coef] : prev.entries()) {
        out.add(key.first + 1, key.second, coef * rule_.ed);
        out.add(key.first, key.second, coef * rule_.d);
      }
      out.add(c - 1, 0, rule_.identity);
      out.add(c, 0, rule_.e);
    } else {
      // D^b E^c = D^{b-1} (D E^c)
      const NormalFormExpression first = d_power_e_power(1, c);
      for (const auto& [key, coef] : first.entries()) {
        const NormalFormExpression inner = d_power_e_power(b - 1, key.first);
        for (const auto& [ikey, icoef] : inner.entries()) {
          out.add(ikey.first, ikey.second + key.second, coef * icoef);
        }
      }
    }
    return cache_.emplace(std::make_pair(b, c), std::move(out)).first->second;
  }

 private:
  Relation relation_;
  RewriteRule rule_;
  std::map<std::pair<int, int>, NormalFormExpression> cache_;
};

void require_same_relation(const NormalFormExpression& a, const NormalFormExpression& b) {
  if (a.relation() != b.relation()) {
    throw RelationMismatch("cannot combine expressions under " + relation_name(a.relation()) +
                           " and " + relation_name(b.relation()));
  }
}

}  // namespace

NormalFormExpression operator*(const NormalFormExpression& a, const NormalFormExpression& b) {
  require_same_relation(a, b);
  Normalizer normalizer(a.relation());
  NormalFormExpression out(a.relation());
  for (const auto& [ka, ca] : a.entries()) {
    for (const auto& [kb, cb] : b.entries()) {
      const Poly coef = ca * cb;
      const auto& middle = normalizer.d_power_e_power(ka.second, kb.first);
      for (const auto& [km, cm] : middle.entries()) {
        out.add(ka.first + km.first, km.second + kb.second, coef * cm);
      }
    }
  }
  return out;
}

NormalFormExpression normal_power(Relation relation, int n, const Poly& coeff_d,
                                  const Poly& coeff_e, const Poly& coeff_identity) {
  if (n < 0) throw std::invalid_argument("normal_power: negative exponent");
  Normalizer normalizer(relation);
  NormalFormExpression expr = NormalFormExpression::identity(relation);
  for (int step = 0; step < n; ++step) {
    NormalFormExpression next(relation);
    for (const auto& [key, coef] : expr.entries()) {
      const auto [i, j] = key;
      if (!coeff_e.is_zero()) next.add(i + 1, j, coeff_e * coef);
      if (!coeff_identity.is_zero()) next.add(i, j, coeff_identity * coef);
      if (!coeff_d.is_zero()) {
        for (const auto& [km, cm] : normalizer.d_power_e_power(1, i).entries()) {
          next.add(km.first, km.second + j, coeff_d * coef * cm);
        }
      }
    }
    expr = std::move(next);
  }
  return expr;
}

NormalFormExpression normal_word(Relation relation, std::string_view word) {
  NormalFormExpression expr = NormalFormExpression::identity(relation);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    NormalFormExpression letter(relation);
    if (*it == 'D') {
      letter.add(0, 1, Poly(1));
    } else if (*it == 'E') {
      letter.add(1, 0, Poly(1));
    } else {
      throw std::invalid_argument("normal_word: letters must be D or E");
    }
    expr = letter * expr;
  }
  return expr;
}

NormalFormExpression rewrite_word(Relation relation, std::string_view word,
                                  RewriteStrategy strategy) {
  for (char c : word) {
    if (c != 'D' && c != 'E') throw std::invalid_argument("rewrite_word: letters must be D or E");
  }
  const RewriteRule rule = rewrite_rule(relation);
  std::map<std::string, Poly> pending{{std::string(word), Poly(1)}};
  NormalFormExpression out(relation);
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const std::string& w = node.key();
    const Poly& coef = node.mapped();
    const std::size_t pos = strategy == RewriteStrategy::Leftmost ? w.find("DE") : w.rfind("DE");
    if (pos == std::string::npos) {
      const std::size_t es = w.find('D') == std::string::npos ? w.size() : w.find('D');
      out.add(static_cast<int>(es), static_cast<int>(w.size() - es), coef);
      continue;
    }
    const std::string left = w.substr(0, pos);
    const std::string right = w.substr(pos + 2);
    const std::pair<std::string, const Poly*> replacements[] = {
        {left + "ED" + right, &rule.ed},
        {left + right, &rule.identity},
        {left + "E" + right, &rule.e},
        {left + "D" + right, &rule.d},
    };
    for (const auto& [next, factor] : replacements) {
      if (factor->is_zero()) continue;
      Poly& slot = pending[next];
      slot += coef * *factor;
      if (slot.is_zero()) pending.erase(next);
    }
  }
  return out;
}

Poly boundary_eval(Relation relation, const NormalFormExpression& expr) {
  if (expr.relation() != relation) {
    throw RelationMismatch("expression built under " + relation_name(expr.relation()) +
                           " evaluated under " + relation_name(relation));
  }
  Poly total;
  for (const auto& [key, coef] : expr.entries()) {
    const bool keep = relation == Relation::Hat ||
                      (relation == Relation::Primed && key.first == 0) ||
                      (relation == Relation::Standard && key.first == 0 && key.second == 0);
    if (keep) total += coef;
  }
  return total;
}

namespace {

void check_ansatz_bound(const char* what, int n, const AnsatzOptions& opts) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative size");
  if (n > opts.bound) throw BudgetExceeded(what, n, opts.bound);
}

}  // namespace

Poly ansatz_B(int n, const AnsatzOptions& opts) {
  check_ansatz_bound("ansatz_B", n, opts);
  return boundary_eval(Relation::Standard, normal_power(Relation::Standard, n, Poly::y(), Poly(1)));
}

Poly ansatz_A(int n, const AnsatzOptions& opts) {
  check_ansatz_bound("ansatz_A", n, opts);
  return boundary_eval(Relation::Primed, normal_power(Relation::Primed, n, Poly::y(), Poly(1)));
}

Poly ansatz_hat(int n, const AnsatzOptions& opts) {
  check_ansatz_bound("ansatz_hat", n, opts);
  return boundary_eval(Relation::Hat, normal_power(Relation::Hat, n, Poly(-1), Poly(1)));
}

}  // namespace qeuler
