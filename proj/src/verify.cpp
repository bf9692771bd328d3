#include "qeuler/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qeuler/bijections.hpp"
#include "qeuler/closed_forms.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/lattice_paths.hpp"
#include "qeuler/matrix_ansatz.hpp"
#include "qeuler/parallel.hpp"
#include "qeuler/permutation.hpp"
#include "qeuler/tableaux.hpp"

namespace qeuler {

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.passed; });
}

std::string VerificationReport::render() const {
  std::ostringstream out;
  out << "suite " << suite << "\n";
  int failures = 0;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.suite << "." << c.id << " [" << c.range << "]";
    if (!c.passed && !c.detail.empty()) out << " : " << c.detail;
    out << "\n";
    if (!c.passed) ++failures;
  }
  out << "checks " << checks.size() << ", failures " << failures << "\n";
  out << "status " << (passed() ? "pass" : "fail") << "\n";
  out << "# timing\n";
  for (const auto& c : checks) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", c.elapsed_ms);
    out << "# " << c.suite << "." << c.id << " [" << c.range << "] " << buf << " ms\n";
  }
  return out.str();
}

std::map<std::string, int> parse_budget_overrides(const std::string& text) {
  std::map<std::string, int> out;
  std::string item;
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ';', ',');
  std::istringstream in(normalized);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw std::invalid_argument("malformed budget override '" + item + "'");
    }
    const std::string value = item.substr(eq + 1);
    if (!std::all_of(value.begin(), value.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        value.size() > 4) {
      throw std::invalid_argument("malformed budget override '" + item + "'");
    }
    out[item.substr(0, eq)] = std::stoi(value);
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all",      "th1",     "th2",       "th3",
                                              "th4",      "tableaux", "paths",    "ansatz",
                                              "bijection", "section5", "section6", "polyring"};
  return names;
}

namespace {

using Outcome = std::string;  // empty on success

struct CheckSpec {
  std::string id;
  std::string range;
  std::function<Outcome()> run;
};

/// Resolves size bounds for one suite.
class Bounds {
 public:
  Bounds(std::string suite, const VerifyOptions& opts) : suite_(std::move(suite)), opts_(opts) {}

  /// The main family of the suite follows an explicit override exactly.
  int primary(int fallback, const std::string& budget_class) const {
    const auto o = override_for(budget_class);
    return o ? *o : fallback;
  }
  /// Secondary families never grow past their default.
  int secondary(int fallback, const std::string& budget_class) const {
    const auto o = override_for(budget_class);
    return o ? std::min(*o, fallback) : fallback;
  }

 private:
  std::optional<int> override_for(const std::string& budget_class) const {
    if (auto it = opts_.overrides.find(suite_); it != opts_.overrides.end()) return it->second;
    if (auto it = opts_.overrides.find(budget_class); it != opts_.overrides.end()) {
      return it->second;
    }
    return opts_.n_max;
  }

  std::string suite_;
  const VerifyOptions& opts_;
};

std::string range_upto(int low, int high) {
  return "n=" + std::to_string(low) + ".." + std::to_string(high);
}
std::string at_n(int n) { return "n=" + std::to_string(n); }

Outcome expect_equal(const Poly& got, const Poly& want, const std::string& what) {
  if (got == want) return {};
  return what + ": got " + got.to_string() + ", expected " + want.to_string();
}

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer derangements(int n) {
  Integer prev = 1;  // D_0
  Integer cur = 0;   // D_1
  if (n == 0) return prev;
  for (int k = 2; k <= n; ++k) {
    Integer next = (k - 1) * (cur + prev);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// E_n(q) from the closed formulas.
Poly euler_closed(int n) { return n % 2 == 1 ? tangent_closed((n - 1) / 2) : secant_closed(n / 2); }

int sign_of(int e) { return e % 2 == 0 ? 1 : -1; }

EnumerationOptions perm_opts(const VerifyOptions& opts) {
  EnumerationOptions e;
  e.jobs = opts.jobs;
  return e;
}

// ---------------------------------------------------------------- suites

void suite_th1(const Bounds& b, const VerifyOptions& opts, std::vector<CheckSpec>& out) {
  const int n_max = b.primary(9, "permutations");
  for (int n = 1; n <= n_max; ++n) {
    out.push_back({"alternating-sum", at_n(n), [n, &opts] {
                     const Poly lhs = gen_A(n, perm_opts(opts)).substitute_y(-1, 0);
                     // For odd n the sign is (-1)^{(n+1)/2}.
                     const Poly rhs = n % 2 == 0 ? Poly() : euler_closed(n).scaled(sign_of((n + 1) / 2));
                     return expect_equal(lhs, rhs, "A_n(-1,q)");
                   }});
  }
  for (int n = 1; n <= n_max; n += 2) {
    out.push_back({"opposite-sign-differs", at_n(n), [n, &opts] {
                     const Poly lhs = gen_A(n, perm_opts(opts)).substitute_y(-1, 0);
                     const Poly opposite = euler_closed(n).scaled(sign_of((n - 1) / 2));
                     if (lhs == opposite) return Outcome("(-1)^{(n-1)/2} E_n unexpectedly matches");
                     return Outcome();
                   }});
  }
  for (int n = 1; n <= n_max; ++n) {
    out.push_back({"cardinality", at_n(n), [n, &opts] {
                     const Integer v = gen_A(n, perm_opts(opts)).evaluate(1, 1);
                     if (v != factorial(n)) return Outcome("A_n(1,1) = " + v.get_str());
                     return Outcome();
                   }});
  }
  const int formula_max = b.secondary(12, "formulas");
  for (int n = 2; n <= formula_max; n += 2) {
    out.push_back({"formula-even-vanishing", at_n(n), [n] {
                     return expect_equal(a_n_closed(n).substitute_y(-1, 0), Poly(), "A_n(-1,q)");
                   }});
  }
}

void suite_th2(const Bounds& b, const VerifyOptions& opts, std::vector<CheckSpec>& out) {
  const int n_max = b.primary(9, "permutations");
  for (int n = 1; n <= n_max; ++n) {
    out.push_back({"derangement-sum", at_n(n), [n, &opts] {
                     const Poly lhs = gen_B(n, perm_opts(opts)).substitute_y(-1, -1);
                     const Poly rhs =
                         n % 2 == 1 ? Poly() : euler_closed(n).scaled(sign_of(n / 2), 0, -n / 2);
                     return expect_equal(lhs, rhs, "B_n(-1/q,q)");
                   }});
  }
  for (int n = 2; n <= n_max; ++n) {
    out.push_back({"cardinality", at_n(n), [n, &opts] {
                     const Integer v = gen_B(n, perm_opts(opts)).evaluate(1, 1);
                     if (v != derangements(n)) return Outcome("B_n(1,1) = " + v.get_str());
                     return Outcome();
                   }});
  }
}

CFSpec tangent_cf() {
  return CFSpec{CFSpec::Kind::J, [](int h) { return q_integer(h + 1) * q_integer(h + 2); }};
}
CFSpec secant_cf() {
  return CFSpec{CFSpec::Kind::J, [](int h) { return q_integer(h + 1) * q_integer(h + 1); }};
}
void suite_th3(const Bounds& b, const VerifyOptions& opts, std::vector<CheckSpec>& out) {
  const int n_max = b.primary(4, "permutations");
  for (int n = 0; n <= n_max; ++n) {
    out.push_back({"tangent-routes", at_n(n), [n, &opts] {
                     const Poly closed = tangent_closed(n);
                     if (auto r = expect_equal(euler_dyck_sum(n, 1), closed, "Dyck paths"); !r.empty()) return r;
                     const auto cf = cf_series(tangent_cf(), n);
                     if (auto r = expect_equal(cf[static_cast<std::size_t>(n)], closed, "J-fraction"); !r.empty()) return r;
                     if (2 * n + 1 <= 10) {
                       return expect_equal(gen_alternating_312(2 * n + 1, perm_opts(opts)),
                                           closed, "alternating permutations");
                     }
                     return Outcome();
                   }});
  }
  const int cf_max = b.secondary(12, "paths");
  out.push_back({"dyck-vs-fraction", range_upto(0, cf_max), [cf_max] {
                   const auto cf = cf_series(tangent_cf(), cf_max);
                   for (int n = 0; n <= cf_max; ++n) {
                     if (!(euler_dyck_sum(n, 1) == cf[static_cast<std::size_t>(n)])) {
                       return Outcome("mismatch at n=" + std::to_string(n));
                     }
                   }
                   return Outcome();
                 }});
  const int g_max = b.secondary(10, "formulas");
  for (int n = 0; n <= g_max; ++n) {
    out.push_back({"g-sum", at_n(n), [n] {
                     for (int k = 0; k <= 2 * n + 1; ++k) {
                       if (g_sum(n, k) != g_closed_value(n, k)) {
                         return Outcome("k=" + std::to_string(k) + ": " + g_sum(n, k).get_str());
                       }
                     }
                     return Outcome();
                   }});
  }
}

void suite_th4(const Bounds& b, const VerifyOptions& opts, std::vector<CheckSpec>& out) {
  const int n_max = b.primary(5, "permutations");
  for (int n = 0; n <= n_max; ++n) {
    out.push_back({"secant-routes", at_n(n), [n, &opts] {
                     const Poly closed = secant_closed(n);
                     if (auto r = expect_equal(euler_dyck_sum(n, 0), closed, "Dyck paths"); !r.empty()) return r;
                     const auto cf = cf_series(secant_cf(), n);
                     if (auto r = expect_equal(cf[static_cast<std::size_t>(n)], closed, "J-fraction"); !r.empty()) return r;
                     if (2 * n <= 10) {
                       return expect_equal(gen_alternating_312(2 * n, perm_opts(opts)), closed,
                                           "alternating permutations");
                     }
                     return Outcome();
                   }});
  }
  const int cf_max = b.secondary(12, "paths");
  out.push_back({"dyck-vs-fraction", range_upto(0, cf_max), [cf_max] {
                   const auto cf = cf_series(secant_cf(), cf_max);
                   for (int n = 0; n <= cf_max; ++n) {
                     if (!(euler_dyck_sum(n, 0) == cf[static_cast<std::size_t>(n)])) {
                       return Outcome("mismatch at n=" + std::to_string(n));
                     }
                   }
                   return Outcome();
                 }});
  const int inv_max = b.secondary(6, "ansatz");
  for (int n = 0; n <= inv_max; ++n) {
    out.push_back({"weighted-involutions", at_n(n), [n] {
                     return expect_equal(secant_via_involutions(n), secant_closed(n),
                                         "(-q)^n (q-1)^{-2n} W_{2n}");
                   }});
  }
  const int t_max = b.secondary(5, "permutations");
  for (int n = 0; n <= t_max; ++n) {
    out.push_back({"touchard-riordan", at_n(n), [n, &opts] {
                     const Poly closed = touchard_riordan(n);
                     if (auto r = expect_equal(gen_involution_crossings(2 * n, perm_opts(opts)),
                                               closed, "involution crossings");
                         !r.empty()) {
                       return r;
                     }
                     return expect_equal(touchard_dyck_sum(n), closed, "Dyck subfamily");
                   }});
  }
}

void suite_tableaux(const Bounds& b, const VerifyOptions& opts, std::vector<CheckSpec>& out) {
  const int n_max = b.primary(7, "tableaux");
  TableauOptions topts;
  topts.jobs = opts.jobs;
  for (int n = 0; n <= n_max; ++n) {
    out.push_back({"pt-equals-A", at_n(n), [n, topts, &opts] {
                     return expect_equal(gen_pt(n, topts), gen_A(n, perm_opts(opts)), "gen_pt");
                   }});
    out.push_back({"dt-equals-B", at_n(n), [n, topts, &opts] {
                     return expect_equal(gen_dt(n, topts), gen_B(n, perm_opts(opts)), "gen_dt");
                   }});
    out.push_back({"signed-dt-sum", at_n(n), [n, topts] {
                     const Poly rhs = gen_dt(n, topts).substitute_y(-1, -1);
                     return expect_equal(signed_dt_sum(n, topts), rhs, "signed DT sum");
                   }});
    out.push_back({"williams", at_n(n), [n, topts] {
                     const Poly pt = gen_pt(n, topts);
                     for (int k = 0; k <= n; ++k) {
                       if (!(williams_q_eulerian(k, n) == pt.coefficient_of_y(k))) {
                         return Outcome("k=" + std::to_string(k) + ": formula " +
                                        williams_q_eulerian(k, n).to_string() + ", tableaux " +
                                        pt.coefficient_of_y(k).to_string());
                       }
                     }
                     return Outcome();
                   }});
  }
  const int t_max = b.secondary(6, "tableaux");
  for (int n = 1; n <= t_max; ++n) {
    out.push_back({"transpose", at_n(n), [n, topts] {
                     Outcome failure;
                     Poly pairing;
                     enumerate_dt(n, [&](const PermutationTableau& t) {
                       if (!failure.empty()) return;
                       const PermutationTableau u = transpose(t);
                       const auto s = stats(t);
                       const auto su = stats(u);
                       if (!(transpose(u) == t)) failure = "not an involution";
                       if (su.r != s.c || su.o != s.o) failure = "statistics not exchanged";
                       if (n % 2 == 1 && su.r % 2 == s.r % 2) failure = "row parity unchanged";
                       pairing += Poly::monomial(sign_of(s.r), 0, s.o - n);
                     }, topts);
                     if (!failure.empty()) return failure;
                     if (n % 2 == 1) return expect_equal(pairing, Poly(), "odd signed sum");
                     return Outcome();
                   }});
  }
}

void suite_paths(const Bounds& b, const VerifyOptions& opts, std::vector<CheckSpec>& out) {
  const int n_max = b.primary(9, "permutations");
  for (int n = 0; n <= n_max; ++n) {
    out.push_back({"laguerre-equals-A", at_n(n), [n, &opts] {
                     return expect_equal(laguerre_sum(n), gen_A(n, perm_opts(opts)), "Laguerre");
                   }});
    out.push_back({"motzkin-equals-B", at_n(n), [n, &opts] {
                     return expect_equal(derangement_motzkin_sum(n), gen_B(n, perm_opts(opts)),
                                         "Motzkin");
                   }});
  }
  const int large_max = b.secondary(8, "paths");
  for (int n = 1; n <= large_max; ++n) {
    out.push_back({"large-laguerre-count", at_n(n), [n] {
                     const Integer v = large_laguerre_sum(n).evaluate(1, 1);
                     if (v != factorial(n)) return Outcome("count " + v.get_str());
                     return Outcome();
                   }});
  }
  const int cf_max = b.secondary(12, "paths");
  out.push_back({"fraction-depth", range_upto(0, cf_max), [cf_max] {
                   for (const auto& spec : {tangent_cf(), secant_cf()}) {
                     const auto exact = cf_series(spec, cf_max);
                     if (!(exact == cf_series(spec, cf_max, cf_max + 2))) {
                       return Outcome("depth N+1 and N+2 disagree");
                     }
                   }
                   return Outcome();
                 }});
  const int t_max = b.secondary(5, "paths");
  out.push_back({"touchard-dyck", range_upto(0, t_max), [t_max] {
                   for (int n = 0; n <= t_max; ++n) {
                     if (auto r = expect_equal(touchard_dyck_sum(n), touchard_riordan(n), at_n(n));
                         !r.empty()) {
                       return r;
                     }
                   }
                   return Outcome();
                 }});
}

bool has_flat(const WeightedPath& p) { return p.has_flat_step(); }

void suite_bijection(const Bounds& b, const VerifyOptions& opts, std::vector<CheckSpec>& out) {
  const int n_max = b.primary(7, "permutations");
  for (int n = 1; n <= n_max; ++n) {
    out.push_back({"fv-weight-and-injectivity", at_n(n), [n] {
                     std::set<std::string> images;
                     Outcome failure;
                     for_each_permutation(n, [&](std::span<const int> padded) {
                       if (!failure.empty()) return;
                       const Permutation sigma(std::vector<int>(padded.begin() + 1, padded.end() - 1));
                       const auto image = fv_map(sigma);
                       const Poly want = Poly::monomial(1, ascents(sigma), pattern_31_2(sigma));
                       if (!(image.path.weight() == want)) failure = "weight differs for " + sigma.to_string();
                       images.insert(image.path.dump());
                     });
                     if (!failure.empty()) return failure;
                     const Integer histories = laguerre_sum(n).evaluate(1, 1);
                     if (Integer(static_cast<unsigned long>(images.size())) != histories) {
                       return Outcome(std::to_string(images.size()) + " distinct images, " +
                                      histories.get_str() + " histories");
                     }
                     return Outcome();
                   }});
    out.push_back({"return-condition", at_n(n), [n] {
                     Outcome failure;
                     for_each_permutation(n + 1, [&](std::span<const int> padded) {
                       if (!failure.empty()) return;
                       const Permutation tau(std::vector<int>(padded.begin() + 1, padded.end() - 1));
                       const bool holds = lemma31_holds(tau);
                       if (holds != (tau[n + 1] == 1)) {
                         failure = "equivalence fails for " + tau.to_string();
                         return;
                       }
                       if (holds) {
                         const FVImage image = fv_map(tau);
                         const auto& steps = image.path.steps();
                         for (std::size_t i = 1; i < steps.size(); ++i) {
                           if (steps[i].start_height == 0) failure = "early return for " + tau.to_string();
                         }
                       }
                     });
                     return failure;
                   }});
    out.push_back({"alternating-no-flat", at_n(n), [n] {
                     Outcome failure;
                     for_each_permutation(n, [&](std::span<const int> padded) {
                       if (!failure.empty()) return;
                       const Permutation sigma(std::vector<int>(padded.begin() + 1, padded.end() - 1));
                       const bool alternating = classify(sigma).alternating;
                       const bool no_flat = n % 2 == 0 ? !has_flat(fv_map(sigma).path)
                                                       : !has_flat(f_map(sigma).reduced);
                       if (alternating != no_flat) failure = "fails for " + sigma.to_string();
                     });
                     return failure;
                   }});
  }
  const int th1_max = b.secondary(9, "permutations");
  for (int n = 1; n <= th1_max; n += 2) {
    out.push_back({"alternating-sum-via-paths", at_n(n), [n] {
                     std::vector<Term> terms;
                     for_each_permutation(n, [&](std::span<const int> padded) {
                       const Permutation sigma(std::vector<int>(padded.begin() + 1, padded.end() - 1));
                       const auto reduced = f_map(sigma).reduced;
                       int y_pow = 0;
                       int q_pow = 0;
                       for (const auto& s : reduced.steps()) {
                         y_pow += s.weight.y_pow;
                         q_pow += s.weight.q_pow;
                       }
                       terms.push_back(Term{sign_of(y_pow), 0, q_pow});
                     });
                     return expect_equal(Poly::from_terms(std::move(terms)),
                                         euler_closed(n).scaled(sign_of((n - 1) / 2)),
                                         "reduced weights at y=-1");
                   }});
  }
  const int eq_max = b.secondary(8, "permutations");
  for (int n = 1; n <= eq_max; ++n) {
    out.push_back({"equidistribution", at_n(n), [n, &opts] {
                     const auto e = perm_opts(opts);
                     if (!(joint_distribution(n, StatPair::WexCr, false, e) ==
                           joint_distribution(n, StatPair::AscPattern312, false, e))) {
                       return Outcome("(wex,cr) and (asc,31-2) differ on S_n");
                     }
                     return Outcome();
                   }});
  }
  out.push_back({"derangement-non-equidistribution", range_upto(1, eq_max), [eq_max, &opts] {
                   for (int n = 1; n <= eq_max; ++n) {
                     const auto e = perm_opts(opts);
                     if (!(joint_distribution(n, StatPair::WexCr, true, e) ==
                           joint_distribution(n, StatPair::AscPattern312, true, e))) {
                       return Outcome();
                     }
                   }
                   return Outcome("distributions agree on every D_n");
                 }});
}

void suite_ansatz(const Bounds& b, const VerifyOptions& opts, std::vector<CheckSpec>& out) {
  const int n_max = b.primary(12, "ansatz");
  AnsatzOptions aopts;
  for (int n = 0; n <= n_max; ++n) {
    out.push_back({"A-and-B", at_n(n), [n, aopts, &opts] {
                     const Poly a = ansatz_A(n, aopts);
                     const Poly bb = ansatz_B(n, aopts);
                     if (auto r = expect_equal(a, laguerre_sum(n), "ansatz_A vs Laguerre"); !r.empty()) return r;
                     if (auto r = expect_equal(bb, derangement_motzkin_sum(n), "ansatz_B vs Motzkin"); !r.empty()) return r;
                     if (auto r = expect_equal(a, a_n_closed(n), "ansatz_A vs formula"); !r.empty()) return r;
                     if (auto r = expect_equal(bb, b_n_closed(n), "ansatz_B vs formula"); !r.empty()) return r;
                     if (n <= 9) {
                       if (auto r = expect_equal(a, gen_A(n, perm_opts(opts)), "ansatz_A vs S_n"); !r.empty()) return r;
                       return expect_equal(bb, gen_B(n, perm_opts(opts)), "ansatz_B vs D_n");
                     }
                     return Outcome();
                   }});
    out.push_back({"hat", at_n(n), [n, aopts] {
                     return expect_equal(ansatz_hat(n, aopts), weighted_involution_sum(n),
                                         "ansatz_hat");
                   }});
  }
  const int inv_max = b.secondary(9, "ansatz");
  out.push_back({"inversion-formulas", range_upto(0, inv_max), [inv_max, &opts] {
                   const auto r = inversion_check(inv_max, perm_opts(opts));
                   if (!r.ok) return Outcome("first failure at n=" + std::to_string(r.first_failure));
                   return Outcome();
                 }});
  const int shift_max = b.secondary(8, "ansatz");
  for (int n = 0; n <= shift_max; ++n) {
    out.push_back({"shifted-generator", at_n(n), [n, aopts] {
                     const Poly shifted = boundary_eval(
                         Relation::Primed,
                         normal_power(Relation::Primed, n, Poly::y(), Poly(1), -Poly::y()));
                     const Poly bn = ansatz_B(n, aopts);
                     if (auto r = expect_equal(shifted, bn, "y(D'-I)+E'"); !r.empty()) return r;
                     Poly sum;
                     for (int k = 0; k <= n; ++k) {
                       sum += pow(Poly::y(), static_cast<unsigned>(n - k)).scaled(
                                  binom_safe(n, k) * sign_of(n - k)) *
                              ansatz_A(k, aopts);
                     }
                     return expect_equal(sum, bn, "inversion via ansatz");
                   }});
  }
  const int word_max = b.secondary(6, "ansatz");
  out.push_back({"tableau-oracle", "len<=" + std::to_string(word_max), [word_max] {
                   for (int len = 0; len <= word_max; ++len) {
                     for (int mask = 0; mask < (1 << len); ++mask) {
                       std::string w;
                       for (int i = 0; i < len; ++i) w += ((mask >> i) & 1) ? 'D' : 'E';
                       const Poly value = boundary_eval(Relation::Standard,
                                                        normal_word(Relation::Standard, w));
                       if (!(value == word_tableau_sum(w))) {
                         return Outcome("word " + w + ": " + value.to_string() + " vs " +
                                        word_tableau_sum(w).to_string());
                       }
                     }
                   }
                   return Outcome();
                 }});
  const std::uint64_t seed = opts.seed;
  out.push_back({"confluence", "len<=8", [seed] {
                   std::mt19937_64 rng(seed);
                   for (Relation rel : {Relation::Standard, Relation::Primed, Relation::Hat}) {
                     for (int trial = 0; trial < 40; ++trial) {
                       const int len = static_cast<int>(rng() % 9);
                       std::string w;
                       for (int i = 0; i < len; ++i) w += (rng() & 1U) ? 'D' : 'E';
                       const auto left = rewrite_word(rel, w, RewriteStrategy::Leftmost);
                       const auto right = rewrite_word(rel, w, RewriteStrategy::Rightmost);
                       const std::size_t cut = len == 0 ? 0 : rng() % (static_cast<std::size_t>(len) + 1);
                       const auto split = normal_word(rel, w.substr(0, cut)) * normal_word(rel, w.substr(cut));
                       if (!(left == right) || !(left == normal_word(rel, w)) || !(left == split)) {
                         return Outcome(relation_name(rel) + ": word " + w);
                       }
                     }
                   }
                   return Outcome();
                 }});
}

void suite_section5(const Bounds& b, const VerifyOptions&, std::vector<CheckSpec>& out) {
  const int k_max = b.primary(8, "paths");
  PathOptions transfer;
  PathOptions enumerate = transfer;
  enumerate.method = PathMethod::Enumerate;
  const CFSpec m_fraction{CFSpec::Kind::T, [](int h) {
                            const Poly f = Poly(1) - Poly::q(h + 1);
                            return f * f;
                          }};
  const CFSpec n_fraction{CFSpec::Kind::T, [](int h) {
                            return (Poly(1) - Poly::q(h + 1)) * (Poly(1) - Poly::q(h + 2));
                          }};
  for (int k = 0; k <= k_max; ++k) {
    out.push_back({"M-routes", "k=" + std::to_string(k), [=] {
                     const Poly closed = m_k_closed(k);
                     if (auto r = expect_equal(mk_path_sum(k, transfer), closed, "restricted paths"); !r.empty()) return r;
                     if (auto r = expect_equal(mk_path_sum(k, enumerate), closed, "restricted paths (enumerated)"); !r.empty()) return r;
                     if (auto r = expect_equal(schroder_signed_sum(k, SignedVariant::Secant, transfer), closed, "Schroder"); !r.empty()) return r;
                     if (auto r = expect_equal(schroder_signed_sum(k, SignedVariant::Secant, enumerate), closed, "Schroder (enumerated)"); !r.empty()) return r;
                     const auto cf = cf_series(m_fraction, k);
                     if (!(cf == cf_series(m_fraction, k, k + 2))) return Outcome("T-fraction depth sensitive");
                     return expect_equal(cf[static_cast<std::size_t>(k)], closed, "T-fraction");
                   }});
    out.push_back({"N-routes", "k=" + std::to_string(k), [=] {
                     const Poly closed = n_k_closed(k);
                     if (auto r = expect_equal(nk_path_sum(k, transfer), closed, "restricted paths"); !r.empty()) return r;
                     if (auto r = expect_equal(nk_path_sum(k, enumerate), closed, "restricted paths (enumerated)"); !r.empty()) return r;
                     if (auto r = expect_equal(schroder_signed_sum(k, SignedVariant::Tangent, transfer), closed, "Schroder"); !r.empty()) return r;
                     if (auto r = expect_equal(schroder_signed_sum(k, SignedVariant::Tangent, enumerate), closed, "Schroder (enumerated)"); !r.empty()) return r;
                     const auto cf = cf_series(n_fraction, k);
                     if (!(cf == cf_series(n_fraction, k, k + 2))) return Outcome("T-fraction depth sensitive");
                     return expect_equal(cf[static_cast<std::size_t>(k)], closed, "T-fraction");
                   }});
  }
  const int p_max = b.secondary(5, "paths");
  for (int n = 0; n <= p_max; ++n) {
    for (SignedVariant v : {SignedVariant::Secant, SignedVariant::Tangent}) {
      const std::string name = v == SignedVariant::Secant ? "penaud-secant" : "penaud-tangent";
      out.push_back({name, "length=" + std::to_string(2 * n), [n, v] {
                       const PathFamily family =
                           v == SignedVariant::Secant ? PathFamily::SecantSigned : PathFamily::TangentSigned;
                       std::set<std::pair<std::string, std::string>> images;
                       Outcome failure;
                       Integer paths = 0;
                       enumerate_paths(family, 2 * n, false, [&](const WeightedPath& h) {
                         ++paths;
                         if (!failure.empty()) return;
                         const auto [h1, h2] = penaud_decompose(h);
                         if (!(h1.weight() == Poly(1)) || !(h2.weight() == h.weight())) failure = "weight not preserved";
                         if (static_cast<int>(h1.step_count()) != 2 * n || h1.final_height() % 2 != 0) failure = "bad left factor";
                         if (h2.length() != h1.final_height() || h2.has_unit_peak()) failure = "bad restricted path";
                         images.emplace(h1.dump(), h2.dump());
                       });
                       if (!failure.empty()) return failure;
                       if (Integer(static_cast<unsigned long>(images.size())) != paths) return Outcome("not injective");
                       Integer product = 0;
                       Poly weighted;
                       for (int k = 0; k <= n; ++k) {
                         Integer restricted = 0;
                         enumerate_paths(family, 2 * k, true, [&](const WeightedPath&) { ++restricted; });
                         product += left_factor_count(2 * n, 2 * k) * restricted;
                         weighted += (v == SignedVariant::Secant ? mk_path_sum(k) : nk_path_sum(k))
                                         .scaled(left_factor_count(2 * n, 2 * k));
                       }
                       if (product != paths) return Outcome("image size " + product.get_str() + " vs " + paths.get_str());
                       return expect_equal(signed_dyck_sum(n, v), weighted, "weighted decomposition");
                     }});
    }
  }
  out.push_back({"left-factor-count", range_upto(0, p_max), [p_max] {
                   for (int n = 0; n <= p_max; ++n) {
                     std::map<int, Integer> counts;
                     enumerate_paths(PathFamily::LeftFactor, 2 * n, false,
                                     [&](const WeightedPath& p) { ++counts[p.final_height()]; });
                     for (int h = 0; h <= 2 * n; ++h) {
                       const Integer want = left_factor_count(2 * n, h);
                       const Integer got = counts.count(h) ? counts[h] : Integer(0);
                       if (want != got) return Outcome("steps " + std::to_string(2 * n) + " height " + std::to_string(h));
                     }
                   }
                   return Outcome();
                 }});
  const int r_max = b.secondary(6, "formulas");
  for (int n = 0; n <= r_max; ++n) {
    out.push_back({"tangent-rearrangement", at_n(n), [n] {
                     return expect_equal(tangent_via_nk(n), tangent_closed(n), "via N_k");
                   }});
  }
}

void suite_section6(const Bounds& b, const VerifyOptions&, std::vector<CheckSpec>& out) {
  const int n_max = b.primary(10, "formulas");
  for (int n = 0; n <= n_max; ++n) {
    out.push_back({"parity-independent", at_n(n), [n] {
                     if (auto r = expect_equal(parity_independent_e(n), euler_closed(n), "E_n"); !r.empty()) return r;
                     if (n == 0) return Outcome();
                     const ParityParts parts = parity_parts(n);
                     if (n % 2 == 0 && !parts.first.is_zero()) return Outcome("first part nonzero for even n");
                     if (n % 2 == 1 && !parts.second.is_zero()) return Outcome("second part nonzero for odd n");
                     if (!(parts.first + parts.second).is_integral()) return Outcome("odd powers of q^{1/2} survive");
                     return Outcome();
                   }});
  }
}

Poly random_poly(std::mt19937_64& rng) {
  std::vector<Term> terms;
  const int count = static_cast<int>(rng() % 6);
  for (int i = 0; i < count; ++i) {
    const long coef = static_cast<long>(rng() % 2001) - 1000;
    terms.push_back(Term{Integer(coef), static_cast<int>(rng() % 5) - 1, static_cast<int>(rng() % 9) - 2});
  }
  return Poly::from_terms(std::move(terms));
}

void suite_polyring(const Bounds&, const VerifyOptions& opts, std::vector<CheckSpec>& out) {
  const std::uint64_t seed = opts.seed;
  out.push_back({"ring-axioms", "200 triples", [seed] {
                   std::mt19937_64 rng(seed);
                   for (int t = 0; t < 200; ++t) {
                     const Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
                     if (!((a * b) * c == a * (b * c))) return Outcome("associativity");
                     if (!(a * b == b * a) || !(a + b == b + a)) return Outcome("commutativity");
                     if (!(a * (b + c) == a * b + a * c)) return Outcome("distributivity");
                     if (!(a + (-a)).is_zero()) return Outcome("additive inverse");
                     for (int sgn : {1, -1}) {
                       for (int e : {-1, 0, 2}) {
                         if (!((a + b).substitute_y(sgn, e) == a.substitute_y(sgn, e) + b.substitute_y(sgn, e)) ||
                             !((a * b).substitute_y(sgn, e) == a.substitute_y(sgn, e) * b.substitute_y(sgn, e))) {
                           return Outcome("substitute_y is not a ring map");
                         }
                       }
                     }
                   }
                   return Outcome();
                 }});
  out.push_back({"exact-division", "m<=8", [seed] {
                   std::mt19937_64 rng(seed + 1);
                   for (int t = 0; t < 100; ++t) {
                     const Poly p = random_poly(rng);
                     const int m = static_cast<int>(rng() % 9);
                     if (!(exact_div_one_minus_q_pow(p * one_minus_q_pow(m), m) == p)) {
                       return Outcome("round trip fails for " + p.to_string());
                     }
                   }
                   return Outcome();
                 }});
}

using SuiteFn = void (*)(const Bounds&, const VerifyOptions&, std::vector<CheckSpec>&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"polyring", suite_polyring}, {"th1", suite_th1},           {"th2", suite_th2},
      {"th3", suite_th3},           {"th4", suite_th4},           {"tableaux", suite_tableaux},
      {"paths", suite_paths},       {"ansatz", suite_ansatz},     {"bijection", suite_bijection},
      {"section5", suite_section5}, {"section6", suite_section6},
  };
  return table;
}

struct Planned {
  std::string suite;
  CheckSpec spec;
};

}  // namespace

VerificationReport run_suite(const std::string& suite, const VerifyOptions& opts) {
  std::vector<Planned> plan;
  bool known = false;
  for (const auto& [name, fn] : suite_table()) {
    if (suite != "all" && suite != name) continue;
    known = true;
    std::vector<CheckSpec> specs;
    fn(Bounds(name, opts), opts, specs);
    for (auto& s : specs) plan.push_back({name, std::move(s)});
  }
  if (!known) throw std::invalid_argument("unknown suite '" + suite + "'");

  auto records = parallel_map(plan.size(), opts.jobs, [&](std::size_t i) {
    CheckRecord rec;
    rec.suite = plan[i].suite;
    rec.id = plan[i].spec.id;
    rec.range = plan[i].spec.range;
    const auto start = std::chrono::steady_clock::now();
    try {
      rec.detail = plan[i].spec.run();
      rec.passed = rec.detail.empty();
    } catch (const BudgetExceeded&) {
      throw;
    } catch (const std::exception& e) {
      rec.passed = false;
      rec.detail = std::string("exception: ") + e.what();
    }
    rec.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
  });
  return VerificationReport{suite, std::move(records)};
}

}  // namespace qeuler
