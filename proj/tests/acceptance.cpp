// Acceptance run: one PASS/FAIL line per criterion, each with its runtime
// bound. A criterion that finishes over its bound fails.
//
// Exit status: 0 when every criterion passes. With --expect-fail LIST the
// status is 0 exactly when the failing criteria are the ones listed, so a
// known defect stays visible in the output without hiding a regression.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qeuler/bijections.hpp"
#include "qeuler/closed_forms.hpp"
#include "qeuler/lattice_paths.hpp"
#include "qeuler/matrix_ansatz.hpp"
#include "qeuler/permutation.hpp"
#include "qeuler/tableaux.hpp"

using namespace qeuler;

namespace {

// Empty string means success; otherwise the first discrepancy.
using Result = std::string;

int sign_of(int e) { return e % 2 == 0 ? 1 : -1; }

Poly euler(int n) { return n % 2 == 1 ? tangent_closed(n / 2) : secant_closed(n / 2); }

Result differs(const std::string& what, int n, const Poly& got, const Poly& want) {
  if (got == want) return {};
  return what + " at n=" + std::to_string(n) + ": " + got.to_string() + " vs " + want.to_string();
}

Permutation from_padded(std::span<const int> padded) {
  return Permutation(std::vector<int>(padded.begin() + 1, padded.end() - 1));
}

bool has_flat(const WeightedPath& p) { return p.has_flat_step(); }

// ---------------------------------------------------------------- criteria

Result first_values() {
  const Poly q = Poly::q();
  const std::vector<Poly> known{1, 1, 1, Poly(1) + q, Poly(2) + q.scaled(2) + q * q,
                                  Poly(2) + q.scaled(5) + pow(q, 2).scaled(5) + pow(q, 3).scaled(3) +
                                      pow(q, 4)};
  const auto tangent = cf_series({CFSpec::Kind::J, [](int h) { return q_integer(h + 1) * q_integer(h + 2); }}, 2);
  const auto secant = cf_series({CFSpec::Kind::J, [](int h) { return q_integer(h + 1) * q_integer(h + 1); }}, 2);
  for (int n = 0; n <= 5; ++n) {
    const auto idx = static_cast<std::size_t>(n / 2);
    const Poly cf = n % 2 == 1 ? tangent[idx] : secant[idx];
    for (const auto& [name, v] : std::vector<std::pair<std::string, Poly>>{
             {"continued fraction", cf},
             {"Dyck paths", euler_dyck_sum(n / 2, n % 2)},
             {"alternating permutations", gen_alternating_312(n)},
             {"closed form", euler(n)}}) {
      if (auto r = differs(name, n, v, known[static_cast<std::size_t>(n)]); !r.empty()) return r;
    }
  }
  return {};
}

// Checked with the sign (-1)^{(n-1)/2} for odd n, which is the requirement
// as written; brute force gives the opposite sign.
Result wex_sum_opposite_sign() {
  std::vector<std::string> bad;
  for (int n = 1; n <= 9; ++n) {
    const Poly lhs = gen_A(n).substitute_y(-1, 0);
    if (n % 2 == 0) {
      if (!lhs.is_zero()) return "nonzero at even n=" + std::to_string(n);
    } else if (!(lhs == euler(n).scaled(sign_of((n - 1) / 2)))) {
      bad.push_back(std::to_string(n));
    }
  }
  if (bad.empty()) return {};
  std::string list;
  for (const auto& b : bad) list += (list.empty() ? "" : ",") + b;
  return "odd n=" + list + ": the sum equals (-1)^{(n+1)/2} E_n, the opposite sign";
}

Result wex_sum() {
  for (int n = 1; n <= 9; ++n) {
    const Poly rhs = n % 2 == 0 ? Poly() : euler(n).scaled(sign_of((n + 1) / 2));
    if (auto r = differs("A_n(-1,q)", n, gen_A(n).substitute_y(-1, 0), rhs); !r.empty()) return r;
  }
  return {};
}

Result derangement_sum() {
  for (int n = 1; n <= 9; ++n) {
    const Poly rhs = n % 2 == 1 ? Poly() : euler(n).scaled(sign_of(n / 2), 0, -n / 2);
    if (auto r = differs("B_n(-1/q,q)", n, gen_B(n).substitute_y(-1, -1), rhs); !r.empty()) return r;
  }
  return {};
}

Result four_way() {
  for (int n = 0; n <= 9; ++n) {
    const Poly a = gen_A(n);
    if (auto r = differs("A formula", n, a_n_closed(n), a); !r.empty()) return r;
    if (auto r = differs("A Laguerre", n, laguerre_sum(n), a); !r.empty()) return r;
    if (auto r = differs("A ansatz", n, ansatz_A(n), a); !r.empty()) return r;
    const Poly b = gen_B(n);
    if (auto r = differs("B formula", n, b_n_closed(n), b); !r.empty()) return r;
    if (auto r = differs("B Motzkin", n, derangement_motzkin_sum(n), b); !r.empty()) return r;
    if (auto r = differs("B ansatz", n, ansatz_B(n), b); !r.empty()) return r;
  }
  return {};
}

Result tableaux_route() {
  for (int n = 0; n <= 7; ++n) {
    if (auto r = differs("gen_pt", n, gen_pt(n), gen_A(n)); !r.empty()) return r;
    const Poly b = gen_B(n);
    if (auto r = differs("gen_dt", n, gen_dt(n), b); !r.empty()) return r;
    if (auto r = differs("signed DT sum", n, signed_dt_sum(n), b.substitute_y(-1, -1)); !r.empty()) return r;
  }
  for (int n = 1; n <= 6; ++n) {
    Result failure;
    enumerate_dt(n, [&](const PermutationTableau& t) {
      if (!failure.empty()) return;
      const PermutationTableau tt = transpose(t);
      if (tt.has_zero_row() || !(transpose(tt) == t)) failure = "transpose closure at n=" + std::to_string(n);
      if (n % 2 == 1 && (tt.rows() % 2 == t.rows() % 2 || tt.ones() != t.ones())) {
        failure = "parity pairing at n=" + std::to_string(n);
      }
    });
    if (!failure.empty()) return failure;
    if (n % 2 == 1 && !signed_dt_sum(n).is_zero()) return "odd signed sum nonzero at n=" + std::to_string(n);
  }
  return {};
}

Result williams() {
  for (int n = 0; n <= 7; ++n) {
    const Poly pt = gen_pt(n);
    for (int k = 0; k <= n; ++k) {
      if (auto r = differs("k=" + std::to_string(k), n, williams_q_eulerian(k, n), pt.coefficient_of_y(k));
          !r.empty()) {
        return r;
      }
    }
  }
  return {};
}

Result touchard() {
  for (int n = 0; 2 * n <= 10; ++n) {
    const Poly t = touchard_riordan(n);
    if (auto r = differs("involutions", n, t, gen_involution_crossings(2 * n)); !r.empty()) return r;
    if (auto r = differs("Dyck subfamily", n, t, touchard_dyck_sum(n)); !r.empty()) return r;
  }
  return {};
}

Result penaud(PathFamily family, int length) {
  std::set<std::string> seen;
  Result failure;
  std::size_t total = 0;
  enumerate_paths(family, length, false, [&](const WeightedPath& h) {
    if (!failure.empty()) return;
    ++total;
    const auto [h1, h2] = penaud_decompose(h);
    if (!(h2.weight() == h.weight())) failure = "weight changed";
    if (h2.has_unit_peak() || h1.final_height() != static_cast<int>(h2.step_count())) {
      failure = "image outside the target set";
    }
    seen.insert(h1.dump() + "|" + h2.dump());
  });
  if (!failure.empty()) return failure + " at length " + std::to_string(length);
  if (seen.size() != total) return "not injective at length " + std::to_string(length);
  // Target size: left factors of length L ending at height j times
  // peak-free signed paths of length j.
  Integer target = 0;
  for (int j = 0; j <= length; j += 2) {
    std::size_t free_paths = 0;
    enumerate_paths(family, j, true, [&](const WeightedPath&) { ++free_paths; });
    target += left_factor_count(length, j) * Integer(static_cast<unsigned long>(free_paths));
  }
  if (target != Integer(static_cast<unsigned long>(total))) {
    return "not surjective at length " + std::to_string(length);
  }
  return {};
}

Result section5() {
  const CFSpec m_cf{CFSpec::Kind::T, [](int h) {
                      const Poly f = Poly(1) - Poly::q(h + 1);
                      return f * f;
                    }};
  const CFSpec n_cf{CFSpec::Kind::T, [](int h) {
                      return (Poly(1) - Poly::q(h + 1)) * (Poly(1) - Poly::q(h + 2));
                    }};
  const auto ms = cf_series(m_cf, 8);
  const auto ns = cf_series(n_cf, 8);
  for (int k = 0; k <= 8; ++k) {
    const Poly m = m_k_closed(k);
    const Poly nk = n_k_closed(k);
    const auto idx = static_cast<std::size_t>(k);
    if (auto r = differs("M paths", k, mk_path_sum(k), m); !r.empty()) return r;
    if (auto r = differs("M Schroder", k, schroder_signed_sum(k, SignedVariant::Secant), m); !r.empty()) return r;
    if (auto r = differs("M T-fraction", k, ms[idx], m); !r.empty()) return r;
    if (auto r = differs("N paths", k, nk_path_sum(k), nk); !r.empty()) return r;
    if (auto r = differs("N Schroder", k, schroder_signed_sum(k, SignedVariant::Tangent), nk); !r.empty()) return r;
    if (auto r = differs("N T-fraction", k, ns[idx], nk); !r.empty()) return r;
  }
  for (PathFamily f : {PathFamily::SecantSigned, PathFamily::TangentSigned}) {
    for (int len = 0; len <= 10; len += 2) {
      if (auto r = penaud(f, len); !r.empty()) return family_name(f) + ": " + r;
    }
  }
  for (int n = 0; n <= 6; ++n) {
    if (auto r = differs("rearrangement", n, tangent_via_nk(n), tangent_closed(n)); !r.empty()) return r;
  }
  return {};
}

Result g_identity() {
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= 2 * n + 1; ++k) {
      if (g_sum(n, k) != g_closed_value(n, k)) {
        return "g(" + std::to_string(n) + "," + std::to_string(k) + ") = " + g_sum(n, k).get_str();
      }
    }
  }
  return {};
}

Result section6() {
  for (int n = 0; n <= 10; ++n) {
    if (auto r = differs("parity-independent", n, parity_independent_e(n), euler(n)); !r.empty()) return r;
    if (n == 0) continue;
    const ParityParts parts = parity_parts(n);
    if (!(n % 2 == 0 ? parts.first : parts.second).is_zero()) return "part survives at n=" + std::to_string(n);
    if (!(parts.first + parts.second).is_integral()) return "odd s-power at n=" + std::to_string(n);
  }
  return {};
}

Result bijection_suite() {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::string> images;
    Result failure;
    const std::string at = " at n=" + std::to_string(n);
    for_each_permutation(n, [&](std::span<const int> padded) {
      if (!failure.empty()) return;
      const Permutation sigma = from_padded(padded);
      const auto path = fv_map(sigma).path;
      if (!(path.weight() == Poly::monomial(1, ascents(sigma), pattern_31_2(sigma)))) {
        failure = "weight property fails for " + sigma.to_string();
      }
      images.insert(path.dump());
      const bool no_flat = n % 2 == 0 ? !has_flat(path) : !has_flat(f_map(sigma).reduced);
      if (classify(sigma).alternating != no_flat) failure = "alternating characterization fails for " + sigma.to_string();
    });
    if (!failure.empty()) return failure;
    if (Integer(static_cast<unsigned long>(images.size())) != laguerre_sum(n).evaluate(1, 1)) {
      return "image count differs" + at;
    }
    for_each_permutation(n, [&](std::span<const int> padded) {
      const Permutation tau = from_padded(padded);
      if (failure.empty() && lemma31_holds(tau) != (tau[n] == 1)) {
        failure = "return condition fails for " + tau.to_string();
      }
    });
    if (!failure.empty()) return failure;
  }
  return {};
}

Result equidistribution() {
  for (int n = 1; n <= 8; ++n) {
    if (!(joint_distribution(n, StatPair::WexCr, false) == joint_distribution(n, StatPair::AscPattern312, false))) {
      return "distributions differ on all permutations at n=" + std::to_string(n);
    }
  }
  for (int n = 1; n <= 8; ++n) {
    if (!(joint_distribution(n, StatPair::WexCr, true) == joint_distribution(n, StatPair::AscPattern312, true))) {
      return {};
    }
  }
  return "derangements equidistributed for every n <= 8";
}

struct Criterion {
  int id;
  std::string title;
  double bound_s;
  std::function<Result()> run;
};

std::set<int> parse_list(const std::string& text) {
  std::set<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.insert(std::stoi(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected_failures;
  bool expectation_given = false;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--expect-fail" && i + 1 < argc) {
      expected_failures = parse_list(argv[++i]);
      expectation_given = true;
    } else {
      std::cerr << "usage: acceptance [--expect-fail 2,5]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "first values E_0..E_5 from four routes", 1, first_values},
      {2, "alternating sum over S_n, sign as stated", 180, wex_sum_opposite_sign},
      {3, "alternating sum over derangements", 120, derangement_sum},
      {4, "four-way A_n and B_n agreement, n <= 9", 300, four_way},
      {5, "tableaux route, n <= 7", 180, tableaux_route},
      {6, "q-Eulerian closed form vs tableaux, n <= 7", 60, williams},
      {7, "crossings of involutions, 2n <= 10", 30, touchard},
      {8, "signed paths, Schroder paths, T-fractions, decomposition", 120, section5},
      {9, "g(n,k) identity, n <= 10", 10, g_identity},
      {10, "parity-independent formula, n <= 10", 30, section6},
      {11, "bijection properties, n <= 7", 120, bijection_suite},
      {12, "equidistribution and its failure on derangements", 120, equidistribution},
  };

  std::set<int> failed;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.empty() && secs > c.bound_s) r = "over the runtime bound";
    if (!r.empty()) failed.insert(c.id);
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs < %.0fs", secs, c.bound_s);
    std::cout << (r.empty() ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << timing
              << "]" << (r.empty() ? "" : " : " + r) << "\n";
  }

  // Criterion 2 with the sign the brute force produces; informational.
  const Result corrected = wex_sum();
  std::cout << "note: with sign (-1)^{(n+1)/2} for odd n the sum over S_n "
            << (corrected.empty() ? "matches for every n <= 9" : "fails: " + corrected) << "\n";

  std::cout << "criteria passed " << criteria.size() - failed.size() << "/" << criteria.size() << "\n";
  if (expectation_given) {
    const bool as_expected = failed == expected_failures;
    std::cout << "expected failures " << (as_expected ? "match" : "do not match") << "\n";
    return as_expected ? 0 : 1;
  }
  return failed.empty() ? 0 : 1;
}
