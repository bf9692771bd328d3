#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qeuler/bijections.hpp"
#include "qeuler/closed_forms.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/lattice_paths.hpp"
#include "qeuler/parallel.hpp"
#include "qeuler/permutation.hpp"
#include "qeuler/tableaux.hpp"
#include "qeuler/verify.hpp"

using namespace qeuler;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct TableKind {
  int budget;
  std::string (*label)(int);
  Poly (*value)(int);
};

Poly eulerian_row(int n) {
  Poly row;
  for (int k = 0; k <= n; ++k) row += williams_q_eulerian(k, n).scaled(1, k, 0);
  return row;
}

const std::map<std::string, TableKind>& table_kinds() {
  static const std::map<std::string, TableKind> kinds{
      {"etangent", {60, [](int n) { return "E_" + std::to_string(2 * n + 1); }, tangent_closed}},
      {"esecant", {60, [](int n) { return "E_" + std::to_string(2 * n); }, secant_closed}},
      {"A", {40, [](int n) { return "A_" + std::to_string(n); }, laguerre_sum}},
      {"B", {40, [](int n) { return "B_" + std::to_string(n); }, derangement_motzkin_sum}},
      {"eulerian", {30, [](int n) { return "Ehat_" + std::to_string(n); }, eulerian_row}},
      {"touchard", {60, [](int n) { return "T_" + std::to_string(n); }, touchard_riordan}},
  };
  return kinds;
}

int cmd_table(const std::string& kind_name, int n_max, const std::string& format, unsigned jobs) {
  const auto& kinds = table_kinds();
  const auto it = kinds.find(kind_name);
  if (it == kinds.end()) {
    std::cerr << "error: unknown table kind '" << kind_name << "'\n";
    return kExitUsage;
  }
  const TableKind& kind = it->second;
  if (n_max < 0 || n_max > kind.budget) {
    std::cerr << "error: --n-max for " << kind_name << " must be in 0.." << kind.budget << "\n";
    return kExitUsage;
  }
  const auto values = parallel_map(static_cast<std::size_t>(n_max) + 1, jobs,
                                   [&](std::size_t n) { return kind.value(static_cast<int>(n)); });
  if (format == "text") {
    for (int n = 0; n <= n_max; ++n) {
      std::cout << kind.label(n) << " = " << values[static_cast<std::size_t>(n)].to_string() << "\n";
    }
  } else if (format == "csv") {
    std::cout << "n,coef,yExp,qExp\n";
    for (int n = 0; n <= n_max; ++n) {
      for (const auto& t : values[static_cast<std::size_t>(n)].terms()) {
        std::cout << n << "," << t.coef.get_str() << "," << t.y_exp << "," << t.q_exp << "\n";
      }
    }
  } else {
    std::cout << "{\"kind\":\"" << kind_name << "\",\"rows\":[";
    for (int n = 0; n <= n_max; ++n) {
      if (n > 0) std::cout << ",";
      std::cout << "{\"n\":" << n << ",\"label\":\"" << kind.label(n)
                << "\",\"value\":" << to_json(values[static_cast<std::size_t>(n)]) << "}";
    }
    std::cout << "]}\n";
  }
  return kExitPass;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opts) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    std::cerr << "error: unknown suite '" << suite << "'\n";
    return kExitUsage;
  }
  const VerificationReport report = run_suite(suite, opts);
  std::cout << report.render();
  return report.passed() ? kExitPass : kExitFail;
}

int cmd_bijection(const std::string& text) {
  const Permutation sigma = Permutation::parse(text);
  if (sigma.size() == 0) {
    std::cerr << "error: empty permutation\n";
    return kExitUsage;
  }
  const auto image = fv_map(sigma);
  const auto s = statistics(sigma);
  const auto lifted = f_map(sigma);
  std::cout << image.path.dump() << "\n";
  std::cout << "stats wex=" << s.wex << " asc=" << s.asc << " cr=" << s.cr << " fix=" << s.fix
            << " 31-2=" << s.p312 << "\n";
  std::cout << "tilde " << tilde(sigma).to_string() << "\n";
  std::cout << "f " << lifted.full.path.dump() << "\n";
  std::cout << "f-reduced " << lifted.reduced.dump() << "\n";
  return kExitPass;
}

int cmd_tableaux(int n, bool derangement) {
  bool first = true;
  auto visit = [&](const PermutationTableau& t) {
    if (!first) std::cout << "\n";
    first = false;
    std::cout << dump(t);
  };
  if (derangement) {
    enumerate_dt(n, visit);
  } else {
    enumerate_pt(n, visit);
  }
  return kExitPass;
}

int cmd_paths(const std::string& family_text, int length, bool no_unit_peak) {
  const PathFamily all[] = {
      PathFamily::Laguerre,      PathFamily::LargeLaguerre, PathFamily::DerangementMotzkin,
      PathFamily::EulerSecant,   PathFamily::EulerTangent,  PathFamily::Touchard,
      PathFamily::SecantSigned,  PathFamily::TangentSigned, PathFamily::SchroderSecant,
      PathFamily::SchroderTangent, PathFamily::LeftFactor};
  for (PathFamily f : all) {
    if (family_name(f) != family_text) continue;
    if (length < 0 || length > 12) {
      std::cerr << "error: path length must be in 0..12\n";
      return kExitUsage;
    }
    enumerate_paths(f, length, no_unit_peak,
                    [](const WeightedPath& p) { std::cout << p.dump() << "\n"; });
    return kExitPass;
  }
  std::cerr << "error: unknown path family '" << family_text << "'\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-Euler number computations and identity checks"};
  app.require_subcommand(1);

  std::string kind;
  int n_max = -1;
  std::string format = "text";
  unsigned jobs = 1;
  auto* table = app.add_subcommand("table", "Print a table of polynomials");
  table->add_option("kind", kind, "etangent, esecant, A, B, eulerian or touchard")->required();
  table->add_option("--n-max", n_max, "Largest index")->default_val(5);
  table->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->default_val("text");
  table->add_option("--jobs", jobs, "Worker threads")->default_val(1);

  std::string suite;
  int verify_n_max = -1;
  std::uint64_t seed = VerifyOptions{}.seed;
  auto* verify = app.add_subcommand("verify", "Run an identity-verification suite");
  verify->add_option("suite", suite, "Suite name or 'all'")->required();
  verify->add_option("--n-max", verify_n_max, "Override the suite's main size bound");
  verify->add_option("--jobs", jobs, "Worker threads")->default_val(1);
  verify->add_option("--seed", seed, "Seed for randomized checks");

  std::string permutation;
  auto* bijection = app.add_subcommand("bijection", "Show the Francon-Viennot image of a permutation");
  bijection->add_option("permutation", permutation, "One-line digits or comma-separated")
      ->required();

  int tableau_n = 0;
  bool derangement = false;
  auto* tableaux = app.add_subcommand("tableaux", "Dump all permutation tableaux of a half-perimeter");
  tableaux->add_option("n", tableau_n, "Half-perimeter")->required();
  tableaux->add_flag("--derangement", derangement, "Only derangement tableaux");

  std::string family;
  int length = 0;
  bool no_unit_peak = false;
  auto* paths = app.add_subcommand("paths", "Dump all weighted paths of a family");
  paths->add_option("family", family, "Path family name")->required();
  paths->add_option("length", length, "Length in units")->required();
  paths->add_flag("--no-unit-peak", no_unit_peak, "Skip paths with a unit peak");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (table->parsed()) return cmd_table(kind, n_max, format, jobs);
    if (verify->parsed()) {
      VerifyOptions opts;
      if (verify_n_max >= 0) opts.n_max = verify_n_max;
      opts.jobs = jobs;
      opts.seed = seed;
      if (const char* env = std::getenv("QEULER_BUDGET_OVERRIDE")) {
        opts.overrides = parse_budget_overrides(env);
      }
      return cmd_verify(suite, opts);
    }
    if (bijection->parsed()) return cmd_bijection(permutation);
    if (tableaux->parsed()) return cmd_tableaux(tableau_n, derangement);
    if (paths->parsed()) return cmd_paths(family, length, no_unit_peak);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
