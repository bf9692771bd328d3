#include "qeuler/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qeuler/errors.hpp"
#include "qeuler/parallel.hpp"

namespace qeuler {

Permutation::Permutation(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  padded_.clear();
  padded_.reserve(images.size() + 2);
  padded_.push_back(0);
  padded_.insert(padded_.end(), images.begin(), images.end());
  padded_.push_back(n + 1);
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> images;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t comma = text.find(',', start);
      if (comma == std::string_view::npos) comma = text.size();
      std::string_view field = text.substr(start, comma - start);
      if (field.empty() || field.size() > 6 ||
          !std::all_of(field.begin(), field.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw std::invalid_argument("malformed permutation '" + std::string(text) + "'");
      }
      images.push_back(std::stoi(std::string(field)));
      start = comma + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument("malformed permutation '" + std::string(text) + "'");
      }
      images.push_back(c - '0');
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(static_cast<std::size_t>(size()));
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)[i] - 1)] = i;
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  const bool wide = size() >= 10;
  std::string out;
  for (int i = 1; i <= size(); ++i) {
    if (wide && i > 1) out += ",";
    out += std::to_string((*this)[i]);
  }
  return out;
}

namespace detail {

int crossings(std::span<const int> s) {
  const int n = static_cast<int>(s.size()) - 2;
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if ((j <= s[i] && s[i] < s[j]) || (s[i] < s[j] && s[j] < i)) ++count;
    }
  }
  return count;
}

int weak_exceedances(std::span<const int> s) {
  const int n = static_cast<int>(s.size()) - 2;
  int count = 0;
  for (int i = 1; i <= n; ++i) count += s[i] >= i ? 1 : 0;
  return count;
}

int ascents(std::span<const int> s) {
  const int n = static_cast<int>(s.size()) - 2;
  int count = 0;
  for (int i = 1; i <= n; ++i) count += s[i] < s[i + 1] ? 1 : 0;
  return count;
}

int pattern_31_2(std::span<const int> s) {
  const int n = static_cast<int>(s.size()) - 2;
  int count = 0;
  for (int u = 1; u + 2 <= n; ++u) {
    if (s[u] <= s[u + 1]) continue;
    for (int j = u + 2; j <= n; ++j) count += (s[u + 1] < s[j] && s[j] < s[u]) ? 1 : 0;
  }
  return count;
}

bool is_alternating(std::span<const int> s) {
  const int n = static_cast<int>(s.size()) - 2;
  for (int i = 1; 2 * i <= n; ++i) {
    if (!(s[2 * i - 1] > s[2 * i] && s[2 * i] < s[2 * i + 1])) return false;
  }
  return true;
}

bool is_derangement(std::span<const int> s) {
  const int n = static_cast<int>(s.size()) - 2;
  for (int i = 1; i <= n; ++i) {
    if (s[i] == i) return false;
  }
  return true;
}

}  // namespace detail

int crossings(const Permutation& sigma) { return detail::crossings(sigma.padded()); }
int weak_exceedances(const Permutation& sigma) { return detail::weak_exceedances(sigma.padded()); }
int ascents(const Permutation& sigma) { return detail::ascents(sigma.padded()); }
int pattern_31_2(const Permutation& sigma) { return detail::pattern_31_2(sigma.padded()); }

int fixed_points(const Permutation& sigma) {
  int count = 0;
  for (int i = 1; i <= sigma.size(); ++i) count += sigma[i] == i ? 1 : 0;
  return count;
}

StatVector statistics(const Permutation& sigma) {
  return StatVector{weak_exceedances(sigma), ascents(sigma), crossings(sigma),
                    fixed_points(sigma), pattern_31_2(sigma)};
}

PermutationClass classify(const Permutation& sigma) {
  PermutationClass c;
  c.alternating = detail::is_alternating(sigma.padded());
  c.derangement = detail::is_derangement(sigma.padded());
  c.fpf_involution = c.derangement;
  for (int i = 1; i <= sigma.size() && c.fpf_involution; ++i) {
    c.fpf_involution = sigma[sigma[i]] == i;
  }
  return c;
}

void for_each_permutation_with_first(int n, int first,
                                     const std::function<void(std::span<const int>)>& visit) {
  if (n < 1 || first < 1 || first > n) throw std::invalid_argument("bad partition of S_n");
  std::vector<int> s(static_cast<std::size_t>(n) + 2);
  s[0] = 0;
  s[1] = first;
  for (int i = 2, v = 1; i <= n; ++i, ++v) {
    if (v == first) ++v;
    s[static_cast<std::size_t>(i)] = v;
  }
  s[static_cast<std::size_t>(n) + 1] = n + 1;
  do {
    visit(s);
  } while (std::next_permutation(s.begin() + 2, s.begin() + n + 1));
}

void for_each_permutation(int n, const std::function<void(std::span<const int>)>& visit) {
  if (n < 0) throw std::invalid_argument("negative permutation size");
  if (n == 0) {
    const int empty[] = {0, 1};
    visit(empty);
    return;
  }
  for (int first = 1; first <= n; ++first) for_each_permutation_with_first(n, first, visit);
}

std::uint64_t JointDistribution::at(int a, int b) const {
  if (a < 0 || b < 0 || b >= width) return 0;
  const std::size_t idx = static_cast<std::size_t>(a) * static_cast<std::size_t>(width) +
                          static_cast<std::size_t>(b);
  return idx < counts.size() ? counts[idx] : 0;
}

Poly JointDistribution::to_poly() const {
  std::vector<Term> terms;
  for (std::size_t idx = 0; idx < counts.size(); ++idx) {
    if (counts[idx] == 0) continue;
    const int a = static_cast<int>(idx / static_cast<std::size_t>(width));
    const int b = static_cast<int>(idx % static_cast<std::size_t>(width));
    Integer c;
    mpz_set_ui(c.get_mpz_t(), counts[idx]);
    terms.push_back(Term{c, a, b});
  }
  return Poly::from_terms(std::move(terms));
}

namespace {

void check_bound(const char* what, int n, const EnumerationOptions& opts) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative size");
  if (n > opts.bound) throw BudgetExceeded(what, n, opts.bound);
}

}  // namespace

JointDistribution joint_distribution(int n, StatPair pair, bool derangements_only,
                                     const EnumerationOptions& opts) {
  check_bound("joint_distribution", n, opts);
  JointDistribution dist;
  dist.width = n * n + 1;
  const std::size_t cells = static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(dist.width);

  auto tally = [&](std::span<const int> s, std::vector<std::uint64_t>& counts) {
    if (derangements_only && !detail::is_derangement(s)) return;
    int a = 0;
    int b = 0;
    if (pair == StatPair::WexCr) {
      a = detail::weak_exceedances(s);
      b = detail::crossings(s);
    } else {
      a = detail::ascents(s);
      b = detail::pattern_31_2(s);
    }
    ++counts[static_cast<std::size_t>(a) * static_cast<std::size_t>(dist.width) +
             static_cast<std::size_t>(b)];
  };

  if (n == 0) {
    dist.counts.assign(cells, 0);
    for_each_permutation(0, [&](std::span<const int> s) { tally(s, dist.counts); });
    return dist;
  }
  // Partition on sigma(1); the partial histograms are summed in index order.
  auto partials = parallel_map(static_cast<std::size_t>(n), opts.jobs, [&](std::size_t i) {
    std::vector<std::uint64_t> counts(cells, 0);
    for_each_permutation_with_first(n, static_cast<int>(i) + 1,
                                    [&](std::span<const int> s) { tally(s, counts); });
    return counts;
  });
  dist.counts.assign(cells, 0);
  for (const auto& part : partials) {
    for (std::size_t c = 0; c < cells; ++c) dist.counts[c] += part[c];
  }
  return dist;
}

Poly gen_A(int n, const EnumerationOptions& opts) {
  check_bound("gen_A", n, opts);
  return joint_distribution(n, StatPair::WexCr, false, opts).to_poly();
}

Poly gen_B(int n, const EnumerationOptions& opts) {
  check_bound("gen_B", n, opts);
  return joint_distribution(n, StatPair::WexCr, true, opts).to_poly();
}

namespace {

// Depth-first generation of alternating permutations with prefix pruning,
// in lexicographic order.
void alternating_dfs(int n, int pos, std::vector<int>& s, std::vector<bool>& used,
                     std::vector<std::uint64_t>& counts) {
  if (pos > n) {
    ++counts[static_cast<std::size_t>(detail::pattern_31_2(s))];
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (used[static_cast<std::size_t>(v)]) continue;
    if (pos % 2 == 0 && !(v < s[static_cast<std::size_t>(pos) - 1])) continue;
    if (pos % 2 == 1 && pos >= 3 && !(v > s[static_cast<std::size_t>(pos) - 1])) continue;
    used[static_cast<std::size_t>(v)] = true;
    s[static_cast<std::size_t>(pos)] = v;
    alternating_dfs(n, pos + 1, s, used, counts);
    used[static_cast<std::size_t>(v)] = false;
  }
}

}  // namespace

Poly gen_alternating_312(int n, const EnumerationOptions& opts) {
  check_bound("gen_alternating_312", n, opts);
  std::vector<int> s(static_cast<std::size_t>(n) + 2, 0);
  s[static_cast<std::size_t>(n) + 1] = n + 1;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n * n) + 1, 0);
  alternating_dfs(n, 1, s, used, counts);
  std::vector<Term> terms;
  for (std::size_t e = 0; e < counts.size(); ++e) {
    if (counts[e] == 0) continue;
    Integer c;
    mpz_set_ui(c.get_mpz_t(), counts[e]);
    terms.push_back(Term{c, 0, static_cast<int>(e)});
  }
  return Poly::from_terms(std::move(terms));
}

namespace {

void pair_up(std::vector<int>& images, std::vector<Permutation>& out) {
  auto first_free = std::find(images.begin(), images.end(), 0);
  if (first_free == images.end()) {
    out.emplace_back(images);
    return;
  }
  const int i = static_cast<int>(first_free - images.begin()) + 1;
  for (int j = i + 1; j <= static_cast<int>(images.size()); ++j) {
    if (images[static_cast<std::size_t>(j) - 1] != 0) continue;
    images[static_cast<std::size_t>(i) - 1] = j;
    images[static_cast<std::size_t>(j) - 1] = i;
    pair_up(images, out);
    images[static_cast<std::size_t>(i) - 1] = 0;
    images[static_cast<std::size_t>(j) - 1] = 0;
  }
}

}  // namespace

std::vector<Permutation> fpf_involutions(int size) {
  if (size < 0) throw std::invalid_argument("negative involution size");
  std::vector<Permutation> out;
  if (size % 2 != 0) return out;
  std::vector<int> images(static_cast<std::size_t>(size), 0);
  pair_up(images, out);
  return out;
}

Poly gen_involution_crossings(int size, const EnumerationOptions& opts) {
  check_bound("gen_involution_crossings", size, opts);
  std::vector<Term> terms;
  for (const auto& inv : fpf_involutions(size)) {
    const int cr = crossings(inv);
    if (cr % 2 != 0) {
      throw OddCrossingCount("involution " + inv.to_string() + " has " + std::to_string(cr) +
                             " crossings");
    }
    terms.push_back(Term{1, 0, cr / 2});
  }
  return Poly::from_terms(std::move(terms));
}

InversionCheck inversion_check(int n, const EnumerationOptions& opts) {
  check_bound("inversion_check", n, opts);
  std::vector<Poly> a;
  std::vector<Poly> b;
  for (int k = 0; k <= n; ++k) {
    a.push_back(gen_A(k, opts));
    b.push_back(gen_B(k, opts));
  }
  for (int m = 0; m <= n; ++m) {
    Poly a_from_b;
    Poly b_from_a;
    for (int k = 0; k <= m; ++k) {
      a_from_b += b[static_cast<std::size_t>(k)].scaled(binom_safe(m, k), m - k, 0);
      const Integer sign = (m - k) % 2 == 0 ? 1 : -1;
      b_from_a += a[static_cast<std::size_t>(k)].scaled(sign * binom_safe(m, k), m - k, 0);
    }
    if (!(a_from_b == a[static_cast<std::size_t>(m)]) ||
        !(b_from_a == b[static_cast<std::size_t>(m)])) {
      return InversionCheck{false, m};
    }
  }
  return InversionCheck{};
}

}  // namespace qeuler
