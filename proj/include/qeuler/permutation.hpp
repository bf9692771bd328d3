#pragma once

// Permutations with the boundary convention sigma(0) = 0, sigma(n+1) = n+1,
// their statistics, and brute-force generating polynomials.

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qeuler/polynomial.hpp"

namespace qeuler {

class Permutation {
 public:
  Permutation() = default;
  /// One-line notation sigma(1..n); throws std::invalid_argument unless the
  /// images form a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Accepts one-line digits ("4371265") or comma-separated values ("10,2,1,...").
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(padded_.size()) - 2; }
  /// sigma(i) for 0 <= i <= n+1, with sigma(0) = 0 and sigma(n+1) = n+1.
  int operator[](int i) const { return padded_[static_cast<std::size_t>(i)]; }
  std::span<const int> images() const { return std::span<const int>(padded_).subspan(1, size()); }
  /// The boundary-padded array sigma(0..n+1).
  std::span<const int> padded() const { return padded_; }

  Permutation inverse() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> padded_{0, 1};
};

struct StatVector {
  int wex = 0;
  int asc = 0;
  int cr = 0;
  int fix = 0;
  int p312 = 0;
  friend bool operator==(const StatVector&, const StatVector&) = default;
};

int crossings(const Permutation& sigma);
int weak_exceedances(const Permutation& sigma);
int ascents(const Permutation& sigma);
int fixed_points(const Permutation& sigma);
/// Occurrences of the generalized pattern 31-2: pairs (u, j) with u+1 < j
/// and sigma(u) > sigma(j) > sigma(u+1).
int pattern_31_2(const Permutation& sigma);
StatVector statistics(const Permutation& sigma);

struct PermutationClass {
  bool alternating = false;
  bool derangement = false;
  bool fpf_involution = false;
};

/// Alternating means sigma(2i-1) > sigma(2i) < sigma(2i+1) for i <= n/2,
/// using the boundary values.
PermutationClass classify(const Permutation& sigma);

namespace detail {
// Kernels over a boundary-padded one-line array sigma(0..n+1).
int crossings(std::span<const int> padded);
int weak_exceedances(std::span<const int> padded);
int ascents(std::span<const int> padded);
int pattern_31_2(std::span<const int> padded);
bool is_alternating(std::span<const int> padded);
bool is_derangement(std::span<const int> padded);
}  // namespace detail

/// Bounds and parallelism for exhaustive enumeration.
struct EnumerationOptions {
  int bound = 10;
  unsigned jobs = 1;
};

/// Visits every permutation of size n in lexicographic order. The callback
/// receives the boundary-padded array.
void for_each_permutation(int n, const std::function<void(std::span<const int>)>& visit);
/// Same, restricted to permutations with sigma(1) == first.
void for_each_permutation_with_first(int n, int first,
                                     const std::function<void(std::span<const int>)>& visit);

/// Dense histogram of a pair of statistics; entry (a, b) counts objects
/// with first statistic a and second statistic b.
struct JointDistribution {
  int width = 0;   // range of the second statistic
  std::vector<std::uint64_t> counts;
  std::uint64_t at(int a, int b) const;
  friend bool operator==(const JointDistribution&, const JointDistribution&) = default;
  /// sum counts(a, b) y^a q^b
  Poly to_poly() const;
};

enum class StatPair { WexCr, AscPattern312 };

/// Joint distribution over S_n (or D_n when derangements_only).
JointDistribution joint_distribution(int n, StatPair pair, bool derangements_only,
                                     const EnumerationOptions& opts = {});

/// A_n(y,q) = sum over S_n of y^wex q^cr.
Poly gen_A(int n, const EnumerationOptions& opts = {});
/// B_n(y,q) = sum over derangements of y^wex q^cr.
Poly gen_B(int n, const EnumerationOptions& opts = {});
/// sum over alternating permutations of q^{31-2}.
Poly gen_alternating_312(int n, const EnumerationOptions& opts = {});
/// sum over fixed-point-free involutions of size `size` of q^{cr/2}.
/// Throws OddCrossingCount if some involution has an odd crossing number.
Poly gen_involution_crossings(int size, const EnumerationOptions& opts = {});
/// Fixed-point-free involutions of the given (even) size.
std::vector<Permutation> fpf_involutions(int size);

struct InversionCheck {
  bool ok = true;
  int first_failure = -1;
};

/// Checks both inclusion-exclusion formulas linking A_k and B_k for every k <= n.
InversionCheck inversion_check(int n, const EnumerationOptions& opts = {});

}  // namespace qeuler
