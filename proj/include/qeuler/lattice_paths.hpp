#pragma once

// Weighted Motzkin, Dyck and Schroder paths: step weight rules per family,
// transfer-matrix sums, explicit enumeration, truncated continued fractions
// and the left-factor decomposition of signed Dyck paths.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qeuler/polynomial.hpp"

namespace qeuler {

enum class StepDirection { Up, Down, Flat };

/// sign * y^y_pow * q^q_pow
struct StepWeight {
  int sign = 1;
  int y_pow = 0;
  int q_pow = 0;

  bool is_unit() const { return sign == 1 && y_pow == 0 && q_pow == 0; }
  Poly to_poly() const { return Poly::monomial(sign, y_pow, q_pow); }
  friend bool operator==(const StepWeight&, const StepWeight&) = default;
};

struct Step {
  StepDirection direction = StepDirection::Flat;
  int start_height = 0;
  StepWeight weight;
  friend bool operator==(const Step&, const Step&) = default;
};

/// Each family fixes which steps exist and which weights a step starting at
/// height h may carry.
enum class PathFamily {
  /// Up y q^{0..h}; Flat y q^{0..h} or q^{0..h-1}; Down q^{0..h-1}.
  Laguerre,
  /// Up y q^{0..h}; Flat y q^{0..h} or q^{0..h}; Down q^{0..h}.
  LargeLaguerre,
  /// Up y q^{0..h}; Flat q^{0..h-1} or y q^{1..h}; Down q^{0..h-1}.
  /// Total weights y[h+1], (1+yq)[h], [h].
  DerangementMotzkin,
  /// Dyck; Up q^{0..h}; Down q^{0..h-1}.
  EulerSecant,
  /// Dyck; Up q^{0..h}; Down q^{0..h}.
  EulerTangent,
  /// Dyck; Up 1; Down q^{0..h-1}.
  Touchard,
  /// Dyck; Up 1 or -q^{h+1}; Down 1 or -q^h.
  SecantSigned,
  /// Dyck; Up 1 or -q^{h+1}; Down 1 or -q^{h+1}.
  TangentSigned,
  /// SecantSigned plus flat steps of width 2 and weight -1.
  SchroderSecant,
  /// TangentSigned plus flat steps of width 2 and weight -1.
  SchroderTangent,
  /// Unweighted Up/Down steps, any final height.
  LeftFactor,
};

std::string family_name(PathFamily family);
bool family_is_closed(PathFamily family);
bool family_has_flat(PathFamily family);
/// Length units consumed by a flat step.
int flat_width(PathFamily family);
/// Weights a step in `direction` starting at height h may carry.
std::vector<StepWeight> step_options(PathFamily family, StepDirection direction, int h);
/// Sum of step_options as a polynomial.
Poly step_total(PathFamily family, StepDirection direction, int h);

class WeightedPath {
 public:
  explicit WeightedPath(PathFamily family = PathFamily::LeftFactor) : family_(family) {}
  /// Validates heights and weight ceilings; throws std::invalid_argument.
  WeightedPath(PathFamily family, std::vector<Step> steps);

  /// Builds a path starting at height 0 from directions and weights.
  static WeightedPath from_moves(PathFamily family, const std::vector<StepDirection>& directions,
                                 const std::vector<StepWeight>& weights);

  PathFamily family() const { return family_; }
  const std::vector<Step>& steps() const { return steps_; }
  std::size_t step_count() const { return steps_.size(); }
  /// Length in units; Schroder flat steps count twice.
  int length() const;
  int final_height() const;
  bool has_flat_step() const;
  /// Product of the step weights.
  Poly weight() const;
  /// True when some Up step of weight 1 is immediately followed by a Down
  /// step of weight 1.
  bool has_unit_peak() const;
  /// "U[+1,1,0] D[+1,0,0]" style dump.
  std::string dump() const;

  friend bool operator==(const WeightedPath&, const WeightedPath&) = default;

 private:
  PathFamily family_;
  std::vector<Step> steps_;
};

std::string dump_step(const Step& step);

/// Total weight of closed paths of the given length (transfer recurrence over
/// height, heights capped at ceil(length/2)).
Poly family_sum(PathFamily family, int length);

/// Visits every weighted path of the family with the given length. With
/// forbid_unit_peaks, paths with an Up-Down pair both of weight 1 are skipped.
void enumerate_paths(PathFamily family, int length, bool forbid_unit_peaks,
                     const std::function<void(const WeightedPath&)>& visit);

/// Same total as family_sum (optionally with the peak restriction), by
/// exhaustive depth-first enumeration of weighted paths.
Poly enumerated_sum(PathFamily family, int length, bool forbid_unit_peaks);

/// E_{2n+delta}(q) as a weighted Dyck path sum of length 2n.
Poly euler_dyck_sum(int n, int delta);
/// Total weight of Laguerre histories of size n (equals A_n(y,q)).
Poly laguerre_sum(int n);
/// Total weight of large Laguerre histories of size n >= 1 (n-1 steps).
Poly large_laguerre_sum(int n);
/// Total weight of derangement Motzkin paths of length n (equals B_n(y,q)).
Poly derangement_motzkin_sum(int n);
/// Dyck paths of length 2n with Up weight 1 and Down weight [h].
Poly touchard_dyck_sum(int n);

enum class PathMethod { Transfer, Enumerate };

struct PathOptions {
  int bound = 8;
  PathMethod method = PathMethod::Transfer;
};

enum class SignedVariant { Secant, Tangent };

/// Signed Dyck paths of length 2k with no unit peak (secant weights).
Poly mk_path_sum(int k, const PathOptions& opts = {});
/// Signed Dyck paths of length 2k with no unit peak (tangent weights).
Poly nk_path_sum(int k, const PathOptions& opts = {});
/// Signed Schroder paths of length 2k.
Poly schroder_signed_sum(int k, SignedVariant variant, const PathOptions& opts = {});
/// Unrestricted signed Dyck paths of length 2n.
Poly signed_dyck_sum(int n, SignedVariant variant);

/// Number of left factors of Dyck paths with `steps` steps ending at
/// `final_height`. Throws std::invalid_argument for odd `steps`.
Integer left_factor_count(int steps, int final_height);

/// Splits a signed Dyck path H into (H1, H2): H1 replaces every step outside
/// the maximal all-weight-1 Dyck factors by an Up step (unweighted left
/// factor), H2 deletes those factors.
std::pair<WeightedPath, WeightedPath> penaud_decompose(const WeightedPath& path);

/// Continued fraction with polynomial level weights, indexed from h = 0:
///   J: 1/(1 - w(0) x/(1 - w(1) x/...))
///   T: 1/(1 + t - w(0) t/(1 + t - w(1) t/...))
struct CFSpec {
  enum class Kind { J, T };
  Kind kind = Kind::J;
  std::function<Poly(int)> level_weight;
};

/// Coefficients 0..N of the fraction truncated at `depth` levels with tail 1.
/// depth < 0 selects N+1, which is exact because level h first contributes
/// at order h+1.
std::vector<Poly> cf_series(const CFSpec& spec, int n_max, int depth = -1);

}  // namespace qeuler
