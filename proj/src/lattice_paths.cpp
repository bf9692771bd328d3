#include "qeuler/lattice_paths.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "qeuler/errors.hpp"

namespace qeuler {
namespace {

void push_range(std::vector<StepWeight>& out, int y_pow, int low, int high) {
  for (int i = low; i <= high; ++i) out.push_back(StepWeight{1, y_pow, i});
}

char direction_letter(StepDirection d) {
  switch (d) {
    case StepDirection::Up:
      return 'U';
    case StepDirection::Down:
      return 'D';
    case StepDirection::Flat:
      return 'F';
  }
  return '?';
}

int height_change(StepDirection d) {
  return d == StepDirection::Up ? 1 : (d == StepDirection::Down ? -1 : 0);
}

}  // namespace

std::string family_name(PathFamily family) {
  switch (family) {
    case PathFamily::Laguerre:
      return "laguerre";
    case PathFamily::LargeLaguerre:
      return "large-laguerre";
    case PathFamily::DerangementMotzkin:
      return "derangement-motzkin";
    case PathFamily::EulerSecant:
      return "euler-secant";
    case PathFamily::EulerTangent:
      return "euler-tangent";
    case PathFamily::Touchard:
      return "touchard";
    case PathFamily::SecantSigned:
      return "secant-signed";
    case PathFamily::TangentSigned:
      return "tangent-signed";
    case PathFamily::SchroderSecant:
      return "schroder-secant";
    case PathFamily::SchroderTangent:
      return "schroder-tangent";
    case PathFamily::LeftFactor:
      return "left-factor";
  }
  return "unknown";
}

bool family_is_closed(PathFamily family) { return family != PathFamily::LeftFactor; }

bool family_has_flat(PathFamily family) {
  switch (family) {
    case PathFamily::Laguerre:
    case PathFamily::LargeLaguerre:
    case PathFamily::DerangementMotzkin:
    case PathFamily::SchroderSecant:
    case PathFamily::SchroderTangent:
      return true;
    default:
      return false;
  }
}

int flat_width(PathFamily family) {
  return (family == PathFamily::SchroderSecant || family == PathFamily::SchroderTangent) ? 2 : 1;
}

std::vector<StepWeight> step_options(PathFamily family, StepDirection direction, int h) {
  std::vector<StepWeight> out;
  if (direction == StepDirection::Flat && !family_has_flat(family)) return out;
  const bool signed_tangent =
      family == PathFamily::TangentSigned || family == PathFamily::SchroderTangent;
  switch (family) {
    case PathFamily::Laguerre:
      if (direction == StepDirection::Up) push_range(out, 1, 0, h);
      if (direction == StepDirection::Flat) {
        push_range(out, 1, 0, h);
        push_range(out, 0, 0, h - 1);
      }
      if (direction == StepDirection::Down) push_range(out, 0, 0, h - 1);
      break;
    case PathFamily::LargeLaguerre:
      if (direction == StepDirection::Up) push_range(out, 1, 0, h);
      if (direction == StepDirection::Flat) {
        push_range(out, 1, 0, h);
        push_range(out, 0, 0, h);
      }
      if (direction == StepDirection::Down) push_range(out, 0, 0, h);
      break;
    case PathFamily::DerangementMotzkin:
      if (direction == StepDirection::Up) push_range(out, 1, 0, h);
      if (direction == StepDirection::Flat) {
        push_range(out, 0, 0, h - 1);
        push_range(out, 1, 1, h);
      }
      if (direction == StepDirection::Down) push_range(out, 0, 0, h - 1);
      break;
    case PathFamily::EulerSecant:
      if (direction == StepDirection::Up) push_range(out, 0, 0, h);
      if (direction == StepDirection::Down) push_range(out, 0, 0, h - 1);
      break;
    case PathFamily::EulerTangent:
      if (direction == StepDirection::Up) push_range(out, 0, 0, h);
      if (direction == StepDirection::Down) push_range(out, 0, 0, h);
      break;
    case PathFamily::Touchard:
      if (direction == StepDirection::Up) out.push_back(StepWeight{});
      if (direction == StepDirection::Down) push_range(out, 0, 0, h - 1);
      break;
    case PathFamily::SecantSigned:
    case PathFamily::TangentSigned:
    case PathFamily::SchroderSecant:
    case PathFamily::SchroderTangent:
      if (direction == StepDirection::Up) {
        out.push_back(StepWeight{});
        out.push_back(StepWeight{-1, 0, h + 1});
      }
      if (direction == StepDirection::Down) {
        out.push_back(StepWeight{});
        out.push_back(StepWeight{-1, 0, signed_tangent ? h + 1 : h});
      }
      if (direction == StepDirection::Flat) out.push_back(StepWeight{-1, 0, 0});
      break;
    case PathFamily::LeftFactor:
      if (direction != StepDirection::Flat) out.push_back(StepWeight{});
      break;
  }
  return out;
}

Poly step_total(PathFamily family, StepDirection direction, int h) {
  std::vector<Term> terms;
  for (const auto& w : step_options(family, direction, h)) {
    terms.push_back(Term{w.sign, w.y_pow, w.q_pow});
  }
  return Poly::from_terms(std::move(terms));
}

WeightedPath::WeightedPath(PathFamily family, std::vector<Step> steps)
    : family_(family), steps_(std::move(steps)) {
  int height = 0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const Step& s = steps_[i];
    if (s.start_height != height) {
      throw std::invalid_argument("step " + std::to_string(i) + " starts at height " +
                                  std::to_string(s.start_height) + ", expected " +
                                  std::to_string(height));
    }
    if (s.direction == StepDirection::Down && height == 0) {
      throw std::invalid_argument("path goes below height 0");
    }
    const auto options = step_options(family_, s.direction, height);
    if (std::find(options.begin(), options.end(), s.weight) == options.end()) {
      throw std::invalid_argument("step " + dump_step(s) + " is not allowed in family " +
                                  family_name(family_));
    }
    height += height_change(s.direction);
  }
  if (family_is_closed(family_) && height != 0) {
    throw std::invalid_argument("closed path family " + family_name(family_) +
                                " must end at height 0");
  }
}

WeightedPath WeightedPath::from_moves(PathFamily family,
                                      const std::vector<StepDirection>& directions,
                                      const std::vector<StepWeight>& weights) {
  if (directions.size() != weights.size()) {
    throw std::invalid_argument("directions and weights differ in length");
  }
  std::vector<Step> steps;
  int height = 0;
  for (std::size_t i = 0; i < directions.size(); ++i) {
    steps.push_back(Step{directions[i], height, weights[i]});
    height += height_change(directions[i]);
  }
  return WeightedPath(family, std::move(steps));
}

int WeightedPath::length() const {
  int total = 0;
  for (const auto& s : steps_) total += s.direction == StepDirection::Flat ? flat_width(family_) : 1;
  return total;
}

int WeightedPath::final_height() const {
  if (steps_.empty()) return 0;
  return steps_.back().start_height + height_change(steps_.back().direction);
}

bool WeightedPath::has_flat_step() const {
  return std::any_of(steps_.begin(), steps_.end(),
                     [](const Step& s) { return s.direction == StepDirection::Flat; });
}

Poly WeightedPath::weight() const {
  int sign = 1;
  int y_pow = 0;
  int q_pow = 0;
  for (const auto& s : steps_) {
    sign *= s.weight.sign;
    y_pow += s.weight.y_pow;
    q_pow += s.weight.q_pow;
  }
  return Poly::monomial(sign, y_pow, q_pow);
}

bool WeightedPath::has_unit_peak() const {
  for (std::size_t i = 0; i + 1 < steps_.size(); ++i) {
    if (steps_[i].direction == StepDirection::Up && steps_[i].weight.is_unit() &&
        steps_[i + 1].direction == StepDirection::Down && steps_[i + 1].weight.is_unit()) {
      return true;
    }
  }
  return false;
}

std::string dump_step(const Step& step) {
  std::string out(1, direction_letter(step.direction));
  out += "[";
  out += step.weight.sign < 0 ? "-1" : "+1";
  out += "," + std::to_string(step.weight.y_pow) + "," + std::to_string(step.weight.q_pow) + "]";
  return out;
}

std::string WeightedPath::dump() const {
  std::string out;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i > 0) out += " ";
    out += dump_step(steps_[i]);
  }
  return out;
}

Poly family_sum(PathFamily family, int length) {
  if (length < 0) throw std::invalid_argument("family_sum: negative length");
  if (!family_is_closed(family)) throw std::invalid_argument("family_sum: open family");
  const int cap = (length + 1) / 2;
  const int width = flat_width(family);
  const bool flats = family_has_flat(family);
  std::vector<Poly> up(static_cast<std::size_t>(cap) + 1);
  std::vector<Poly> down(static_cast<std::size_t>(cap) + 1);
  std::vector<Poly> flat(static_cast<std::size_t>(cap) + 1);
  for (int h = 0; h <= cap; ++h) {
    up[static_cast<std::size_t>(h)] = step_total(family, StepDirection::Up, h);
    down[static_cast<std::size_t>(h)] = step_total(family, StepDirection::Down, h);
    if (flats) flat[static_cast<std::size_t>(h)] = step_total(family, StepDirection::Flat, h);
  }
  // state[t][h]: total weight of prefixes of length t ending at height h.
  std::vector<std::vector<Poly>> state(static_cast<std::size_t>(length) + 1,
                                       std::vector<Poly>(static_cast<std::size_t>(cap) + 1));
  state[0][0] = 1;
  for (int t = 0; t < length; ++t) {
    auto& row = state[static_cast<std::size_t>(t)];
    for (int h = 0; h <= cap; ++h) {
      const Poly& cur = row[static_cast<std::size_t>(h)];
      if (cur.is_zero()) continue;
      auto& next = state[static_cast<std::size_t>(t) + 1];
      if (h + 1 <= cap) {
        next[static_cast<std::size_t>(h) + 1] += cur * up[static_cast<std::size_t>(h)];
      }
      if (h >= 1) next[static_cast<std::size_t>(h) - 1] += cur * down[static_cast<std::size_t>(h)];
      if (flats && t + width <= length) {
        state[static_cast<std::size_t>(t + width)][static_cast<std::size_t>(h)] +=
            cur * flat[static_cast<std::size_t>(h)];
      }
    }
  }
  return state[static_cast<std::size_t>(length)][0];
}

namespace {

struct DfsContext {
  PathFamily family;
  int length;
  bool forbid_unit_peaks;
  bool closed;
  int width;
};

template <typename Leaf>
void dfs(const DfsContext& ctx, int used, int height, bool last_unit_up, std::vector<Step>& steps,
         Leaf& leaf) {
  if (used == ctx.length) {
    if (!ctx.closed || height == 0) leaf(steps);
    return;
  }
  const int remaining = ctx.length - used;
  for (StepDirection d : {StepDirection::Up, StepDirection::Flat, StepDirection::Down}) {
    const int cost = d == StepDirection::Flat ? ctx.width : 1;
    if (cost > remaining) continue;
    if (d == StepDirection::Down && height == 0) continue;
    const int next_height = height + height_change(d);
    if (ctx.closed && next_height > remaining - cost) continue;
    for (const auto& w : step_options(ctx.family, d, height)) {
      if (ctx.forbid_unit_peaks && last_unit_up && d == StepDirection::Down && w.is_unit()) {
        continue;
      }
      steps.push_back(Step{d, height, w});
      dfs(ctx, used + cost, next_height, d == StepDirection::Up && w.is_unit(), steps, leaf);
      steps.pop_back();
    }
  }
}

}  // namespace

void enumerate_paths(PathFamily family, int length, bool forbid_unit_peaks,
                     const std::function<void(const WeightedPath&)>& visit) {
  if (length < 0) throw std::invalid_argument("enumerate_paths: negative length");
  const DfsContext ctx{family, length, forbid_unit_peaks, family_is_closed(family),
                       flat_width(family)};
  std::vector<Step> steps;
  auto leaf = [&](const std::vector<Step>& s) { visit(WeightedPath(family, s)); };
  dfs(ctx, 0, 0, false, steps, leaf);
}

namespace {

/// Exhaustive weighted-path walk that tallies signed monomials without
/// materializing paths.
class WeightTally {
 public:
  WeightTally(PathFamily family, int length, bool forbid_unit_peaks)
      : length_(length),
        forbid_(forbid_unit_peaks),
        closed_(family_is_closed(family)),
        width_(flat_width(family)),
        q_span_((length + 1) * (length + 2)),
        tally_(static_cast<std::size_t>(q_span_) * static_cast<std::size_t>(length + 1), 0) {
    const int cap = length + 1;
    for (int d = 0; d < 3; ++d) {
      options_[d].resize(static_cast<std::size_t>(cap) + 1);
      for (int h = 0; h <= cap; ++h) {
        options_[d][static_cast<std::size_t>(h)] =
            step_options(family, static_cast<StepDirection>(d), h);
      }
    }
  }

  void run() { walk(0, 0, false, 1, 0, 0); }

  Poly result() const {
    std::vector<Term> terms;
    for (std::size_t idx = 0; idx < tally_.size(); ++idx) {
      if (tally_[idx] == 0) continue;
      const int y = static_cast<int>(idx / static_cast<std::size_t>(q_span_));
      const int q = static_cast<int>(idx % static_cast<std::size_t>(q_span_));
      terms.push_back(Term{Integer(static_cast<long>(tally_[idx])), y, q});
    }
    return Poly::from_terms(std::move(terms));
  }

 private:
  void walk(int used, int height, bool last_unit_up, int sign, int y_pow, int q_pow) {
    if (used == length_) {
      if (!closed_ || height == 0) {
        tally_[static_cast<std::size_t>(y_pow * q_span_ + q_pow)] += sign;
      }
      return;
    }
    const int remaining = length_ - used;
    for (int d = 0; d < 3; ++d) {
      const auto dir = static_cast<StepDirection>(d);
      const int cost = dir == StepDirection::Flat ? width_ : 1;
      if (cost > remaining) continue;
      if (dir == StepDirection::Down && height == 0) continue;
      const int next_height = height + height_change(dir);
      if (closed_ && next_height > remaining - cost) continue;
      for (const auto& w : options_[d][static_cast<std::size_t>(height)]) {
        const bool unit = w.is_unit();
        if (forbid_ && last_unit_up && dir == StepDirection::Down && unit) continue;
        walk(used + cost, next_height, dir == StepDirection::Up && unit, sign * w.sign,
             y_pow + w.y_pow, q_pow + w.q_pow);
      }
    }
  }

  int length_;
  bool forbid_;
  bool closed_;
  int width_;
  int q_span_;
  std::vector<std::int64_t> tally_;
  std::array<std::vector<std::vector<StepWeight>>, 3> options_;
};

}  // namespace

Poly enumerated_sum(PathFamily family, int length, bool forbid_unit_peaks) {
  if (length < 0) throw std::invalid_argument("enumerated_sum: negative length");
  WeightTally tally(family, length, forbid_unit_peaks);
  tally.run();
  return tally.result();
}

Poly euler_dyck_sum(int n, int delta) {
  if (n < 0 || (delta != 0 && delta != 1)) throw std::invalid_argument("euler_dyck_sum");
  return family_sum(delta == 1 ? PathFamily::EulerTangent : PathFamily::EulerSecant, 2 * n);
}

Poly laguerre_sum(int n) { return family_sum(PathFamily::Laguerre, n); }

Poly large_laguerre_sum(int n) {
  if (n < 1) throw std::invalid_argument("large_laguerre_sum: size must be positive");
  return family_sum(PathFamily::LargeLaguerre, n - 1);
}

Poly derangement_motzkin_sum(int n) { return family_sum(PathFamily::DerangementMotzkin, n); }

Poly touchard_dyck_sum(int n) {
  if (n < 0) throw std::invalid_argument("touchard_dyck_sum: negative size");
  return family_sum(PathFamily::Touchard, 2 * n);
}

namespace {

// Signed Dyck paths without a unit peak, tracking whether the previous step
// was an Up step of weight 1.
Poly restricted_transfer(PathFamily family, int length) {
  const int cap = (length + 1) / 2;
  using Row = std::vector<std::array<Poly, 2>>;
  Row cur(static_cast<std::size_t>(cap) + 2);
  cur[0][0] = 1;
  for (int t = 0; t < length; ++t) {
    Row next(static_cast<std::size_t>(cap) + 2);
    for (int h = 0; h <= cap; ++h) {
      for (int flag = 0; flag < 2; ++flag) {
        const Poly& w = cur[static_cast<std::size_t>(h)][static_cast<std::size_t>(flag)];
        if (w.is_zero()) continue;
        if (h + 1 <= cap) {
          for (const auto& opt : step_options(family, StepDirection::Up, h)) {
            next[static_cast<std::size_t>(h) + 1][opt.is_unit() ? 1 : 0] += w * opt.to_poly();
          }
        }
        if (h >= 1) {
          for (const auto& opt : step_options(family, StepDirection::Down, h)) {
            if (flag == 1 && opt.is_unit()) continue;
            next[static_cast<std::size_t>(h) - 1][0] += w * opt.to_poly();
          }
        }
      }
    }
    cur = std::move(next);
  }
  return cur[0][0] + cur[0][1];
}

void check_path_bound(const char* what, int k, const PathOptions& opts) {
  if (k < 0) throw std::invalid_argument(std::string(what) + ": negative size");
  if (k > opts.bound) throw BudgetExceeded(what, k, opts.bound);
}

}  // namespace

Poly mk_path_sum(int k, const PathOptions& opts) {
  check_path_bound("mk_path_sum", k, opts);
  if (opts.method == PathMethod::Enumerate) {
    return enumerated_sum(PathFamily::SecantSigned, 2 * k, true);
  }
  return restricted_transfer(PathFamily::SecantSigned, 2 * k);
}

Poly nk_path_sum(int k, const PathOptions& opts) {
  check_path_bound("nk_path_sum", k, opts);
  if (opts.method == PathMethod::Enumerate) {
    return enumerated_sum(PathFamily::TangentSigned, 2 * k, true);
  }
  return restricted_transfer(PathFamily::TangentSigned, 2 * k);
}

Poly schroder_signed_sum(int k, SignedVariant variant, const PathOptions& opts) {
  check_path_bound("schroder_signed_sum", k, opts);
  const PathFamily family = variant == SignedVariant::Secant ? PathFamily::SchroderSecant
                                                             : PathFamily::SchroderTangent;
  if (opts.method == PathMethod::Enumerate) return enumerated_sum(family, 2 * k, false);
  return family_sum(family, 2 * k);
}

Poly signed_dyck_sum(int n, SignedVariant variant) {
  if (n < 0) throw std::invalid_argument("signed_dyck_sum: negative size");
  return family_sum(
      variant == SignedVariant::Secant ? PathFamily::SecantSigned : PathFamily::TangentSigned,
      2 * n);
}

Integer left_factor_count(int steps, int final_height) {
  if (steps < 0 || steps % 2 != 0) {
    throw std::invalid_argument("left_factor_count: step count must be even and nonnegative");
  }
  if (final_height < 0 || final_height > steps || final_height % 2 != 0) return 0;
  const int n = steps / 2;
  const int k = final_height / 2;
  return binom_safe(2 * n, n - k) - binom_safe(2 * n, n - k - 1);
}

std::pair<WeightedPath, WeightedPath> penaud_decompose(const WeightedPath& path) {
  const PathFamily family = path.family();
  if (family != PathFamily::SecantSigned && family != PathFamily::TangentSigned) {
    throw std::invalid_argument("penaud_decompose: expects a signed Dyck path");
  }
  const auto& steps = path.steps();
  const std::size_t n = steps.size();
  // Covered positions are the union of arches (an Up step with its matching
  // Down step) whose steps all have weight 1; overlapping or adjacent
  // all-unit Dyck factors merge, so this union is the set of maximal factors.
  std::vector<bool> covered(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (steps[i].direction != StepDirection::Up) continue;
    bool all_unit = true;
    std::size_t j = i;
    int depth = 0;
    for (; j < n; ++j) {
      all_unit = all_unit && steps[j].weight.is_unit();
      depth += height_change(steps[j].direction);
      if (depth == 0) break;
    }
    if (all_unit && j < n) {
      for (std::size_t t = i; t <= j; ++t) covered[t] = true;
    }
  }
  std::vector<StepDirection> shape;
  std::vector<StepWeight> unit_weights;
  std::vector<StepDirection> rest_dirs;
  std::vector<StepWeight> rest_weights;
  for (std::size_t i = 0; i < n; ++i) {
    shape.push_back(covered[i] ? steps[i].direction : StepDirection::Up);
    unit_weights.push_back(StepWeight{});
    if (!covered[i]) {
      rest_dirs.push_back(steps[i].direction);
      rest_weights.push_back(steps[i].weight);
    }
  }
  WeightedPath left = WeightedPath::from_moves(PathFamily::LeftFactor, shape, unit_weights);
  WeightedPath rest = WeightedPath::from_moves(family, rest_dirs, rest_weights);
  return {std::move(left), std::move(rest)};
}

namespace {

using Series = std::vector<Poly>;

Series series_inverse(const Series& a, int n_max) {
  if (!(a[0] == Poly(1))) throw std::invalid_argument("series_inverse: constant term must be 1");
  Series out(static_cast<std::size_t>(n_max) + 1);
  out[0] = 1;
  for (int m = 1; m <= n_max; ++m) {
    Poly acc;
    for (int i = 1; i <= m; ++i) {
      if (a[static_cast<std::size_t>(i)].is_zero()) continue;
      acc += a[static_cast<std::size_t>(i)] * out[static_cast<std::size_t>(m - i)];
    }
    out[static_cast<std::size_t>(m)] = -acc;
  }
  return out;
}

}  // namespace

std::vector<Poly> cf_series(const CFSpec& spec, int n_max, int depth) {
  if (n_max < 0) throw std::invalid_argument("cf_series: negative order");
  if (!spec.level_weight) throw std::invalid_argument("cf_series: missing level weight");
  if (depth < 0) depth = n_max + 1;
  const std::size_t len = static_cast<std::size_t>(n_max) + 1;
  Series tail(len);
  tail[0] = 1;
  for (int h = depth - 1; h >= 0; --h) {
    // denominator = 1 - w(h) x tail   (J)   or   1 + t - w(h) t tail   (T)
    Series shifted(len);
    const Poly w = spec.level_weight(h);
    for (std::size_t i = 0; i + 1 < len; ++i) shifted[i + 1] = -(w * tail[i]);
    Series denominator = shifted;
    denominator[0] += Poly(1);
    if (spec.kind == CFSpec::Kind::T && len > 1) denominator[1] += Poly(1);
    tail = series_inverse(denominator, n_max);
  }
  return tail;
}

}  // namespace qeuler
