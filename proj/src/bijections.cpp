#include "qeuler/bijections.hpp"

#include <stdexcept>

namespace qeuler {

FVImage fv_map(const Permutation& sigma) {
  const int n = sigma.size();
  if (n < 1) throw std::invalid_argument("fv_map: empty permutation");
  const auto s = sigma.padded();
  std::vector<int> position(static_cast<std::size_t>(n) + 1);
  for (int j = 1; j <= n; ++j) position[static_cast<std::size_t>(s[j])] = j;

  std::vector<StepDirection> directions;
  std::vector<StepWeight> weights;
  for (int k = 1; k <= n; ++k) {
    const int j = position[static_cast<std::size_t>(k)];
    const bool rise_in = s[j - 1] < s[j];
    const bool rise_out = s[j] < s[j + 1];
    StepDirection d = StepDirection::Flat;
    if (!rise_in && rise_out) d = StepDirection::Up;
    if (rise_in && !rise_out) d = StepDirection::Down;
    int gaps = 0;
    for (int u = 1; u <= j - 2; ++u) {
      if (s[u] > s[j] && s[j] > s[u + 1]) ++gaps;
    }
    directions.push_back(d);
    weights.push_back(StepWeight{1, rise_out ? 1 : 0, gaps});
  }
  return FVImage{WeightedPath::from_moves(PathFamily::Laguerre, directions, weights), n};
}

Permutation tilde(const Permutation& sigma) {
  std::vector<int> images;
  for (int v : sigma.images()) images.push_back(v + 1);
  images.push_back(1);
  return Permutation(std::move(images));
}

FMapImage f_map(const Permutation& sigma) {
  if (sigma.size() < 1) throw std::invalid_argument("f_map: empty permutation");
  FMapImage out;
  out.full = fv_map(tilde(sigma));
  const auto& steps = out.full.path.steps();
  std::vector<StepDirection> directions;
  std::vector<StepWeight> weights;
  for (std::size_t i = 1; i + 1 < steps.size(); ++i) {
    directions.push_back(steps[i].direction);
    weights.push_back(steps[i].weight);
  }
  out.reduced = WeightedPath::from_moves(PathFamily::LargeLaguerre, directions, weights);
  return out;
}

bool lemma31_holds(const Permutation& tau) {
  const auto image = fv_map(tau);
  const auto& steps = image.path.steps();
  for (std::size_t i = 1; i < steps.size(); ++i) {
    const auto& w = steps[i].weight;
    if (w.y_pow == 1 && w.q_pow == steps[i].start_height) return false;
  }
  return true;
}

}  // namespace qeuler
