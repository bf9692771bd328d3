#pragma once

// The Francon-Viennot map from permutations to Laguerre histories, the lift
// sigma -> sigma~ and the map f(sigma) = FV(sigma~).

#include "qeuler/lattice_paths.hpp"
#include "qeuler/permutation.hpp"

namespace qeuler {

struct FVImage {
  WeightedPath path{PathFamily::Laguerre};
  int size = 0;
};

/// Step k corresponds to j = sigma^{-1}(k): valley -> Up, peak -> Down,
/// double ascent or descent -> Flat, weighted y^{[j is an ascent]} q^m with
/// m the number of u <= j-2 such that sigma(u) > sigma(j) > sigma(u+1).
FVImage fv_map(const Permutation& sigma);

/// sigma~(i) = sigma(i) + 1 for i <= n and sigma~(n+1) = 1.
Permutation tilde(const Permutation& sigma);

struct FMapImage {
  /// fv_map(tilde(sigma)), n+1 steps.
  FVImage full;
  /// full without its first and last steps, heights lowered by one; a large
  /// Laguerre history of n-1 steps.
  WeightedPath reduced{PathFamily::LargeLaguerre};
};

FMapImage f_map(const Permutation& sigma);

/// True when no step of fv_map(tau) other than the first starts at some
/// height h with weight y q^h.
bool lemma31_holds(const Permutation& tau);

}  // namespace qeuler
