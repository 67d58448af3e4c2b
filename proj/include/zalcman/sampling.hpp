#pragma once

#include <cmath>
#include <random>

#include "zalcman/types.hpp"

namespace zalcman {

/// Uniform [0, 1) from raw engine bits; identical on every standard library.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

/// Measure with 1..max_atoms atoms, uniform angles and Dirichlet(1)-like weights.
inline DiscreteMeasure random_measure(std::mt19937_64& rng, int max_atoms) {
  const int count = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_atoms));
  std::vector<Atom> atoms(static_cast<std::size_t>(count));
  double total = 0.0;
  for (auto& a : atoms) {
    a.theta = uniform(rng, 0.0, kTwoPi);
    a.weight = -std::log1p(-uniform01(rng));
    total += a.weight;
  }
  for (auto& a : atoms) a.weight /= total;
  return DiscreteMeasure(std::move(atoms));
}

/// Alpha drawn uniformly from [-1/2, 1).
inline Alpha random_alpha(std::mt19937_64& rng) { return Alpha{uniform(rng, -0.5, 1.0)}; }

}  // namespace zalcman
