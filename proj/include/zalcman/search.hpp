#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "zalcman/bounds.hpp"
#include "zalcman/types.hpp"

namespace zalcman {

/// Never-exceed tolerance applied to every objective evaluation.
inline constexpr double kSoundnessTolerance = 1e-9;
/// Optimizer-level attainment tolerance.
inline constexpr double kAttainmentTolerance = 1e-5;

struct SearchConfig {
  std::optional<int> atom_count;  // defaults to 2n - 2
  int starts = 32;
  int max_iters = 2000;           // per start
  double tol_converge = 1e-10;
  std::uint64_t seed = 0;
  bool seed_extremal = true;      // start 0 at extremal_measure; otherwise all starts are random

  void validate() const;
  int atoms_for(int n) const { return atom_count.value_or(2 * n - 2); }
};

struct SearchResult {
  double best_modulus = 0.0;
  DiscreteMeasure best_measure = DiscreteMeasure::dirac(0.0);
  BoundResult bound;
  double gap = 0.0;               // bound.value - best_modulus, signed
  double seeded_modulus = 0.0;    // |phi| at the extremal measure used as start 0
  int starts_used = 0;
  int best_start = 0;
  long iterations_total = 0;
  long evaluations = 0;
  bool converged = false;

  // Inline soundness log over every evaluated iterate.
  long violations = 0;
  double worst_excess = 0.0;      // max of |phi| - bound over all evaluations
  std::optional<DiscreteMeasure> worst_measure;

  bool sound() const { return violations == 0; }
};

/// Measure attaining the sharp bound: a point mass at 0 when lambda >= C_n, otherwise
/// equal weights at theta_k = (2k+1) pi / (2n-2), k = 0..2n-3.
DiscreteMeasure extremal_measure(Alpha alpha, Lambda lambda, int n);

/// Multi-start Nelder-Mead maximization of |lambda a_n^2 - a_{2n-1}| over K-atom measures.
/// Weights are a softmax of free reals, so every iterate is a valid probability measure.
/// Start 0 is seeded at extremal_measure; the rest are drawn from cfg.seed.
SearchResult maximize_phi(Alpha alpha, Lambda lambda, int n, const SearchConfig& cfg);

struct SweepGrid {
  std::vector<double> alphas;
  std::vector<double> lambdas;
  std::vector<int> ns;

  static SweepGrid defaults();
  std::size_t size() const { return alphas.size() * lambdas.size() * ns.size(); }
};

struct SweepRow {
  double alpha = 0.0;
  double lambda = 0.0;
  int n = 0;
  SearchResult result;
  double seeded_gap = 0.0;
  bool attainment_asserted = false;  // alpha <= 1/2
  bool attained = false;             // gap <= kAttainmentTolerance
};

struct SweepReport {
  std::vector<SweepRow> rows;        // grid order: alpha, then lambda, then n
  std::map<Regime, double> worst_gap;
  long violations = 0;
  long attainment_failures = 0;      // among rows with attainment_asserted

  bool failed() const { return violations > 0; }
};

/// Runs maximize_phi on every grid point (in parallel) and reports soundness and attainment.
SweepReport falsification_sweep(const SweepGrid& grid, const SearchConfig& cfg,
                                unsigned threads = 0);

}  // namespace zalcman
