#pragma once

#include <functional>
#include <span>
#include <vector>

namespace zalcman {

struct NelderMeadOptions {
  int max_iters = 2000;
  double tol = 1e-10;          // stop when the simplex value spread is below tol * (1 + |best|)
  double initial_step = 0.5;
  std::vector<double> steps;   // per-coordinate steps; overrides initial_step when non-empty
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  long evaluations = 0;
  bool converged = false;
  int restarts = 0;
};

/// Minimizes `f` with the dimension-adaptive Nelder-Mead simplex method. After each
/// convergence the simplex is rebuilt around the best point; the run ends when a
/// restart gains no more than the tolerance or the iteration budget is spent.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::vector<double> x0, const NelderMeadOptions& opt);

}  // namespace zalcman
