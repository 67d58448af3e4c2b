#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "zalcman/types.hpp"

namespace zalcman {

/// Which branch of the two-branch bound is active.
enum class Regime { LargeLambda, SmallLambda, Boundary };

/// Shape of a measure attaining the bound.
enum class Extremal { SingleAtom, RotationMix };

/// The hypothesis set that governs a bound, one entry per case of the closed-form results.
enum class BoundCase {
  ConvexLargeLambda,       // alpha = 0, lambda >= 2
  ConvexSmallLambda,       // alpha = 0, 0 < lambda < 2
  MinusHalfLargeLambda,    // alpha = -1/2, lambda >= 3/2
  MinusHalfAboveThreshold, // alpha = -1/2, lambda < 3/2, n > threshold
  MinusHalfBelowThreshold, // alpha = -1/2, lambda < 3/2, n <= threshold
  NegativeLargeLambda,     // -1/2 <= alpha < 0, lambda >= C_3
  NegativeAtLeastN0,       // -1/2 <= alpha < 0, lambda < C_3, n >= n0
  NegativeBelowN0,         // -1/2 <= alpha < 0, lambda < C_3, n < n0
  PositiveSmallLambda,     // 0 < alpha < 1, lambda <= C_3
  PositiveAtLeastN0,       // 0 < alpha < 1, lambda > C_3, n >= n0
  PositiveBelowN0,         // 0 < alpha < 1, lambda > C_3, n < n0
  HalfSmallLambda,         // alpha = 1/2, lambda <= 18/5
  HalfAboveThreshold,      // alpha = 1/2, lambda > 18/5, n >= threshold
  HalfBelowThreshold,      // alpha = 1/2, lambda > 18/5, n < threshold
};

std::string_view to_string(Regime r);
std::string_view to_string(Extremal e);
std::string_view to_string(BoundCase c);

struct BoundResult {
  double value = 0.0;
  Regime regime = Regime::SmallLambda;
  double c_n = 0.0;
  BoundCase bound_case = BoundCase::ConvexSmallLambda;
  Extremal extremal = Extremal::RotationMix;
  double a_n = 0.0;       // A_n(alpha)
  double a_2n_1 = 0.0;    // A_{2n-1}(alpha)

  std::string_view theorem_tag() const { return to_string(bound_case); }
};

/// Relative tolerance under which lambda and C_n are treated as equal.
inline constexpr double kBoundaryTolerance = 1e-12;

/// Regime function C_n(alpha) = 2 A_{2n-1} / A_n^2, defined for n >= 3.
double compute_Cn(Alpha alpha, int n);

/// Closed form (3/5)(2a-4)(2a-5) / ((2a-2)(2a-3)) of C_3.
double c3_closed(Alpha alpha);

struct MonotonicityReport {
  int n_first = 3;
  int n_last = 3;            // pairs (n, n+1) checked for n_first <= n < n_last
  int direction = 0;         // -1 decreasing, +1 increasing, 0 constant
  double max_violation = 0.0;
  int worst_n = 0;
  bool ok() const { return max_violation <= 1e-12; }
};

/// Checks that C_{n+1} - C_n has the sign of alpha (constancy at alpha = 0)
/// for 3 <= n < n_max. Violations are reported, never thrown.
MonotonicityReport check_monotonicity(Alpha alpha, int n_max);

/// Hard cap of the linear n0 scan.
inline constexpr int kN0ScanCap = 1'000'000;

struct N0Result {
  std::optional<int> n0;
  std::string note;
};

/// For alpha < 0: smallest n >= 3 with lambda >= C_n. For alpha > 0: smallest n >= 3
/// with lambda <= C_n. No threshold exists at alpha = 0.
N0Result n0_threshold(Alpha alpha, Lambda lambda);

/// (4 - lambda + 2 sqrt(4 - 2 lambda)) / lambda: above it the single-atom branch
/// governs alpha = -1/2 when lambda < 3/2.
double corollary_threshold(double lambda);

struct HalfThreshold {
  double value = 0.0;
  std::string note;  // empty when lambda > 18/5
};

/// (lambda + sqrt(lambda^2 - 2 lambda)) / 2: from this n on the rotation-mix branch
/// governs alpha = 1/2 when lambda > 18/5.
HalfThreshold alpha_half_threshold(double lambda);

/// Two-branch rule: lambda A_n^2 - A_{2n-1} when lambda A_n^2 >= 2 A_{2n-1}, else A_{2n-1}.
double unified_bound(Alpha alpha, Lambda lambda, int n);

/// Sharp bound of |lambda a_n^2 - a_{2n-1}| over F(alpha), classified by governing case.
/// Values come from the per-case closed forms; unified_bound is the independent check.
BoundResult sharp_bound(Alpha alpha, Lambda lambda, int n);

/// Sharp bound 1 + 2 exp(-2 lambda / (1 - lambda)) of |lambda a_2^2 - a_3| over the
/// whole univalent class, 0 <= lambda < 1.
double fekete_szego_S(double lambda);

}  // namespace zalcman
