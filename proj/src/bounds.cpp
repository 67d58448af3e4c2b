#include "zalcman/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "zalcman/falpha.hpp"

namespace zalcman {

namespace {

void check_n(int n) {
  if (n < 3) throw UsageError("C_n and the sharp bound need n >= 3, got " + std::to_string(n));
}

bool near(double lambda, double c_n) {
  return std::abs(lambda - c_n) <= kBoundaryTolerance * std::max(1.0, c_n);
}

bool at_least(double lambda, double c_n) { return lambda >= c_n || near(lambda, c_n); }
bool at_most(double lambda, double c_n) { return lambda <= c_n || near(lambda, c_n); }

// Walks n = 3, 4, ... keeping A_n and A_{2n-1} with the same arithmetic as An_table.
class CnWalker {
public:
  explicit CnWalker(Alpha alpha) : two_alpha_(2.0 * alpha.value()) {
    const auto a = An_table(alpha, 5);
    a_n_ = a[2];
    a_2n_1_ = a[4];
  }
  int n() const { return n_; }
  double c_n() const { return 2.0 * a_2n_1_ / (a_n_ * a_n_); }
  void advance() {
    a_n_ = a_n_ * (n_ + 1 - two_alpha_) / (n_ + 1);
    const int k = 2 * n_ - 1;
    a_2n_1_ = a_2n_1_ * (k + 1 - two_alpha_) / (k + 1);
    a_2n_1_ = a_2n_1_ * (k + 2 - two_alpha_) / (k + 2);
    ++n_;
  }

private:
  double two_alpha_;
  int n_ = 3;
  double a_n_;
  double a_2n_1_;
};

// Smallest n in [3, limit] satisfying the threshold predicate for the sign of alpha.
std::optional<int> scan_n0(Alpha alpha, double lambda, int limit) {
  CnWalker walk(alpha);
  const bool negative = alpha.value() < 0.0;
  while (true) {
    const double c = walk.c_n();
    if (negative ? at_least(lambda, c) : at_most(lambda, c)) return walk.n();
    if (walk.n() >= limit) return std::nullopt;
    walk.advance();
  }
}

}  // namespace

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::LargeLambda: return "LargeLambda";
    case Regime::SmallLambda: return "SmallLambda";
    case Regime::Boundary: return "Boundary";
  }
  return "?";
}

std::string_view to_string(Extremal e) {
  return e == Extremal::SingleAtom ? "SingleAtom" : "RotationMix";
}

std::string_view to_string(BoundCase c) {
  switch (c) {
    case BoundCase::ConvexLargeLambda: return "alpha=0:lambda>=2";
    case BoundCase::ConvexSmallLambda: return "alpha=0:lambda<2";
    case BoundCase::MinusHalfLargeLambda: return "alpha=-1/2:lambda>=3/2";
    case BoundCase::MinusHalfAboveThreshold: return "alpha=-1/2:lambda<3/2:n>threshold";
    case BoundCase::MinusHalfBelowThreshold: return "alpha=-1/2:lambda<3/2:n<=threshold";
    case BoundCase::NegativeLargeLambda: return "alpha<0:lambda>=C3";
    case BoundCase::NegativeAtLeastN0: return "alpha<0:lambda<C3:n>=n0";
    case BoundCase::NegativeBelowN0: return "alpha<0:lambda<C3:n<n0";
    case BoundCase::PositiveSmallLambda: return "alpha>0:lambda<=C3";
    case BoundCase::PositiveAtLeastN0: return "alpha>0:lambda>C3:n>=n0";
    case BoundCase::PositiveBelowN0: return "alpha>0:lambda>C3:n<n0";
    case BoundCase::HalfSmallLambda: return "alpha=1/2:lambda<=18/5";
    case BoundCase::HalfAboveThreshold: return "alpha=1/2:lambda>18/5:n>=threshold";
    case BoundCase::HalfBelowThreshold: return "alpha=1/2:lambda>18/5:n<threshold";
  }
  return "?";
}

double compute_Cn(Alpha alpha, int n) {
  check_n(n);
  const auto a = An_table(alpha, 2 * n - 1);
  const double a_n = a[n - 1];
  return 2.0 * a[2 * n - 2] / (a_n * a_n);
}

double c3_closed(Alpha alpha) {
  const double t = 2.0 * alpha.value();
  return 0.6 * (t - 4.0) * (t - 5.0) / ((t - 2.0) * (t - 3.0));
}

MonotonicityReport check_monotonicity(Alpha alpha, int n_max) {
  if (n_max < 4) throw UsageError("monotonicity check needs n_max >= 4");
  MonotonicityReport report;
  report.n_last = n_max;
  report.direction = alpha.value() < 0.0 ? -1 : (alpha.value() > 0.0 ? 1 : 0);

  CnWalker walk(alpha);
  double prev = walk.c_n();
  auto record = [&](double violation, int n) {
    if (violation > report.max_violation) {
      report.max_violation = violation;
      report.worst_n = n;
    }
  };
  if (report.direction == 0) record(std::abs(prev - 2.0), 3);
  while (walk.n() < n_max) {
    const int n = walk.n();
    walk.advance();
    const double next = walk.c_n();
    const double diff = next - prev;
    switch (report.direction) {
      case -1: record(std::max(diff, 0.0), n); break;
      case 1: record(std::max(-diff, 0.0), n); break;
      default: record(std::abs(next - 2.0), n + 1); break;
    }
    prev = next;
  }
  return report;
}

N0Result n0_threshold(Alpha alpha, Lambda lambda) {
  if (alpha.value() == 0.0) {
    return {std::nullopt, "alpha=0: C_n = 2 for every n, no threshold"};
  }
  auto n0 = scan_n0(alpha, lambda.value(), kN0ScanCap);
  if (!n0) return {std::nullopt, "threshold beyond scan cap n <= 1000000"};
  return {n0, {}};
}

double corollary_threshold(double lambda) {
  if (!(lambda > 0.0)) throw DomainError("threshold needs lambda > 0");
  if (lambda > 2.0) throw DomainError("threshold needs lambda <= 2 (negative radicand)");
  return (4.0 - lambda + 2.0 * std::sqrt(4.0 - 2.0 * lambda)) / lambda;
}

HalfThreshold alpha_half_threshold(double lambda) {
  if (!(lambda > 2.0)) throw DomainError("alpha=1/2 threshold needs lambda > 2");
  HalfThreshold out;
  out.value = (lambda + std::sqrt(lambda * lambda - 2.0 * lambda)) / 2.0;
  if (lambda <= 18.0 / 5.0) out.note = "below-C3, unused by theorem";
  return out;
}

double unified_bound(Alpha alpha, Lambda lambda, int n) {
  check_n(n);
  const auto a = An_table(alpha, 2 * n - 1);
  const double big = lambda.value() * a[n - 1] * a[n - 1];
  const double a_2n_1 = a[2 * n - 2];
  return big - 2.0 * a_2n_1 >= 0.0 ? big - a_2n_1 : a_2n_1;
}

BoundResult sharp_bound(Alpha alpha, Lambda lambda, int n) {
  check_n(n);
  const double al = alpha.value();
  const double lam = lambda.value();
  const double nd = n;
  const auto a = An_table(alpha, 2 * n - 1);

  BoundResult r;
  r.a_n = a[n - 1];
  r.a_2n_1 = a[2 * n - 2];
  r.c_n = 2.0 * r.a_2n_1 / (r.a_n * r.a_n);
  const double large_general = lam * r.a_n * r.a_n - r.a_2n_1;

  bool large = false;
  if (al == 0.0) {
    large = at_least(lam, 2.0);
    r.bound_case = large ? BoundCase::ConvexLargeLambda : BoundCase::ConvexSmallLambda;
    r.value = large ? lam - 1.0 : 1.0;
  } else if (al == -0.5) {
    if (at_least(lam, 1.5)) {
      large = true;
      r.bound_case = BoundCase::MinusHalfLargeLambda;
    } else {
      large = nd > corollary_threshold(lam);
      r.bound_case = large ? BoundCase::MinusHalfAboveThreshold : BoundCase::MinusHalfBelowThreshold;
    }
    r.value = large ? (nd + 1.0) * (nd + 1.0) / 4.0 * lam - nd : nd;
  } else if (al == 0.5) {
    if (at_most(lam, 18.0 / 5.0)) {
      large = false;
      r.bound_case = BoundCase::HalfSmallLambda;
    } else {
      large = nd < alpha_half_threshold(lam).value;
      r.bound_case = large ? BoundCase::HalfBelowThreshold : BoundCase::HalfAboveThreshold;
    }
    r.value = large ? lam / (nd * nd) - 1.0 / (2.0 * nd - 1.0) : 1.0 / (2.0 * nd - 1.0);
  } else if (al < 0.0) {
    if (at_least(lam, c3_closed(alpha))) {
      large = true;
      r.bound_case = BoundCase::NegativeLargeLambda;
    } else {
      // n >= n0 exactly when the scan up to n finds a threshold
      large = scan_n0(alpha, lam, n).has_value();
      r.bound_case = large ? BoundCase::NegativeAtLeastN0 : BoundCase::NegativeBelowN0;
    }
    r.value = large ? large_general : r.a_2n_1;
  } else {
    if (at_most(lam, c3_closed(alpha))) {
      large = false;
      r.bound_case = BoundCase::PositiveSmallLambda;
    } else {
      large = !scan_n0(alpha, lam, n).has_value();
      r.bound_case = large ? BoundCase::PositiveBelowN0 : BoundCase::PositiveAtLeastN0;
    }
    r.value = large ? large_general : r.a_2n_1;
  }

  if (near(lam, r.c_n)) {
    r.regime = Regime::Boundary;
    r.extremal = Extremal::SingleAtom;
  } else {
    r.regime = large ? Regime::LargeLambda : Regime::SmallLambda;
    r.extremal = large ? Extremal::SingleAtom : Extremal::RotationMix;
  }
  return r;
}

double fekete_szego_S(double lambda) {
  if (!(lambda >= 0.0) || lambda >= 1.0) {
    throw DomainError("Fekete-Szego bound over S needs 0 <= lambda < 1");
  }
  return 1.0 + 2.0 * std::exp(-2.0 * lambda / (1.0 - lambda));
}

}  // namespace zalcman
