#include "zalcman/falpha.hpp"

#include <string>

namespace zalcman {

namespace {

void check_n_max(int n_max) {
  if (n_max < 2) throw UsageError("n_max must be at least 2, got " + std::to_string(n_max));
}

}  // namespace

std::vector<double> An_table(Alpha alpha, int n_max) {
  if (n_max < 1) throw UsageError("A_n is defined for n >= 1");
  const double two_alpha = 2.0 * alpha.value();
  std::vector<double> a(static_cast<std::size_t>(n_max));
  a[0] = 1.0;
  for (int k = 1; k < n_max; ++k) a[k] = a[k - 1] * (k + 1 - two_alpha) / (k + 1);
  return a;
}

double compute_An(Alpha alpha, int n) { return An_table(alpha, n).back(); }

CoeffSequence extremal_falpha_coeffs(Alpha alpha, int n_max) {
  check_n_max(n_max);
  const auto a = An_table(alpha, n_max);
  return CoeffSequence(std::vector<Complex>(a.begin() + 1, a.end()));
}

CoeffSequence coeffs_from_measure(Alpha alpha, const DiscreteMeasure& mu, int n_max) {
  check_n_max(n_max);
  const auto a = An_table(alpha, n_max);
  std::vector<Complex> tail;
  tail.reserve(static_cast<std::size_t>(n_max - 1));
  for (int n = 2; n <= n_max; ++n) tail.push_back(a[n - 1] * mu.moment(n - 1));
  return CoeffSequence(std::move(tail));
}

TruncatedSeries fprime_series_from_measure(Alpha alpha, const DiscreteMeasure& mu, int order) {
  auto sum = TruncatedSeries::zero(order);
  for (const auto& atom : mu.atoms()) sum += atom.weight * binom_series(alpha, atom.theta, order);
  return sum;
}

}  // namespace zalcman
