#pragma once

#include <span>
#include <vector>

#include "zalcman/types.hpp"

namespace zalcman {

/// Largest truncation order any series may carry.
inline constexpr int kMaxSeriesOrder = 512;

/// Complex Taylor coefficients c_0..c_N of an analytic function, truncated at z^N.
class TruncatedSeries {
public:
  explicit TruncatedSeries(std::vector<Complex> coeffs);

  static TruncatedSeries zero(int order);

  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const Complex& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  std::span<const Complex> coeffs() const noexcept { return c_; }

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(Complex scale);

private:
  std::vector<Complex> c_;
};

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator*(Complex scale, TruncatedSeries a);

/// Expansion of (1 - e^{i theta} z)^{2 alpha - 2} through z^order.
TruncatedSeries binom_series(Alpha alpha, double theta, int order);

/// Cauchy product truncated at the common order.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Term-wise integral from 0; the result has order N+1 and c_0 = 0.
TruncatedSeries antiderivative(const TruncatedSeries& a);

/// Formal derivative; the result has order max(N-1, 0).
TruncatedSeries derivative(const TruncatedSeries& a);

/// Logarithm of a series with c_0 = 1.
TruncatedSeries series_log(const TruncatedSeries& a);

/// Exponential of a series with c_0 = 0.
TruncatedSeries series_exp(const TruncatedSeries& a);

/// Coefficients of e^{-i theta} f(e^{i theta} z): a_n -> e^{i(n-1)theta} a_n.
CoeffSequence rotate(const CoeffSequence& f, double theta);

/// Coefficients of g(z) = z (f(z^n)/z^n)^{1/n} on the principal branch, through z^order.
/// Only exponents congruent to 1 mod n are nonzero. When f is too short to determine
/// all requested terms, the result stops at z^{1 + n (f.n_max() - 1)}.
CoeffSequence nth_root_transform(const CoeffSequence& f, int n, int order);

}  // namespace zalcman
