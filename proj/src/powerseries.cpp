#include "zalcman/powerseries.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace zalcman {

namespace {

void check_order(int order) {
  if (order < 0 || order > kMaxSeriesOrder) {
    throw UsageError("series order " + std::to_string(order) + " outside 0.." +
                     std::to_string(kMaxSeriesOrder));
  }
}

void check_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) {
    throw UsageError("series orders differ: " + std::to_string(a.order()) + " vs " +
                     std::to_string(b.order()));
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw UsageError("a truncated series needs at least c_0");
  check_order(order());
  for (const auto& c : c_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw UsageError("series coefficient is not finite");
    }
  }
}

TruncatedSeries TruncatedSeries::zero(int order) {
  check_order(order);
  return TruncatedSeries(std::vector<Complex>(static_cast<std::size_t>(order) + 1));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  check_same_order(*this, other);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += other.c_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(Complex scale) {
  for (auto& c : c_) c *= scale;
  return *this;
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
  a += b;
  return a;
}

TruncatedSeries operator*(Complex scale, TruncatedSeries a) {
  a *= scale;
  return a;
}

TruncatedSeries binom_series(Alpha alpha, double theta, int order) {
  check_order(order);
  const Complex rot = std::polar(1.0, theta);
  const double two_alpha = 2.0 * alpha.value();
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1.0;
  for (int k = 1; k <= order; ++k) {
    c[k] = c[k - 1] * rot * ((k + 1 - two_alpha) / k);
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_same_order(a, b);
  const int n = a.order();
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == Complex{}) continue;
    for (int j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries antiderivative(const TruncatedSeries& a) {
  std::vector<Complex> c(static_cast<std::size_t>(a.order()) + 2);
  for (int k = 0; k <= a.order(); ++k) c[k + 1] = a[k] / static_cast<double>(k + 1);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries derivative(const TruncatedSeries& a) {
  if (a.order() == 0) return TruncatedSeries::zero(0);
  std::vector<Complex> c(static_cast<std::size_t>(a.order()));
  for (int k = 1; k <= a.order(); ++k) c[k - 1] = a[k] * static_cast<double>(k);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_log(const TruncatedSeries& a) {
  if (std::abs(a[0] - Complex{1.0, 0.0}) > 1e-14) {
    throw UsageError("series_log needs a series with constant term 1");
  }
  // k l_k = k a_k - sum_{j=1}^{k-1} j l_j a_{k-j}
  const int n = a.order();
  std::vector<Complex> l(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) {
    Complex acc = static_cast<double>(k) * a[k];
    for (int j = 1; j < k; ++j) acc -= static_cast<double>(j) * l[j] * a[k - j];
    l[k] = acc / static_cast<double>(k);
  }
  return TruncatedSeries(std::move(l));
}

TruncatedSeries series_exp(const TruncatedSeries& a) {
  if (std::abs(a[0]) > 1e-14) throw UsageError("series_exp needs a series with zero constant term");
  // k e_k = sum_{j=1}^{k} j a_j e_{k-j}
  const int n = a.order();
  std::vector<Complex> e(static_cast<std::size_t>(n) + 1);
  e[0] = 1.0;
  for (int k = 1; k <= n; ++k) {
    Complex acc{};
    for (int j = 1; j <= k; ++j) acc += static_cast<double>(j) * a[j] * e[k - j];
    e[k] = acc / static_cast<double>(k);
  }
  return TruncatedSeries(std::move(e));
}

CoeffSequence rotate(const CoeffSequence& f, double theta) {
  std::vector<Complex> tail;
  tail.reserve(static_cast<std::size_t>(f.n_max()));
  for (int n = 2; n <= f.n_max(); ++n) tail.push_back(std::polar(1.0, (n - 1) * theta) * f(n));
  return CoeffSequence(std::move(tail));
}

CoeffSequence nth_root_transform(const CoeffSequence& f, int n, int order) {
  if (n < 1) throw UsageError("root transform needs n >= 1");
  if (order < 1) throw UsageError("root transform needs order >= 1");
  // g(z) = z v(z^n), v = u^{1/n}, u(w) = f(w)/w = 1 + a_2 w + a_3 w^2 + ...
  const int wanted = (order - 1) / n;
  const int terms = std::min(wanted, f.n_max() - 1);
  std::vector<Complex> u(static_cast<std::size_t>(terms) + 1);
  for (int k = 0; k <= terms; ++k) u[k] = f(k + 1);
  const TruncatedSeries v = series_exp((1.0 / n) * series_log(TruncatedSeries(std::move(u))));

  const int out_order = 1 + n * terms;
  std::vector<Complex> tail(static_cast<std::size_t>(out_order - 1));
  for (int k = 1; k <= terms; ++k) tail[static_cast<std::size_t>(k * n - 1)] = v[k];
  return CoeffSequence(std::move(tail));
}

}  // namespace zalcman
