#include "zalcman/functional.hpp"

#include <string>

#include "zalcman/powerseries.hpp"

namespace zalcman {

PhiValue phi(Lambda lambda, int n, const CoeffSequence& f) {
  if (n < 2) throw UsageError("the functional needs n >= 2");
  if (f.n_max() < 2 * n - 1) {
    throw UsageError("the functional at n=" + std::to_string(n) + " needs coefficients through a_" +
                     std::to_string(2 * n - 1) + ", have " + std::to_string(f.n_max()));
  }
  PhiValue out;
  out.value = lambda.value() * f(n) * f(n) - f(2 * n - 1);
  out.modulus = std::abs(out.value);
  out.n = n;
  out.lambda = lambda.value();
  return out;
}

double phi_rotation_check(Lambda lambda, int n, const CoeffSequence& f, double theta) {
  const Complex rotated = phi(lambda, n, rotate(f, theta)).value;
  const Complex expected = std::polar(1.0, 2.0 * (n - 1) * theta) * phi(lambda, n, f).value;
  return std::abs(rotated - expected);
}

double root_transform_mu(double lambda, int n) { return lambda * n - (n - 1) / 2.0; }

double root_transform_identity_gap(Lambda lambda, int n, const CoeffSequence& f, double mu) {
  if (n < 1) throw UsageError("root transform needs n >= 1");
  if (f.n_max() < 3) throw UsageError("root transform identity needs a_2 and a_3");
  const CoeffSequence g = nth_root_transform(f, n, 2 * n + 1);
  const Complex lhs = lambda.value() * f(2) * f(2) - f(3);
  const Complex c1 = g(n + 1);
  const Complex rhs = static_cast<double>(n) * (mu * c1 * c1 - g(2 * n + 1));
  return std::abs(lhs - rhs);
}

double root_transform_identity_gap(Lambda lambda, int n, const CoeffSequence& f) {
  return root_transform_identity_gap(lambda, n, f, root_transform_mu(lambda.value(), n));
}

}  // namespace zalcman
