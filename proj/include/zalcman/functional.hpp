#pragma once

#include "zalcman/types.hpp"

namespace zalcman {

/// Value of lambda a_n^2 - a_{2n-1} for one coefficient sequence.
struct PhiValue {
  Complex value;
  double modulus = 0.0;
  int n = 0;
  double lambda = 0.0;
};

/// lambda a_n^2 - a_{2n-1}. Accepts any normalized sequence, including ones outside F(alpha).
PhiValue phi(Lambda lambda, int n, const CoeffSequence& f);

/// |phi(rotate(f, theta)) - e^{2(n-1) i theta} phi(f)|; zero up to rounding.
double phi_rotation_check(Lambda lambda, int n, const CoeffSequence& f, double theta);

/// Parameter of the Fekete-Szego functional of the n-th root transform:
/// lambda a_2^2 - a_3 = n (mu c_{n+1}^2 - c_{2n+1}) holds for mu = lambda n - (n-1)/2.
double root_transform_mu(double lambda, int n);

/// |(lambda a_2^2 - a_3) - n (mu c_{n+1}^2 - c_{2n+1})| with g = nth_root_transform(f, n)
/// and mu = root_transform_mu(lambda, n).
double root_transform_identity_gap(Lambda lambda, int n, const CoeffSequence& f);

/// Same gap for a caller-chosen mu.
double root_transform_identity_gap(Lambda lambda, int n, const CoeffSequence& f, double mu);

}  // namespace zalcman
