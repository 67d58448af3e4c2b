#pragma once

#include "zalcman/powerseries.hpp"
#include "zalcman/types.hpp"

namespace zalcman {

/// Sharp coefficient bound A_n(alpha) = Gamma(n+1-2alpha) / (n! Gamma(2-2alpha)),
/// evaluated by the ratio recurrence A_{k+1} = A_k (k+1-2alpha)/(k+1), A_1 = 1.
double compute_An(Alpha alpha, int n);

/// A_1..A_{n_max} in one pass; element k holds A_{k+1}.
std::vector<double> An_table(Alpha alpha, int n_max);

/// Coefficients of f_alpha(z) = (1 - (1-z)^{2alpha-1}) / (2alpha-1), i.e. a_n = A_n(alpha).
/// At alpha = 1/2 this is the limit f_{1/2}(z) = -log(1-z) with a_n = 1/n, which the
/// same recurrence produces without a special case.
CoeffSequence extremal_falpha_coeffs(Alpha alpha, int n_max);

/// a_n = A_n(alpha) * sum_k w_k e^{i(n-1)theta_k}.
CoeffSequence coeffs_from_measure(Alpha alpha, const DiscreteMeasure& mu, int n_max);

/// f'(z) = sum_k w_k (1 - e^{i theta_k} z)^{2alpha-2}, truncated at z^order.
TruncatedSeries fprime_series_from_measure(Alpha alpha, const DiscreteMeasure& mu, int order);

}  // namespace zalcman
