#include "zalcman/selfcheck.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "zalcman/bounds.hpp"
#include "zalcman/falpha.hpp"
#include "zalcman/functional.hpp"
#include "zalcman/sampling.hpp"
#include "zalcman/search.hpp"

namespace zalcman {

namespace {

double gamma_ratio(double alpha, int n) {
  return std::tgamma(n + 1 - 2.0 * alpha) / (std::tgamma(n + 1.0) * std::tgamma(2.0 - 2.0 * alpha));
}

void fail(SuiteResult& s, std::string detail) {
  if (s.passed) s.detail = std::move(detail);
  s.passed = false;
}

const std::vector<double> kAlphaGrid{-0.5, -0.3, -0.1, 0.0, 0.1, 0.25, 0.5, 0.75};

SuiteResult recurrence_vs_gamma(const std::function<double(Alpha, int)>& an) {
  SuiteResult s{"recurrence-vs-gamma"};
  for (double a : {-0.5, -0.37, -0.1, 0.0, 0.2, 0.5, 0.66, 0.9}) {
    for (int n = 1; n <= 50; ++n) {
      ++s.cases;
      const double want = gamma_ratio(a, n);
      const double got = an(Alpha{a}, n);
      if (!(std::abs(got - want) <= 1e-10 * std::abs(want))) {
        fail(s, fmt::format("alpha={} n={} recurrence={} gamma={}", a, n, got, want));
      }
    }
  }
  return s;
}

SuiteResult monotonicity() {
  SuiteResult s{"monotonicity"};
  for (double a : kAlphaGrid) {
    ++s.cases;
    const auto r = check_monotonicity(Alpha{a}, 100);
    if (!r.ok()) fail(s, fmt::format("alpha={} n={} violation={}", a, r.worst_n, r.max_violation));
  }
  return s;
}

SuiteResult unified_vs_cases() {
  SuiteResult s{"unified-vs-cases"};
  for (double a : kAlphaGrid) {
    for (int k = 1; k <= 50; ++k) {
      const double lam = k / 10.0;
      for (int n = 3; n <= 30; ++n) {
        ++s.cases;
        const double cases = sharp_bound(Alpha{a}, Lambda{lam}, n).value;
        const double unified = unified_bound(Alpha{a}, Lambda{lam}, n);
        if (!(std::abs(cases - unified) <= 1e-12 * std::abs(unified))) {
          fail(s, fmt::format("alpha={} lambda={} n={} cases={} unified={}", a, lam, n, cases, unified));
        }
      }
    }
  }
  return s;
}

SuiteResult rotation_invariance(std::uint64_t seed) {
  SuiteResult s{"rotation-invariance"};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 100; ++i) {
    ++s.cases;
    const Alpha alpha = random_alpha(rng);
    const auto mu = random_measure(rng, 8);
    const Lambda lambda{uniform(rng, 0.05, 5.0)};
    const int n = 3 + static_cast<int>(rng() % 6);
    const double theta = uniform(rng, 0.0, kTwoPi);
    const auto f = coeffs_from_measure(alpha, mu, 2 * n - 1);
    const double base = phi(lambda, n, f).modulus;
    const double dev = phi_rotation_check(lambda, n, f, theta);
    if (!(dev <= 1e-12 * (1.0 + base))) {
      fail(s, fmt::format("alpha={} lambda={} n={} theta={} deviation={}", alpha.value(),
                          lambda.value(), n, theta, dev));
    }
  }
  return s;
}

SuiteResult root_transform(std::uint64_t seed) {
  SuiteResult s{"root-transform-identity"};
  std::mt19937_64 rng(seed + 1);
  for (int i = 0; i < 50; ++i) {
    const Alpha alpha = random_alpha(rng);
    const auto f = coeffs_from_measure(alpha, random_measure(rng, 8), 3);
    const Lambda lambda{uniform(rng, 0.05, 5.0)};
    for (int n : {2, 3, 4}) {
      ++s.cases;
      const double gap = root_transform_identity_gap(lambda, n, f);
      if (!(gap <= 1e-10)) {
        fail(s, fmt::format("alpha={} lambda={} n={} gap={}", alpha.value(), lambda.value(), n, gap));
      }
    }
  }
  return s;
}

SuiteResult extremal_attainment(std::uint64_t seed, unsigned threads) {
  SuiteResult s{"extremal-attainment"};
  const auto grid = SweepGrid::defaults();
  for (double a : grid.alphas) {
    for (double l : grid.lambdas) {
      for (int n : grid.ns) {
        ++s.cases;
        const Alpha alpha{a};
        const Lambda lambda{l};
        const double bound = sharp_bound(alpha, lambda, n).value;
        const auto f = coeffs_from_measure(alpha, extremal_measure(alpha, lambda, n), 2 * n - 1);
        const double gap = bound - phi(lambda, n, f).modulus;
        if (!(std::abs(gap) <= 1e-10)) {
          fail(s, fmt::format("alpha={} lambda={} n={} extremal gap={}", a, l, n, gap));
        }
      }
    }
  }
  SearchConfig cfg;
  cfg.starts = 4;
  cfg.max_iters = 200;
  cfg.seed = seed;
  const auto sweep = falsification_sweep(grid, cfg, threads);
  for (const auto& row : sweep.rows) {
    if (!row.result.sound()) {
      fail(s, fmt::format("alpha={} lambda={} n={} bound exceeded by {}", row.alpha, row.lambda,
                          row.n, row.result.worst_excess));
    }
  }
  return s;
}

}  // namespace

bool SelfcheckReport::ok() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

SelfcheckReport run_selfcheck(const SelfcheckOptions& opts) {
  const auto an = opts.an ? opts.an : std::function<double(Alpha, int)>(compute_An);
  SelfcheckReport report;
  report.suites.push_back(recurrence_vs_gamma(an));
  report.suites.push_back(monotonicity());
  report.suites.push_back(unified_vs_cases());
  report.suites.push_back(rotation_invariance(opts.seed));
  report.suites.push_back(root_transform(opts.seed));
  report.suites.push_back(extremal_attainment(opts.seed, opts.threads));
  return report;
}

}  // namespace zalcman
