#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "zalcman/falpha.hpp"
#include "zalcman/functional.hpp"
#include "zalcman/nelder_mead.hpp"
#include "zalcman/search.hpp"

using namespace zalcman;

namespace {

double modulus_at(Alpha alpha, Lambda lambda, int n, const DiscreteMeasure& mu) {
  return phi(lambda, n, coeffs_from_measure(alpha, mu, 2 * n - 1)).modulus;
}

}  // namespace

TEST_CASE("Nelder-Mead minimizes Rosenbrock") {
  auto rosen = [](std::span<const double> x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  NelderMeadOptions opt;
  opt.max_iters = 5000;
  opt.tol = 1e-14;
  const auto r = nelder_mead(rosen, {-1.2, 1.0}, opt);
  CHECK(r.converged);
  CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(r.x[1] == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(r.value < 1e-10);
  CHECK_THROWS_AS(nelder_mead(rosen, {}, opt), UsageError);
}

TEST_CASE("extremal measures") {
  const auto dirac = extremal_measure(Alpha{-0.5}, Lambda{1.0}, 6);
  REQUIRE(dirac.size() == 1);
  CHECK(dirac.atoms()[0].theta == 0.0);
  CHECK(modulus_at(Alpha{-0.5}, Lambda{1.0}, 6, dirac) == doctest::Approx(6.25).epsilon(1e-14));

  const auto mix = extremal_measure(Alpha{0.0}, Lambda{1.0}, 3);
  REQUIRE(mix.size() == 4);
  for (int k = 0; k < 4; ++k) {
    CHECK(mix.atoms()[k].theta == doctest::Approx((2 * k + 1) * kPi / 4));
    CHECK(mix.atoms()[k].weight == doctest::Approx(0.25));
  }
  CHECK(modulus_at(Alpha{0.0}, Lambda{1.0}, 3, mix) == doctest::Approx(1.0).epsilon(1e-14));

  const auto six = extremal_measure(Alpha{-0.5}, Lambda{1.0}, 4);
  REQUIRE(six.size() == 6);
  const auto f = coeffs_from_measure(Alpha{-0.5}, six, 7);
  CHECK(std::abs(f(4)) < 1e-14);
  CHECK(std::abs(f(7) + 4.0) < 1e-14);
  CHECK(modulus_at(Alpha{-0.5}, Lambda{1.0}, 4, six) == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("maximize_phi examples") {
  const SearchConfig cfg;
  auto r = maximize_phi(Alpha{0.0}, Lambda{3.0}, 3, cfg);
  CHECK(std::abs(r.best_modulus - 2.0) <= 1e-6);
  CHECK(r.gap <= 1e-6);
  CHECK(r.sound());
  CHECK(r.starts_used == 32);

  r = maximize_phi(Alpha{-0.5}, Lambda{1.0}, 4, cfg);
  CHECK(std::abs(r.best_modulus - 4.0) <= 1e-6);

  // independent oracle: dense grid over two-atom measures
  const Alpha alpha{0.25};
  const double grid_max =
      oracle::two_atom_grid_max(oracle::gamma_ratio(0.25, 3), oracle::gamma_ratio(0.25, 5), 1.0, 3);
  CHECK(grid_max == doctest::Approx(0.4921875).epsilon(1e-12));
  r = maximize_phi(alpha, Lambda{1.0}, 3, cfg);
  CHECK(std::abs(r.best_modulus - grid_max) <= 1e-5);
  CHECK(std::abs(r.best_modulus - sharp_bound(alpha, Lambda{1.0}, 3).value) <= 1e-5);
}

TEST_CASE("random starts alone reach the bound on small problems") {
  SearchConfig cfg;
  cfg.seed_extremal = false;
  cfg.seed = 7;
  for (auto [a, l, n] : {std::tuple{0.0, 3.0, 3}, {0.0, 1.0, 3}, {-0.5, 1.0, 4}, {0.25, 1.0, 3}}) {
    const auto r = maximize_phi(Alpha{a}, Lambda{l}, n, cfg);
    CAPTURE(a);
    CAPTURE(l);
    CAPTURE(n);
    CHECK(r.gap <= 1e-6);
    CHECK(r.gap >= -kSoundnessTolerance);
    CHECK(r.sound());
  }
}

TEST_CASE("search is deterministic for a fixed seed") {
  SearchConfig cfg;
  cfg.seed = 99;
  cfg.starts = 6;
  cfg.seed_extremal = false;
  const auto a = maximize_phi(Alpha{0.3}, Lambda{2.0}, 4, cfg);
  const auto b = maximize_phi(Alpha{0.3}, Lambda{2.0}, 4, cfg);
  CHECK(a.best_modulus == b.best_modulus);
  CHECK(a.iterations_total == b.iterations_total);
  CHECK(a.best_start == b.best_start);
}

TEST_CASE("seeded start attains the bound and atom count is configurable") {
  SearchConfig cfg;
  cfg.starts = 1;
  cfg.max_iters = 1;
  for (int atoms : {4, 7, 12}) {
    cfg.atom_count = atoms;
    const auto r = maximize_phi(Alpha{0.0}, Lambda{1.0}, 3, cfg);
    CHECK(r.best_measure.size() == static_cast<std::size_t>(atoms));
    CHECK(std::abs(r.bound.value - r.seeded_modulus) <= 1e-10);
  }
  cfg.atom_count = 1;
  const auto single = maximize_phi(Alpha{-0.5}, Lambda{3.0}, 5, cfg);
  CHECK(std::abs(single.gap) <= 1e-10);
}

TEST_CASE("search configuration validation") {
  SearchConfig cfg;
  cfg.starts = 0;
  CHECK_THROWS_AS(maximize_phi(Alpha{0.0}, Lambda{1.0}, 3, cfg), UsageError);
  cfg = {};
  cfg.max_iters = 0;
  CHECK_THROWS_AS(cfg.validate(), UsageError);
  cfg = {};
  cfg.atom_count = 0;
  CHECK_THROWS_AS(cfg.validate(), UsageError);
  cfg = {};
  cfg.tol_converge = 0.0;
  CHECK_THROWS_AS(cfg.validate(), UsageError);
  CHECK_THROWS_AS(maximize_phi(Alpha{0.0}, Lambda{1.0}, 2, SearchConfig{}), UsageError);
}

TEST_CASE("falsification sweep") {
  SearchConfig cfg;
  cfg.starts = 8;
  const auto report = falsification_sweep(SweepGrid::defaults(), cfg);
  CHECK(report.rows.size() == 100);
  CHECK(report.violations == 0);
  CHECK_FALSE(report.failed());
  CHECK(report.attainment_failures == 0);
  // rows come back in grid order
  CHECK(report.rows[0].alpha == -0.5);
  CHECK(report.rows[0].lambda == 0.5);
  CHECK(report.rows[1].n == 4);
  CHECK(report.rows.back().alpha == 0.5);
  CHECK(report.rows.back().n == 6);
  for (const auto& row : report.rows) CHECK(std::abs(row.seeded_gap) <= 1e-10);

  const auto single = falsification_sweep(SweepGrid{{0.0}, {2.0}, {3}}, SearchConfig{});
  REQUIRE(single.rows.size() == 1);
  CHECK(single.rows[0].result.bound.regime == Regime::Boundary);
  CHECK(single.rows[0].result.gap <= 1e-6);
  CHECK(single.rows[0].result.bound.value == 1.0);

  const auto empty = falsification_sweep(SweepGrid{}, SearchConfig{});
  CHECK(empty.rows.empty());
  CHECK_FALSE(empty.failed());

  CHECK_THROWS_AS(falsification_sweep(SweepGrid{{1.0}, {1.0}, {3}}, cfg), DomainError);
}

TEST_CASE("sweep results do not depend on thread count") {
  SearchConfig cfg;
  cfg.starts = 3;
  cfg.seed = 5;
  const SweepGrid grid{{-0.25, 0.25}, {1.0, 4.0}, {3, 4}};
  const auto one = falsification_sweep(grid, cfg, 1);
  const auto many = falsification_sweep(grid, cfg, 4);
  REQUIRE(one.rows.size() == many.rows.size());
  for (std::size_t i = 0; i < one.rows.size(); ++i) {
    CHECK(one.rows[i].result.best_modulus == many.rows[i].result.best_modulus);
  }
}
