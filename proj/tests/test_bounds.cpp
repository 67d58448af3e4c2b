#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zalcman/bounds.hpp"
#include "zalcman/falpha.hpp"
#include "zalcman/sampling.hpp"

using namespace zalcman;

namespace {

bool rel_eq(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("C_n examples") {
  CHECK(compute_Cn(Alpha{0.0}, 17) == 2.0);
  CHECK(rel_eq(compute_Cn(Alpha{-0.5}, 5), 10.0 / 9.0, 1e-15));
  CHECK(rel_eq(compute_Cn(Alpha{0.5}, 3), 18.0 / 5.0, 1e-15));
  CHECK_THROWS_AS(compute_Cn(Alpha{0.0}, 2), UsageError);
}

TEST_CASE("C_n matches the gamma-ratio definition") {
  for (double a : {-0.5, -0.21, 0.13, 0.5, 0.8}) {
    for (int n = 3; n <= 25; ++n) {
      const double an = oracle::gamma_ratio(a, n);
      CHECK(rel_eq(compute_Cn(Alpha{a}, n), 2.0 * oracle::gamma_ratio(a, 2 * n - 1) / (an * an), 1e-10));
    }
  }
}

TEST_CASE("closed-form C_3") {
  CHECK(rel_eq(c3_closed(Alpha{0.0}), 2.0, 1e-15));
  CHECK(rel_eq(c3_closed(Alpha{-0.5}), 1.5, 1e-15));
  CHECK(rel_eq(c3_closed(Alpha{0.5}), 3.6, 1e-15));
  std::mt19937_64 rng(31);
  for (int i = 0; i < 500; ++i) {
    const Alpha alpha = random_alpha(rng);
    CHECK(std::abs(c3_closed(alpha) - compute_Cn(alpha, 3)) <= 1e-13 * compute_Cn(alpha, 3));
  }
}

TEST_CASE("monotonicity reports") {
  const auto dec = check_monotonicity(Alpha{-0.5}, 50);
  CHECK(dec.ok());
  CHECK(dec.direction == -1);
  CHECK(dec.max_violation == 0.0);
  CHECK(dec.n_last == 50);

  const auto inc = check_monotonicity(Alpha{0.3}, 50);
  CHECK(inc.ok());
  CHECK(inc.direction == 1);

  const auto flat = check_monotonicity(Alpha{0.0}, 50);
  CHECK(flat.ok());
  CHECK(flat.direction == 0);
  CHECK(flat.max_violation == 0.0);

  CHECK_THROWS_AS(check_monotonicity(Alpha{0.1}, 3), UsageError);
}

TEST_CASE("monotonicity holds for random alpha up to n = 100, with strict sign") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 200; ++i) {
    const Alpha alpha = random_alpha(rng);
    CHECK(check_monotonicity(alpha, 100).ok());
    const double sign = alpha.value() > 0 ? 1.0 : -1.0;
    double prev = compute_Cn(alpha, 3);
    for (int n = 4; n <= 100; n += 7) {
      const double c = compute_Cn(alpha, n);
      CHECK(sign * (c - prev) > 0.0);
      prev = c;
    }
  }
}

TEST_CASE("n0 threshold examples") {
  CHECK(n0_threshold(Alpha{-0.5}, Lambda{1.0}).n0 == 6);
  CHECK(n0_threshold(Alpha{-0.5}, Lambda{1.5}).n0 == 3);
  CHECK(n0_threshold(Alpha{0.5}, Lambda{4.0}).n0 == 4);
  CHECK(n0_threshold(Alpha{0.5}, Lambda{8.0}).n0 == 8);
  CHECK(n0_threshold(Alpha{0.5}, Lambda{1.0}).n0 == 3);
  const auto none = n0_threshold(Alpha{0.0}, Lambda{1.0});
  CHECK_FALSE(none.n0.has_value());
  CHECK_FALSE(none.note.empty());
}

TEST_CASE("n0 is the first n where the branch flips") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 200; ++i) {
    const Alpha alpha = random_alpha(rng);
    if (std::abs(alpha.value()) < 0.05) continue;
    const double c3 = compute_Cn(alpha, 3);
    const Lambda lambda{c3 * uniform(rng, 0.5, 2.0)};
    const auto r = n0_threshold(alpha, lambda);
    REQUIRE(r.n0.has_value());
    const int n0 = *r.n0;
    const bool neg = alpha.value() < 0;
    auto holds = [&](int n) {
      const double c = compute_Cn(alpha, n);
      return neg ? lambda.value() >= c : lambda.value() <= c;
    };
    CHECK(holds(n0));
    if (n0 > 3) CHECK_FALSE(holds(n0 - 1));
  }
}

TEST_CASE("corollary threshold") {
  CHECK(rel_eq(corollary_threshold(1.0), 3.0 + 2.0 * std::sqrt(2.0), 1e-15));
  CHECK(rel_eq(corollary_threshold(1.5), 3.0, 1e-15));
  CHECK(rel_eq(corollary_threshold(0.5), 7.0 + 4.0 * std::sqrt(3.0), 1e-15));
  CHECK(n0_threshold(Alpha{-0.5}, Lambda{0.5}).n0 == 14);
  CHECK_NOTHROW(corollary_threshold(2.0));
  CHECK_THROWS_AS(corollary_threshold(2.1), DomainError);
  CHECK_THROWS_AS(corollary_threshold(0.0), DomainError);

  std::mt19937_64 rng(34);
  for (int i = 0; i < 300; ++i) {
    const double lam = uniform(rng, 0.05, 1.5);
    const double t = corollary_threshold(lam);
    CHECK(n0_threshold(Alpha{-0.5}, Lambda{lam}).n0 == static_cast<int>(std::floor(t)) + 1);
  }
}

TEST_CASE("alpha = 1/2 threshold") {
  CHECK(rel_eq(alpha_half_threshold(4.0).value, (4.0 + std::sqrt(8.0)) / 2.0, 1e-15));
  CHECK(alpha_half_threshold(4.0).note.empty());
  CHECK(rel_eq(alpha_half_threshold(3.6).value, 3.0, 1e-15));
  CHECK(alpha_half_threshold(3.6).note == "below-C3, unused by theorem");
  CHECK(rel_eq(alpha_half_threshold(8.0).value, (8.0 + std::sqrt(48.0)) / 2.0, 1e-15));
  CHECK_THROWS_AS(alpha_half_threshold(2.0), DomainError);

  std::mt19937_64 rng(35);
  for (int i = 0; i < 300; ++i) {
    const double lam = uniform(rng, 3.61, 60.0);
    const double t = alpha_half_threshold(lam).value;
    CHECK(n0_threshold(Alpha{0.5}, Lambda{lam}).n0 == static_cast<int>(std::ceil(t)));
  }
}

TEST_CASE("sharp bound examples") {
  auto b = sharp_bound(Alpha{0.0}, Lambda{3.0}, 4);
  CHECK(b.value == 2.0);
  CHECK(b.regime == Regime::LargeLambda);
  CHECK(b.extremal == Extremal::SingleAtom);

  b = sharp_bound(Alpha{-0.5}, Lambda{1.0}, 6);
  CHECK(rel_eq(b.value, 25.0 / 4.0, 1e-15));
  CHECK(b.regime == Regime::LargeLambda);

  b = sharp_bound(Alpha{-0.5}, Lambda{1.0}, 4);
  CHECK(b.value == 4.0);
  CHECK(b.regime == Regime::SmallLambda);
  CHECK(b.extremal == Extremal::RotationMix);

  CHECK(rel_eq(sharp_bound(Alpha{-0.5}, Lambda{1.5}, 5).value, 8.5, 1e-15));

  b = sharp_bound(Alpha{0.5}, Lambda{4.0}, 3);
  CHECK(rel_eq(b.value, 11.0 / 45.0, 1e-15));
  CHECK(b.regime == Regime::LargeLambda);

  b = sharp_bound(Alpha{0.0}, Lambda{1.0}, 7);
  CHECK(b.value == 1.0);
  CHECK(b.regime == Regime::SmallLambda);

  CHECK_THROWS_AS(sharp_bound(Alpha{0.0}, Lambda{1.0}, 2), UsageError);
  CHECK_THROWS_AS(Lambda{0.0}, DomainError);
  CHECK_THROWS_AS(Lambda{-1.0}, DomainError);
}

TEST_CASE("case tags follow the governing hypotheses") {
  CHECK(sharp_bound(Alpha{0.0}, Lambda{2.5}, 5).bound_case == BoundCase::ConvexLargeLambda);
  CHECK(sharp_bound(Alpha{0.0}, Lambda{1.0}, 5).bound_case == BoundCase::ConvexSmallLambda);
  CHECK(sharp_bound(Alpha{-0.5}, Lambda{2.0}, 3).bound_case == BoundCase::MinusHalfLargeLambda);
  CHECK(sharp_bound(Alpha{-0.5}, Lambda{1.0}, 6).bound_case == BoundCase::MinusHalfAboveThreshold);
  CHECK(sharp_bound(Alpha{-0.5}, Lambda{1.0}, 5).bound_case == BoundCase::MinusHalfBelowThreshold);
  CHECK(sharp_bound(Alpha{-0.3}, Lambda{3.0}, 4).bound_case == BoundCase::NegativeLargeLambda);
  CHECK(sharp_bound(Alpha{-0.3}, Lambda{1.0}, 30).bound_case == BoundCase::NegativeAtLeastN0);
  CHECK(sharp_bound(Alpha{-0.3}, Lambda{1.0}, 3).bound_case == BoundCase::NegativeBelowN0);
  CHECK(sharp_bound(Alpha{0.25}, Lambda{1.0}, 3).bound_case == BoundCase::PositiveSmallLambda);
  CHECK(sharp_bound(Alpha{0.25}, Lambda{3.0}, 30).bound_case == BoundCase::PositiveAtLeastN0);
  CHECK(sharp_bound(Alpha{0.25}, Lambda{3.0}, 3).bound_case == BoundCase::PositiveBelowN0);
  CHECK(sharp_bound(Alpha{0.5}, Lambda{2.0}, 4).bound_case == BoundCase::HalfSmallLambda);
  CHECK(sharp_bound(Alpha{0.5}, Lambda{4.0}, 4).bound_case == BoundCase::HalfAboveThreshold);
  CHECK(sharp_bound(Alpha{0.5}, Lambda{4.0}, 3).bound_case == BoundCase::HalfBelowThreshold);
  CHECK(sharp_bound(Alpha{0.5}, Lambda{4.0}, 3).theorem_tag() == "alpha=1/2:lambda>18/5:n<threshold");
}

TEST_CASE("regime invariants and boundary continuity") {
  std::mt19937_64 rng(36);
  for (int i = 0; i < 1000; ++i) {
    const Alpha alpha = random_alpha(rng);
    const int n = 3 + static_cast<int>(rng() % 28);
    const Lambda lambda{uniform(rng, 0.01, 6.0)};
    const auto b = sharp_bound(alpha, lambda, n);
    CHECK(b.value > 0.0);
    const double large = lambda.value() * b.a_n * b.a_n - b.a_2n_1;
    switch (b.regime) {
      case Regime::LargeLambda:
        CHECK(rel_eq(b.value, large, 1e-12));
        CHECK(lambda.value() >= b.c_n);
        break;
      case Regime::SmallLambda:
        CHECK(rel_eq(b.value, b.a_2n_1, 1e-12));
        CHECK(lambda.value() <= b.c_n);
        break;
      case Regime::Boundary:
        CHECK(rel_eq(large, b.a_2n_1, 1e-12));
        break;
    }
    // Exactly at lambda = C_n both branch values coincide.
    const auto at = sharp_bound(alpha, Lambda{b.c_n}, n);
    CHECK(at.regime == Regime::Boundary);
    CHECK(at.extremal == Extremal::SingleAtom);
    CHECK(std::abs((b.c_n * b.a_n * b.a_n - b.a_2n_1) - b.a_2n_1) <= 1e-12 * std::max(1.0, b.a_2n_1));
  }
}

TEST_CASE("closed-form cases agree with the two-branch rule on the full grid") {
  long mismatches = 0;
  for (double a : {-0.5, -0.3, -0.1, 0.0, 0.1, 0.25, 0.5, 0.75}) {
    for (int k = 1; k <= 50; ++k) {
      for (int n = 3; n <= 30; ++n) {
        const double unified = unified_bound(Alpha{a}, Lambda{k / 10.0}, n);
        const double cases = sharp_bound(Alpha{a}, Lambda{k / 10.0}, n).value;
        if (std::abs(unified - cases) > 1e-12 * std::abs(unified)) ++mismatches;
      }
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("Fekete-Szego bound over S") {
  CHECK(fekete_szego_S(0.0) == 3.0);
  CHECK(rel_eq(fekete_szego_S(0.5), 1.0 + 2.0 * std::exp(-2.0), 1e-15));
  CHECK(fekete_szego_S(0.5) == doctest::Approx(1.27067).epsilon(1e-5));
  CHECK(std::abs(fekete_szego_S(1.0 - 1e-9) - 1.0) < 1e-12);
  CHECK_THROWS_AS(fekete_szego_S(1.0), DomainError);
  CHECK_THROWS_AS(fekete_szego_S(-0.1), DomainError);
}
