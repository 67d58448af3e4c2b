#include "zalcman/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <string>
#include <thread>

#include "zalcman/falpha.hpp"
#include "zalcman/nelder_mead.hpp"
#include "zalcman/sampling.hpp"

namespace zalcman {

namespace {

constexpr double kThetaStep = 0.3;
constexpr double kLogitStep = 0.5;


std::vector<double> softmax(std::span<const double> logits) {
  const double top = *std::max_element(logits.begin(), logits.end());
  std::vector<double> w(logits.size());
  double total = 0.0;
  for (std::size_t k = 0; k < logits.size(); ++k) {
    w[k] = std::exp(logits[k] - top);
    total += w[k];
  }
  for (auto& x : w) x /= total;
  return w;
}

// Parameter vector layout: theta_1..theta_K, logit_1..logit_K.
DiscreteMeasure decode(std::span<const double> x) {
  const std::size_t k = x.size() / 2;
  const auto w = softmax(x.subspan(k));
  std::vector<Atom> atoms(k);
  for (std::size_t i = 0; i < k; ++i) atoms[i] = Atom{x[i], w[i]};
  return DiscreteMeasure(std::move(atoms));
}

// Spreads the extremal atoms over K slots so the decoded measure reproduces them
// whenever K is at least the extremal atom count.
std::vector<double> seeded_parameters(const DiscreteMeasure& target, int atoms) {
  const auto src = target.atoms();
  const std::size_t m = src.size();
  const std::size_t k = static_cast<std::size_t>(atoms);
  std::vector<int> share(m, 0);
  for (std::size_t i = 0; i < k; ++i) ++share[i % m];
  std::vector<double> x(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& atom = src[i % m];
    x[i] = atom.theta;
    x[k + i] = std::log(atom.weight / share[i % m]);
  }
  return x;
}

std::vector<double> random_parameters(std::mt19937_64& rng, int atoms) {
  const std::size_t k = static_cast<std::size_t>(atoms);
  std::vector<double> x(2 * k);
  for (std::size_t i = 0; i < k; ++i) x[i] = kTwoPi * uniform01(rng);
  for (std::size_t i = 0; i < k; ++i) x[k + i] = 2.0 * uniform01(rng) - 1.0;
  return x;
}

class Objective {
public:
  Objective(Alpha alpha, Lambda lambda, int n, double bound)
      : lambda_(lambda.value()), n_(n), bound_(bound) {
    const auto a = An_table(alpha, 2 * n - 1);
    a_n_ = a[n - 1];
    a_2n_1_ = a[2 * n - 2];
  }

  double modulus(std::span<const double> x) const {
    const std::size_t k = x.size() / 2;
    const auto w = softmax(x.subspan(k));
    Complex m1{}, m2{};
    for (std::size_t i = 0; i < k; ++i) {
      m1 += w[i] * std::polar(1.0, (n_ - 1) * x[i]);
      m2 += w[i] * std::polar(1.0, 2 * (n_ - 1) * x[i]);
    }
    const Complex a_n = a_n_ * m1;
    return std::abs(lambda_ * a_n * a_n - a_2n_1_ * m2);
  }

  double bound() const { return bound_; }

private:
  double lambda_;
  int n_;
  double bound_;
  double a_n_ = 0.0;
  double a_2n_1_ = 0.0;
};

struct StartOutcome {
  double modulus = 0.0;
  std::vector<double> x;
  int iterations = 0;
  long evaluations = 0;
  bool converged = false;
  long violations = 0;
  double worst_excess = -std::numeric_limits<double>::infinity();
  std::vector<double> worst_x;
};

StartOutcome run_start(const Objective& obj, std::vector<double> x0, const SearchConfig& cfg) {
  StartOutcome out;
  auto f = [&](std::span<const double> x) {
    const double m = obj.modulus(x);
    const double excess = m - obj.bound();
    if (excess > out.worst_excess) {
      out.worst_excess = excess;
      out.worst_x.assign(x.begin(), x.end());
    }
    if (excess > kSoundnessTolerance) ++out.violations;
    return -m;
  };
  NelderMeadOptions opt;
  opt.max_iters = cfg.max_iters;
  opt.tol = cfg.tol_converge;
  const std::size_t k = x0.size() / 2;
  opt.steps.assign(k, kThetaStep);
  opt.steps.resize(2 * k, kLogitStep);
  const auto res = nelder_mead(f, std::move(x0), opt);
  out.modulus = -res.value;
  out.x = res.x;
  out.iterations = res.iterations;
  out.evaluations = res.evaluations;
  out.converged = res.converged;
  return out;
}

}  // namespace

void SearchConfig::validate() const {
  if (atom_count && *atom_count < 1) throw UsageError("atom count must be positive");
  if (starts < 1) throw UsageError("starts must be positive");
  if (max_iters < 1) throw UsageError("max_iters must be positive");
  if (!(tol_converge > 0.0)) throw UsageError("tol_converge must be positive");
}

DiscreteMeasure extremal_measure(Alpha alpha, Lambda lambda, int n) {
  const BoundResult b = sharp_bound(alpha, lambda, n);
  if (b.extremal == Extremal::SingleAtom) return DiscreteMeasure::dirac(0.0);
  const int count = 2 * n - 2;
  std::vector<Atom> atoms;
  for (int k = 0; k < count; ++k) {
    atoms.push_back(Atom{(2 * k + 1) * kPi / count, 1.0 / count});
  }
  return DiscreteMeasure(std::move(atoms));
}

SearchResult maximize_phi(Alpha alpha, Lambda lambda, int n, const SearchConfig& cfg) {
  cfg.validate();
  SearchResult result;
  result.bound = sharp_bound(alpha, lambda, n);
  const Objective obj(alpha, lambda, n, result.bound.value);
  const int atoms = cfg.atoms_for(n);

  const auto seed_x = seeded_parameters(extremal_measure(alpha, lambda, n), atoms);
  result.seeded_modulus = obj.modulus(seed_x);

  std::vector<StartOutcome> outcomes;
  outcomes.reserve(static_cast<std::size_t>(cfg.starts));
  for (int s = 0; s < cfg.starts; ++s) {
    std::vector<double> x0;
    if (s == 0 && cfg.seed_extremal) {
      x0 = seed_x;
    } else {
      std::mt19937_64 rng(cfg.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(s));
      x0 = random_parameters(rng, atoms);
    }
    outcomes.push_back(run_start(obj, std::move(x0), cfg));
  }

  // Best-of: larger modulus wins, ties go to the lower start index.
  std::size_t best = 0;
  double worst_excess = -std::numeric_limits<double>::infinity();
  std::size_t worst_start = 0;
  for (std::size_t s = 0; s < outcomes.size(); ++s) {
    const auto& o = outcomes[s];
    if (o.modulus > outcomes[best].modulus) best = s;
    result.iterations_total += o.iterations;
    result.evaluations += o.evaluations;
    result.violations += o.violations;
    if (o.worst_excess > worst_excess) {
      worst_excess = o.worst_excess;
      worst_start = s;
    }
  }
  result.starts_used = cfg.starts;
  result.best_start = static_cast<int>(best);
  result.best_modulus = outcomes[best].modulus;
  result.best_measure = decode(outcomes[best].x);
  result.converged = outcomes[best].converged;
  result.gap = result.bound.value - result.best_modulus;
  result.worst_excess = worst_excess;
  if (result.violations > 0) result.worst_measure = decode(outcomes[worst_start].worst_x);
  return result;
}

SweepGrid SweepGrid::defaults() {
  return SweepGrid{{-0.5, -0.25, 0.0, 0.25, 0.5}, {0.5, 1.0, 1.5, 2.0, 4.0}, {3, 4, 5, 6}};
}

SweepReport falsification_sweep(const SweepGrid& grid, const SearchConfig& cfg, unsigned threads) {
  cfg.validate();
  struct Point {
    double alpha, lambda;
    int n;
  };
  std::vector<Point> points;
  for (double a : grid.alphas) {
    for (double l : grid.lambdas) {
      for (int n : grid.ns) points.push_back({a, l, n});
    }
  }
  // Parameter validation happens up front so a bad grid fails before any work starts.
  for (const auto& p : points) {
    Alpha{p.alpha};
    Lambda{p.lambda};
    if (p.n < 3) throw UsageError("sweep needs n >= 3");
  }

  SweepReport report;
  report.rows.resize(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      const auto& p = points[i];
      SweepRow row;
      row.alpha = p.alpha;
      row.lambda = p.lambda;
      row.n = p.n;
      row.result = maximize_phi(Alpha{p.alpha}, Lambda{p.lambda}, p.n, cfg);
      row.seeded_gap = row.result.bound.value - row.result.seeded_modulus;
      row.attainment_asserted = p.alpha <= 0.5;
      row.attained = row.result.gap <= kAttainmentTolerance;
      report.rows[i] = std::move(row);
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(points.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& row : report.rows) {
    report.violations += row.result.violations;
    if (row.attainment_asserted && !row.attained) ++report.attainment_failures;
    auto [it, inserted] = report.worst_gap.try_emplace(row.result.bound.regime, row.result.gap);
    if (!inserted) it->second = std::max(it->second, row.result.gap);
  }
  return report;
}

}  // namespace zalcman
