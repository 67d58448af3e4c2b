#include "zalcman/types.hpp"

#include <cmath>
#include <string>

namespace zalcman {

namespace {

constexpr double kWeightDriftLimit = 1e-9;

bool all_finite(const Complex& c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

}  // namespace

Alpha::Alpha(double value) : value_(value) {
  if (!std::isfinite(value) || value < -0.5 || value >= 1.0) {
    throw DomainError("alpha must lie in [-1/2, 1), got " + std::to_string(value));
  }
}

Lambda::Lambda(double value) : value_(value) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw DomainError("lambda must be positive, got " + std::to_string(value));
  }
}

CoeffSequence::CoeffSequence(std::vector<Complex> tail) {
  a_.reserve(tail.size() + 1);
  a_.emplace_back(1.0, 0.0);
  for (const auto& c : tail) {
    if (!all_finite(c)) throw UsageError("coefficient sequence contains a non-finite entry");
    a_.push_back(c);
  }
}

CoeffSequence CoeffSequence::identity(int n_max) {
  if (n_max < 1) throw UsageError("n_max must be at least 1");
  return CoeffSequence(std::vector<Complex>(static_cast<std::size_t>(n_max - 1)));
}

CoeffSequence CoeffSequence::koebe(int n_max) {
  if (n_max < 1) throw UsageError("n_max must be at least 1");
  std::vector<Complex> tail;
  for (int n = 2; n <= n_max; ++n) tail.emplace_back(static_cast<double>(n), 0.0);
  return CoeffSequence(std::move(tail));
}

const Complex& CoeffSequence::operator()(int n) const {
  if (n < 1 || n > n_max()) {
    throw UsageError("coefficient index " + std::to_string(n) + " outside 1.." +
                     std::to_string(n_max()));
  }
  return a_[static_cast<std::size_t>(n - 1)];
}

double reduce_angle(double theta) noexcept {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2pi
  if (r >= kTwoPi) r = 0.0;
  return r;
}

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw UsageError("a measure needs at least one atom");
  double total = 0.0;
  for (auto& atom : atoms_) {
    if (!std::isfinite(atom.theta) || !std::isfinite(atom.weight)) {
      throw UsageError("measure atom has a non-finite angle or weight");
    }
    if (atom.weight < 0.0) throw UsageError("measure weights must be non-negative");
    atom.theta = reduce_angle(atom.theta);
    total += atom.weight;
  }
  if (std::abs(total - 1.0) > kWeightDriftLimit) {
    throw UsageError("measure weights sum to " + std::to_string(total) + ", expected 1");
  }
  for (auto& atom : atoms_) atom.weight /= total;
}

DiscreteMeasure DiscreteMeasure::dirac(double theta) {
  return DiscreteMeasure({Atom{theta, 1.0}});
}

Complex DiscreteMeasure::moment(int m) const noexcept {
  Complex sum{0.0, 0.0};
  for (const auto& atom : atoms_) sum += atom.weight * std::polar(1.0, m * atom.theta);
  return sum;
}

}  // namespace zalcman
