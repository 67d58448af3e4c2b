#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zalcman {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Caller violated a documented precondition (bad order, mismatched sizes, ...).
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Argument lies outside the mathematical domain of a formula.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Order parameter of the class F(alpha). Valid range is [-1/2, 1).
class Alpha {
public:
  explicit Alpha(double value);
  double value() const noexcept { return value_; }

private:
  double value_;
};

/// Strictly positive real weight of the squared term in the functional.
class Lambda {
public:
  explicit Lambda(double value);
  double value() const noexcept { return value_; }

private:
  double value_;
};

/// Normalized Taylor coefficients a_1..a_{n_max} of f(z) = z + a_2 z^2 + ...
/// Indexing is 1-based through operator(); a_1 is always exactly 1.
class CoeffSequence {
public:
  /// `tail` holds a_2..a_{n_max}; a_1 = 1 is implied.
  explicit CoeffSequence(std::vector<Complex> tail);

  static CoeffSequence identity(int n_max);
  static CoeffSequence koebe(int n_max);

  int n_max() const noexcept { return static_cast<int>(a_.size()); }
  const Complex& operator()(int n) const;
  std::span<const Complex> values() const noexcept { return a_; }

private:
  std::vector<Complex> a_;  // a_[k] = a_{k+1}
};

struct Atom {
  double theta;
  double weight;
};

/// Finitely supported probability measure on [0, 2pi).
/// Weight drift up to 1e-9 is renormalized away; larger drift is rejected.
class DiscreteMeasure {
public:
  explicit DiscreteMeasure(std::vector<Atom> atoms);

  static DiscreteMeasure dirac(double theta);

  std::span<const Atom> atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }

  /// Integral of e^{i m theta} against the measure.
  Complex moment(int m) const noexcept;

private:
  std::vector<Atom> atoms_;
};

/// Reduces an angle into [0, 2pi).
double reduce_angle(double theta) noexcept;

}  // namespace zalcman
