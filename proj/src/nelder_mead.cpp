#include "zalcman/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "zalcman/types.hpp"

namespace zalcman {

namespace {

struct Simplex {
  std::vector<std::vector<double>> pts;
  std::vector<double> vals;
};

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::vector<double> x0, const NelderMeadOptions& opt) {
  const std::size_t dim = x0.size();
  if (dim == 0) throw UsageError("nelder_mead needs at least one coordinate");
  if (!opt.steps.empty() && opt.steps.size() != dim) {
    throw UsageError("nelder_mead step vector has the wrong length");
  }
  const double d = static_cast<double>(dim);
  const double expand = 1.0 + 2.0 / d;
  const double contract = 0.75 - 1.0 / (2.0 * d);
  const double shrink = 1.0 - 1.0 / d;

  NelderMeadResult res;
  auto eval = [&](std::span<const double> x) {
    ++res.evaluations;
    const double v = f(x);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };

  Simplex s;
  auto build = [&](const std::vector<double>& center, double center_val) {
    s.pts.assign(1, center);
    s.vals.assign(1, center_val);
    for (std::size_t i = 0; i < dim; ++i) {
      auto p = center;
      p[i] += opt.steps.empty() ? opt.initial_step : opt.steps[i];
      s.vals.push_back(eval(p));
      s.pts.push_back(std::move(p));
    }
  };

  std::vector<std::size_t> order(dim + 1);
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return s.vals[a] < s.vals[b]; });
    Simplex sorted;
    for (auto i : order) {
      sorted.pts.push_back(std::move(s.pts[i]));
      sorted.vals.push_back(s.vals[i]);
    }
    s = std::move(sorted);
  };

  build(x0, eval(x0));
  double restart_base = s.vals[0];
  std::vector<double> centroid(dim), trial(dim), trial2(dim);

  while (res.iterations < opt.max_iters) {
    sort_simplex();
    const double best = s.vals.front();
    const double worst = s.vals.back();
    if (worst - best <= opt.tol * (1.0 + std::abs(best))) {
      res.converged = true;
      if (res.restarts > 0 && restart_base - best <= opt.tol * (1.0 + std::abs(best))) break;
      restart_base = best;
      ++res.restarts;
      auto center = s.pts.front();
      build(center, best);
      continue;
    }
    res.converged = false;
    ++res.iterations;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) centroid[j] += s.pts[i][j];
    }
    for (auto& c : centroid) c /= d;

    const auto& worst_pt = s.pts.back();
    for (std::size_t j = 0; j < dim; ++j) trial[j] = centroid[j] + (centroid[j] - worst_pt[j]);
    const double f_refl = eval(trial);

    if (f_refl < s.vals.front()) {
      for (std::size_t j = 0; j < dim; ++j) {
        trial2[j] = centroid[j] + expand * (trial[j] - centroid[j]);
      }
      const double f_exp = eval(trial2);
      if (f_exp < f_refl) {
        s.pts.back() = trial2;
        s.vals.back() = f_exp;
      } else {
        s.pts.back() = trial;
        s.vals.back() = f_refl;
      }
      continue;
    }
    if (f_refl < s.vals[dim - 1]) {
      s.pts.back() = trial;
      s.vals.back() = f_refl;
      continue;
    }

    const bool outside = f_refl < s.vals.back();
    for (std::size_t j = 0; j < dim; ++j) {
      trial2[j] = outside ? centroid[j] + contract * (trial[j] - centroid[j])
                          : centroid[j] + contract * (worst_pt[j] - centroid[j]);
    }
    const double f_con = eval(trial2);
    if (f_con < (outside ? f_refl : s.vals.back())) {
      s.pts.back() = trial2;
      s.vals.back() = f_con;
      continue;
    }

    for (std::size_t i = 1; i <= dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        s.pts[i][j] = s.pts[0][j] + shrink * (s.pts[i][j] - s.pts[0][j]);
      }
      s.vals[i] = eval(s.pts[i]);
    }
  }

  sort_simplex();
  res.x = s.pts.front();
  res.value = s.vals.front();
  return res;
}

}  // namespace zalcman
