#include "wiretap/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace wiretap {

double ascend_product_simplex(
    const std::vector<std::size_t>& dims, std::vector<double>& x,
    const std::function<double(const std::vector<double>&)>& obj,
    const AscentOptions& opts) {
  std::vector<std::size_t> offset(dims.size());
  std::size_t total = 0;
  for (std::size_t b = 0; b < dims.size(); ++b) {
    offset[b] = total;
    total += dims[b];
  }
  if (x.size() != total)
    throw std::invalid_argument("ascend_product_simplex: size mismatch");

  double best = obj(x);
  double step = opts.initial_step;
  unsigned sweeps = 0;
  while (step >= opts.min_step && sweeps < opts.max_sweeps) {
    bool improved = false;
    for (std::size_t b = 0; b < dims.size(); ++b) {
      const std::size_t off = offset[b], d = dims[b];
      if (d < 2) continue;
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          if (i == j) continue;
          const double amt = std::min(step, x[off + j]);
          if (amt <= 0) continue;
          x[off + i] += amt;
          x[off + j] -= amt;
          const double v = obj(x);
          if (v > best + 1e-15) {
            best = v;
            improved = true;
          } else {
            x[off + i] -= amt;
            x[off + j] += amt;
          }
        }
      }
    }
    ++sweeps;
    if (!improved) step *= opts.shrink;
  }
  return best;
}

double polish_scalar(const std::function<double(double)>& fn, double& arg,
                     double lo, double hi, double initial_step,
                     double min_step) {
  double best = fn(arg);
  double step = initial_step;
  while (step >= min_step) {
    bool improved = false;
    for (double dir : {+1.0, -1.0}) {
      const double cand = std::clamp(arg + dir * step, lo, hi);
      if (cand == arg) continue;
      const double v = fn(cand);
      if (v > best + 1e-16) {
        best = v;
        arg = cand;
        improved = true;
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

Pmf random_pmf(std::size_t dim, std::mt19937_64& rng) {
  std::exponential_distribution<double> exp1(1.0);
  std::vector<double> w(dim);
  double sum = 0;
  for (double& v : w) {
    v = exp1(rng);
    sum += v;
  }
  for (double& v : w) v /= sum;
  return Pmf(std::move(w));
}

unsigned default_grid_resolution(std::size_t dim) {
  switch (dim) {
    case 2: return 200;
    case 3: return 40;
    case 4: return 20;
    case 5: return 12;
    default: return 8;
  }
}

}  // namespace wiretap
