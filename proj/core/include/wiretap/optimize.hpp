#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "wiretap/pmf.hpp"

namespace wiretap {

struct AscentOptions {
  double initial_step = 0.05;
  double min_step = 1e-10;
  double shrink = 0.5;
  unsigned max_sweeps = 20000;
};

// Maximizes obj over a product of probability simplices. x holds the blocks
// back to back (block b occupies dims[b] consecutive entries and must sum to
// 1). Greedy pairwise mass transfer inside each block with geometrically
// shrinking step. Returns the final objective value; x is refined in place.
double ascend_product_simplex(
    const std::vector<std::size_t>& dims, std::vector<double>& x,
    const std::function<double(const std::vector<double>&)>& obj,
    const AscentOptions& opts = {});

// Maximizes fn on [lo, hi] around seed by shrinking bidirectional steps.
double polish_scalar(const std::function<double(double)>& fn, double& arg,
                     double lo, double hi, double initial_step,
                     double min_step = 1e-10);

// Dirichlet(1) draw.
Pmf random_pmf(std::size_t dim, std::mt19937_64& rng);

// Simplex grid density used by the classification searches, by alphabet size.
unsigned default_grid_resolution(std::size_t dim);

}  // namespace wiretap
