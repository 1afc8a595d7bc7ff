#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace wiretap {

// Per-coordinate tolerance for simplex membership.
inline constexpr double kPmfTol = 1e-9;
// Constructor renormalizes a weight vector whose sum drifts by less than
// this; anything further off is rejected.
inline constexpr double kPmfSumSlack = 1e-6;

// A point of the probability simplex.
class Pmf {
 public:
  explicit Pmf(std::vector<double> weights);

  static Pmf uniform(std::size_t dim);
  static Pmf basis(std::size_t dim, std::size_t index);
  static Pmf binary(double p0);  // {p0, 1 - p0}

  std::size_t dim() const { return w_.size(); }
  double operator[](std::size_t i) const { return w_[i]; }
  const std::vector<double>& weights() const { return w_; }
  const double* data() const { return w_.data(); }

  bool is_interior(double margin = 10 * kPmfTol) const;

 private:
  std::vector<double> w_;
};

// Shannon entropy in bits, 0 log 0 = 0.
double entropy(const Pmf& p);
double entropy(const double* w, std::size_t n);
double binary_entropy(double x);

// Rotates mass k positions forward: result[(i + k) mod dim] = p[i].
Pmf cyclic_shift(const Pmf& p, long k);

// result[perm[i]] = p[i]; perm must be a permutation of 0..dim-1.
Pmf apply_permutation(const Pmf& p, const std::vector<std::size_t>& perm);

// target = anchor_weight * anchor + sum_k vertex_weights[k] * basis(vertices[k]).
struct SimplexDecomposition {
  double anchor_weight = 0;
  std::vector<std::size_t> vertices;   // dim - 1 distinct coordinate indices
  std::vector<double> vertex_weights;  // aligned with vertices
};

// Expresses target as a convex combination of anchor and dim - 1 simplex
// vertices. The simplex is triangulated by starring from anchor; candidates
// are tried in order of excluded vertex index and the first feasible one
// wins. anchor_weight > 0 whenever target has full support.
SimplexDecomposition decompose(const Pmf& target, const Pmf& anchor);

std::uint64_t simplex_grid_size(std::size_t dim, unsigned resolution);

// All pmfs whose coordinates are multiples of 1/resolution.
std::vector<Pmf> simplex_grid(std::size_t dim, unsigned resolution,
                              std::uint64_t max_points = 20'000'000);

}  // namespace wiretap
