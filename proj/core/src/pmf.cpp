#include "wiretap/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wiretap {

Pmf::Pmf(std::vector<double> weights) : w_(std::move(weights)) {
  if (w_.empty()) throw std::invalid_argument("pmf: empty weight vector");
  double sum = 0;
  for (double& x : w_) {
    if (!(x > -kPmfTol))  // also rejects NaN
      throw std::invalid_argument("pmf: weight " + std::to_string(x) +
                                  " out of range");
    if (x < 0) x = 0;
    sum += x;
  }
  if (std::abs(sum - 1.0) > kPmfSumSlack)
    throw std::invalid_argument("pmf: weights sum to " + std::to_string(sum));
  if (sum != 1.0)
    for (double& x : w_) x /= sum;
}

Pmf Pmf::uniform(std::size_t dim) {
  return Pmf(std::vector<double>(dim, 1.0 / static_cast<double>(dim)));
}

Pmf Pmf::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::invalid_argument("pmf: basis index out of range");
  std::vector<double> w(dim, 0.0);
  w[index] = 1.0;
  return Pmf(std::move(w));
}

Pmf Pmf::binary(double p0) { return Pmf({p0, 1.0 - p0}); }

bool Pmf::is_interior(double margin) const {
  return std::all_of(w_.begin(), w_.end(),
                     [margin](double x) { return x >= margin; });
}

double entropy(const double* w, std::size_t n) {
  double h = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (w[i] > 0) h -= w[i] * std::log2(w[i]);
  return h;
}

double entropy(const Pmf& p) { return entropy(p.data(), p.dim()); }

double binary_entropy(double x) {
  if (x < -kPmfTol || x > 1 + kPmfTol)
    throw std::invalid_argument("binary_entropy: argument out of [0,1]");
  if (x <= 0 || x >= 1) return 0;
  return -x * std::log2(x) - (1 - x) * std::log2(1 - x);
}

Pmf cyclic_shift(const Pmf& p, long k) {
  const long n = static_cast<long>(p.dim());
  const std::size_t r = static_cast<std::size_t>(((k % n) + n) % n);
  std::vector<double> out(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) out[(i + r) % p.dim()] = p[i];
  return Pmf(std::move(out));
}

Pmf apply_permutation(const Pmf& p, const std::vector<std::size_t>& perm) {
  if (perm.size() != p.dim())
    throw std::invalid_argument("apply_permutation: size mismatch");
  std::vector<double> out(p.dim(), -1.0);
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (perm[i] >= p.dim() || out[perm[i]] >= 0)
      throw std::invalid_argument("apply_permutation: not a permutation");
    out[perm[i]] = p[i];
  }
  return Pmf(std::move(out));
}

namespace {

// Solves target = a * anchor + sum_{j != excluded} c_j e_j for the candidate
// sub-simplex that omits vertex `excluded`; fails if any coefficient is
// meaningfully negative.
bool try_candidate(const Pmf& target, const Pmf& anchor, std::size_t excluded,
                   double& anchor_weight, std::vector<double>& coeff) {
  const std::size_t n = target.dim();
  double a;
  if (anchor[excluded] > 0) {
    a = target[excluded] / anchor[excluded];
  } else {
    if (target[excluded] > kPmfTol) return false;
    // anchor carries no mass at the excluded coordinate: take the largest
    // anchor weight that keeps every vertex coefficient non-negative.
    a = 1.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != excluded && anchor[j] > 0) a = std::min(a, target[j] / anchor[j]);
  }
  if (a < -kPmfTol || a > 1 + kPmfTol) return false;
  a = std::clamp(a, 0.0, 1.0);
  coeff.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == excluded) continue;
    const double c = target[j] - a * anchor[j];
    if (c < -10 * kPmfTol) return false;
    coeff[j] = std::max(c, 0.0);
  }
  anchor_weight = a;
  return true;
}

}  // namespace

SimplexDecomposition decompose(const Pmf& target, const Pmf& anchor) {
  if (target.dim() != anchor.dim())
    throw std::invalid_argument("decompose: dimension mismatch");
  const std::size_t n = target.dim();
  std::vector<double> coeff;
  for (std::size_t excluded = 0; excluded < n; ++excluded) {
    double a = 0;
    if (!try_candidate(target, anchor, excluded, a, coeff)) continue;
    SimplexDecomposition d;
    d.anchor_weight = a;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == excluded) continue;
      d.vertices.push_back(j);
      d.vertex_weights.push_back(coeff[j]);
    }
    return d;
  }
  throw std::logic_error("decompose: no containing sub-simplex found");
}

std::uint64_t simplex_grid_size(std::size_t dim, unsigned resolution) {
  // C(resolution + dim - 1, dim - 1)
  std::uint64_t r = 1;
  for (std::size_t i = 1; i < dim; ++i) {
    const std::uint64_t num = resolution + i;
    if (r > UINT64_MAX / num) return UINT64_MAX;
    r = r * num / i;
  }
  return r;
}

std::vector<Pmf> simplex_grid(std::size_t dim, unsigned resolution,
                              std::uint64_t max_points) {
  if (dim < 1 || resolution < 1)
    throw std::invalid_argument("simplex_grid: bad arguments");
  const std::uint64_t count = simplex_grid_size(dim, resolution);
  if (count > max_points)
    throw std::length_error("simplex_grid: " + std::to_string(count) +
                            " points exceed cap " + std::to_string(max_points));
  std::vector<Pmf> out;
  out.reserve(count);
  std::vector<unsigned> c(dim, 0);
  const double inv = 1.0 / resolution;
  auto emit = [&] {
    std::vector<double> w(dim);
    for (std::size_t i = 0; i < dim; ++i) w[i] = c[i] * inv;
    out.emplace_back(std::move(w));
  };
  // Enumerate compositions of `resolution` into dim parts, first part slowest.
  auto rec = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
    if (pos + 1 == dim) {
      c[pos] = remaining;
      emit();
      return;
    }
    for (unsigned k = 0; k <= remaining; ++k) {
      c[pos] = k;
      self(self, pos + 1, remaining - k);
    }
  };
  rec(rec, 0, resolution);
  return out;
}

}  // namespace wiretap
