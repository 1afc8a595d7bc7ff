#include "wiretap/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace wiretap {
namespace {

double fval(const WiretapChannel& w, double t, double mu) {
  const double px[2] = {1.0 - t, t};
  return f_mu(w, px, mu);
}

Pmf bin(double t) { return Pmf({1.0 - t, t}); }

std::uint64_t multisets(std::uint64_t options, std::uint64_t picks) {
  // C(options + picks - 1, picks), small arguments only.
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= picks; ++i) r = r * (options - 1 + i) / i;
  return r;
}

// Non-decreasing index tuples over 0..max_index.
bool next_multiset(std::vector<unsigned>& tup, unsigned max_index) {
  std::size_t pos = tup.size();
  while (pos > 0 && tup[pos - 1] == max_index) --pos;
  if (pos == 0) return false;
  const unsigned v = tup[pos - 1] + 1;
  for (std::size_t i = pos - 1; i < tup.size(); ++i) tup[i] = v;
  return true;
}

}  // namespace

BruteBinaryResult brute_binary(const WiretapChannel& w, double mu,
                               unsigned resolution) {
  if (w.input_dim() != 2)
    throw std::invalid_argument("brute_binary: binary input required");
  if (resolution < 1)
    throw std::invalid_argument("brute_binary: resolution must be positive");
  const std::uint64_t n = resolution + 1;
  const std::uint64_t total = n * (n + 1) / 2 * n;  // i <= j by symmetry
  if (total > kBruteBinaryCap)
    throw std::length_error("brute_binary: evaluation cap exceeded");

  std::vector<double> fmu_grid(n);
  for (std::uint64_t i = 0; i < n; ++i)
    fmu_grid[i] = fval(w, static_cast<double>(i) / resolution, mu);

  BruteBinaryResult res;
  res.value = -1e300;
  std::uint64_t bi = 0, bj = 0, ba = 0;
  double max_delta = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const double t1 = static_cast<double>(i) / resolution;
    for (std::uint64_t j = i; j < n; ++j) {
      const double t2 = static_cast<double>(j) / resolution;
      double prev = 0;
      for (std::uint64_t a = 0; a < n; ++a) {
        const double lambda = static_cast<double>(a) / resolution;
        const double m = lambda * t1 + (1 - lambda) * t2;
        const double v =
            fval(w, m, 0.0) - lambda * fmu_grid[i] - (1 - lambda) * fmu_grid[j];
        if (v > res.value) {
          res.value = v;
          bi = i;
          bj = j;
          ba = a;
        }
        if (a > 0) max_delta = std::max(max_delta, std::abs(v - prev));
        prev = v;
      }
    }
  }
  res.evaluated = total;
  res.lipschitz = max_delta * resolution;

  const auto at = [&](double lambda, double t1, double t2) {
    return fval(w, lambda * t1 + (1 - lambda) * t2, 0.0) -
           lambda * fval(w, t1, mu) - (1 - lambda) * fval(w, t2, mu);
  };
  const double step = 1.0 / resolution;
  const double bt1 = static_cast<double>(bi) / resolution;
  const double bt2 = static_cast<double>(bj) / resolution;
  const double bl = static_cast<double>(ba) / resolution;
  double bound = 0;
  for (double d : {-step, step}) {
    if (bl + d >= 0 && bl + d <= 1)
      bound = std::max(bound, res.value - at(bl + d, bt1, bt2));
    if (bt1 + d >= 0 && bt1 + d <= 1)
      bound = std::max(bound, res.value - at(bl, bt1 + d, bt2));
    if (bt2 + d >= 0 && bt2 + d <= 1)
      bound = std::max(bound, res.value - at(bl, bt1, bt2 + d));
  }
  res.error_bound = bound;

  res.config.kind = ((bi == 0 || bi == resolution) &&
                     (bj == 0 || bj == resolution))
                        ? ConfigKind::trivial
                        : ConfigKind::interior_tangent;
  res.config.lambda = bl;
  res.config.p1 = bt1;
  res.config.p2 = bt2;
  res.config.mixture = bl * bt1 + (1 - bl) * bt2;
  res.config.objective = res.value;
  res.config.residual = 0;
  return res;
}

BruteChainResult brute_chain(const WiretapChannel& w, double mu,
                             std::size_t card_u, std::size_t card_v,
                             unsigned resolution) {
  if (w.input_dim() != 2)
    throw std::invalid_argument("brute_chain: binary input required");
  if (card_u < 1 || card_u > 4 || card_v < 1 || card_v > 4)
    throw std::invalid_argument("brute_chain: cardinalities must be 1..4");
  if (resolution < 1 || resolution > 10)
    throw std::invalid_argument("brute_chain: resolution must be 1..10");

  const std::vector<Pmf> rgrid = simplex_grid(card_v, resolution);
  const std::vector<Pmf> pugrid = simplex_grid(card_u, resolution);
  const std::uint64_t n_r = rgrid.size();
  const std::uint64_t n_cfg = multisets(resolution + 1, card_v);
  const std::uint64_t n_tup = multisets(n_r, card_u);
  const std::uint64_t estimate =
      mu == 0 ? n_cfg * n_r : n_cfg * n_tup * pugrid.size();
  if (estimate > kBruteChainCap)
    throw std::length_error("brute_chain: evaluation cap exceeded");

  const std::size_t ny = w.main.out_dim(), nz = w.eavesdropper.out_dim();
  std::vector<std::vector<double>> oy(resolution + 1), oz(resolution + 1);
  std::vector<double> hy(resolution + 1), hz(resolution + 1);
  for (unsigned k = 0; k <= resolution; ++k) {
    const Pmf row = bin(static_cast<double>(k) / resolution);
    oy[k].resize(ny);
    oz[k].resize(nz);
    w.main.output(row.data(), oy[k].data());
    w.eavesdropper.output(row.data(), oz[k].data());
    hy[k] = entropy(oy[k].data(), ny);
    hz[k] = entropy(oz[k].data(), nz);
  }

  BruteChainResult res;
  res.value = -1e300;
  std::vector<unsigned> best_cfg, best_tup;
  std::size_t best_pu = 0;
  std::uint64_t best_single = 0;  // mu == 0 path: winning V marginal
  double max_delta = 0;

  // Scratch reused across configurations.
  std::vector<double> r_oy(n_r * ny), r_s(n_r), r_g(n_r), mix(ny);

  std::vector<unsigned> cfg(card_v, 0);
  do {
    for (std::uint64_t r = 0; r < n_r; ++r) {
      const Pmf& pv = rgrid[r];
      double sy = 0, sz = 0;
      std::fill(mix.begin(), mix.end(), 0.0);
      std::vector<double> mz(nz, 0.0);
      for (std::size_t v = 0; v < card_v; ++v) {
        const unsigned k = cfg[v];
        for (std::size_t y = 0; y < ny; ++y) mix[y] += pv[v] * oy[k][y];
        for (std::size_t z = 0; z < nz; ++z) mz[z] += pv[v] * oz[k][z];
        sy += pv[v] * hy[k];
        sz += pv[v] * hz[k];
      }
      std::copy(mix.begin(), mix.end(), r_oy.begin() + r * ny);
      r_s[r] = sy;
      r_g[r] = (entropy(mix.data(), ny) - sy) -
               (entropy(mz.data(), nz) - sz);
    }

    if (mu == 0) {
      // The split terms are linear in p(u), so a point mass on the best V
      // marginal is always optimal.
      for (std::uint64_t r = 0; r < n_r; ++r) {
        ++res.evaluated;
        if (r_g[r] > res.value) {
          res.value = r_g[r];
          best_cfg = cfg;
          best_single = r;
        }
      }
      continue;
    }

    std::vector<unsigned> tup(card_u, 0);
    do {
      double prev = 0;
      for (std::size_t a = 0; a < pugrid.size(); ++a) {
        const Pmf& pu = pugrid[a];
        double sbar = 0, gbar = 0;
        std::fill(mix.begin(), mix.end(), 0.0);
        for (std::size_t u = 0; u < card_u; ++u) {
          const double wgt = pu[u];
          if (wgt == 0) continue;
          const double* o = &r_oy[tup[u] * ny];
          for (std::size_t y = 0; y < ny; ++y) mix[y] += wgt * o[y];
          sbar += wgt * r_s[tup[u]];
          gbar += wgt * r_g[tup[u]];
        }
        const double v = mu * (entropy(mix.data(), ny) - sbar) + gbar;
        ++res.evaluated;
        if (v > res.value) {
          res.value = v;
          best_cfg = cfg;
          best_tup = tup;
          best_pu = a;
        }
        if (a > 0) max_delta = std::max(max_delta, std::abs(v - prev));
        prev = v;
      }
    } while (next_multiset(tup, static_cast<unsigned>(n_r - 1)));
  } while (next_multiset(cfg, resolution));

  std::vector<Pmf> x_rows;
  for (unsigned k : best_cfg)
    x_rows.push_back(bin(static_cast<double>(k) / resolution));
  Pmf pu = mu == 0 ? Pmf::basis(card_u, 0) : pugrid[best_pu];
  std::vector<std::vector<double>> pv_rows;
  for (std::size_t u = 0; u < card_u; ++u) {
    const Pmf& r = mu == 0 ? rgrid[best_single] : rgrid[best_tup[u]];
    pv_rows.push_back(r.weights());
  }
  res.chain = AuxiliaryChain::split(pu, pv_rows, x_rows);
  res.lipschitz = max_delta * resolution;

  // One-step probe around the winner; grid neighbors cannot exceed it, so
  // the drops measure the local cell size of the objective.
  const double check = evaluate_objective(w, res.chain, mu);
  double bound = std::abs(check - res.value);
  const auto probe = [&](const AuxiliaryChain& c) {
    bound = std::max(bound, res.value - evaluate_objective(w, c, mu));
  };
  const double step = 1.0 / resolution;
  for (std::size_t v = 0; v < card_v; ++v) {
    for (double d : {-step, step}) {
      const double t = x_rows[v][1] + d;
      if (t < 0 || t > 1) continue;
      std::vector<Pmf> rows = x_rows;
      rows[v] = bin(t);
      probe(AuxiliaryChain::split(pu, pv_rows, rows));
    }
  }
  for (std::size_t u = 0; u < card_u; ++u) {
    for (std::size_t i = 0; i < card_v; ++i)
      for (std::size_t j = 0; j < card_v; ++j) {
        if (i == j || pv_rows[u][i] < step - 1e-12) continue;
        auto rows = pv_rows;
        rows[u][i] -= step;
        rows[u][j] += step;
        probe(AuxiliaryChain::split(pu, rows, x_rows));
      }
  }
  res.error_bound = bound;
  return res;
}

}  // namespace wiretap
