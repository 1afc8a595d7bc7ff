#include "wiretap/region.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include "wiretap/binary.hpp"
#include "wiretap/classify.hpp"
#include "wiretap/optimize.hpp"

namespace wiretap {
namespace {

using Perms = std::vector<std::vector<std::size_t>>;

Perms cyclic_perms(std::size_t n) {
  Perms g(n, std::vector<std::size_t>(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) g[k][i] = (i + k) % n;
  return g;
}

double scaled_tol(double mu) { return kNumericTol * (1.0 + mu); }

std::vector<Pmf> identity_rows(std::size_t n) {
  std::vector<Pmf> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(Pmf::basis(n, i));
  return rows;
}

std::vector<Pmf> orbit(const Pmf& p, const Perms& g) {
  std::vector<Pmf> rows;
  for (const auto& perm : g) rows.push_back(apply_permutation(p, perm));
  return rows;
}

std::vector<double> pack_joint(const std::vector<double>& lambda,
                               const std::vector<Pmf>& rows) {
  std::vector<double> x(lambda);
  for (const auto& r : rows)
    x.insert(x.end(), r.weights().begin(), r.weights().end());
  return x;
}

// Keep only rows with non-negligible weight; the reported chain is tidier and
// tie-breaking prefers small V supports.
void prune_joint(std::vector<double>& lambda, std::vector<Pmf>& rows) {
  std::vector<double> lam;
  std::vector<Pmf> kept;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (lambda[i] > 1e-12) {
      lam.push_back(lambda[i]);
      kept.push_back(rows[i]);
    }
  }
  if (lam.empty()) {
    lam.push_back(1.0);
    kept.push_back(rows[0]);
  }
  double s = 0;
  for (double v : lam) s += v;
  for (double& v : lam) v /= s;
  lambda = lam;
  rows = kept;
}

Pmf bin(double t) { return Pmf({1.0 - t, t}); }

// Lifts a binary tangent configuration to a chain through the input-flip
// symmetry: two uniform U branches carrying the configuration and its
// reflection. The induced input is uniform, so the chain supports
// mu C_B + objective.
AuxiliaryChain assemble_binary(const TangentConfig& cfg) {
  if (cfg.kind == ConfigKind::trivial) {
    if (cfg.objective > kOptTol) {
      // V = X, with U splitting across the translates of the maximizer.
      const double m = cfg.mixture;
      return AuxiliaryChain::split(
          Pmf::uniform(2), {bin(m).weights(), bin(1 - m).weights()},
          identity_rows(2));
    }
    // Nothing to gain from prefixing: full split reaching (C_B, 0).
    return AuxiliaryChain::split(Pmf::uniform(2), {{1, 0}, {0, 1}},
                                 identity_rows(2));
  }
  const double l = cfg.lambda;
  return AuxiliaryChain::split(
      Pmf::uniform(2), {{l, 1 - l, 0, 0}, {0, 0, l, 1 - l}},
      {bin(cfg.p1), bin(cfg.p2), bin(1 - cfg.p1), bin(1 - cfg.p2)});
}

RegionPoint make_point(const WiretapChannel& w, const AuxiliaryChain& chain,
                       double mu, double expected_support) {
  const ObjectiveBreakdown parts = evaluate_objective_parts(w, chain, mu);
  if (std::abs(parts.value - expected_support) > scaled_tol(mu) + kOptTol)
    throw std::logic_error("trace_region: chain misses its supporting value");
  RegionPoint pt;
  pt.mu = mu;
  pt.rate = parts.rate;
  pt.equivocation = std::max(0.0, std::min(parts.rate, parts.advantage));
  pt.chain = chain;
  return pt;
}

void append_point(std::vector<RegionPoint>& points, RegionPoint pt) {
  if (!points.empty()) {
    const RegionPoint& last = points.back();
    if (std::abs(last.rate - pt.rate) <= 1e-9 &&
        std::abs(last.equivocation - pt.equivocation) <= 1e-9)
      points.pop_back();  // keep the freshly constructed point
  }
  points.push_back(std::move(pt));
}

}  // namespace

AuxiliarySolution auxiliary_problem(const WiretapChannel& w, double mu,
                                    const SolverOptions& opts) {
  if (mu < 0) throw std::invalid_argument("auxiliary_problem: mu must be >= 0");
  const std::size_t n = w.input_dim();
  if (n > 16)
    throw std::invalid_argument("auxiliary_problem: input alphabet too large");
  const std::vector<std::size_t> dims(n + 1, n);

  // Pure (no shared scratch) so restarts can run on worker threads.
  const auto objective = [&w, mu, n](const std::vector<double>& x) {
    const double* lam = x.data();
    double mix[16] = {0};
    double penalty = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double* r = x.data() + (i + 1) * n;
      for (std::size_t j = 0; j < n; ++j) mix[j] += lam[i] * r[j];
      if (lam[i] > 1e-15) penalty += lam[i] * f_mu(w, r, mu);
    }
    return f_mu(w, mix, 0.0) - penalty;
  };

  const ExtremeValue fmax = maximize_f(w);
  const ExtremeValue fmin_mu = minimize_f(w, mu);
  const Perms group = input_translation_group(w).value_or(cyclic_perms(n));

  std::vector<std::vector<double>> seeds;
  // V = X with the f-maximizing marginal: value max f, the floor every
  // candidate must beat.
  seeds.push_back(pack_joint(fmax.input.weights(), identity_rows(n)));
  // Uniform weights over the group orbit of argmin f_mu.
  seeds.push_back(
      pack_joint(std::vector<double>(n, 1.0 / n), orbit(fmin_mu.input, group)));
  // Single active row at the f-maximizing input.
  {
    std::vector<double> lam(n, 0.0);
    lam[0] = 1.0;
    std::vector<Pmf> rows(n, Pmf::uniform(n));
    rows[0] = fmax.input;
    seeds.push_back(pack_joint(lam, rows));
  }
  seeds.push_back(pack_joint(Pmf::uniform(n).weights(), identity_rows(n)));

  std::mt19937_64 rng(opts.seed);
  const std::size_t target =
      std::max<std::size_t>(opts.starts > 0 ? opts.starts : 1, seeds.size());
  // Coarse scan: (lambda, p1, p2) grid for binary inputs, random joints
  // otherwise; the best survivors become restart seeds.
  {
    std::vector<std::pair<double, std::vector<double>>> pool;
    if (n == 2) {
      const unsigned res = std::max(2u, opts.coarse);
      for (unsigned a = 0; a <= res; ++a)
        for (unsigned i = 0; i <= res; ++i)
          for (unsigned j = i; j <= res; ++j) {
            const double lam = static_cast<double>(a) / res;
            std::vector<double> x =
                pack_joint({lam, 1 - lam}, {bin(static_cast<double>(i) / res),
                                            bin(static_cast<double>(j) / res)});
            pool.emplace_back(objective(x), std::move(x));
          }
    } else {
      for (int k = 0; k < 4096; ++k) {
        std::vector<Pmf> rows;
        for (std::size_t i = 0; i < n; ++i) rows.push_back(random_pmf(n, rng));
        std::vector<double> x = pack_joint(random_pmf(n, rng).weights(), rows);
        pool.emplace_back(objective(x), std::move(x));
      }
    }
    std::sort(pool.begin(), pool.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t i = 0; i < pool.size() && i < 16 && seeds.size() < target;
         ++i)
      seeds.push_back(std::move(pool[i].second));
  }
  while (seeds.size() < target) {
    std::vector<Pmf> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(random_pmf(n, rng));
    seeds.push_back(pack_joint(random_pmf(n, rng).weights(), rows));
  }

  AuxiliarySolution sol;
  sol.starts = static_cast<int>(seeds.size());
  std::vector<double> polished(seeds.size());
  const unsigned workers =
      std::max(1u, std::min<unsigned>(opts.threads,
                                      static_cast<unsigned>(seeds.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < seeds.size(); ++i)
      polished[i] = ascend_product_simplex(dims, seeds[i], objective);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < seeds.size(); i += workers)
          polished[i] = ascend_product_simplex(dims, seeds[i], objective);
      });
    for (auto& th : pool) th.join();
  }
  double best = -1e300, worst = 1e300;
  std::vector<double> best_x;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    worst = std::min(worst, polished[i]);
    if (polished[i] > best) {
      best = polished[i];
      best_x = seeds[i];
    }
  }
  sol.raw_value = best;
  sol.spread = best - worst;
  sol.value = std::max(0.0, best);

  if (best <= kOptTol) {
    sol.clamped = true;
    sol.chain = AuxiliaryChain::trivial(fmax.input);
    return sol;
  }
  std::vector<double> lambda(best_x.begin(), best_x.begin() + n);
  std::vector<Pmf> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const double* r = best_x.data() + (i + 1) * n;
    rows.push_back(Pmf(std::vector<double>(r, r + n)));
  }
  prune_joint(lambda, rows);
  sol.chain = AuxiliaryChain::prefix_only(Pmf(lambda), rows);
  return sol;
}

std::vector<double> default_mu_grid() {
  std::vector<double> grid{0.0};
  const double lo = 1e-3, hi = 32.0;
  const int count = 64;
  for (int i = 0; i < count; ++i)
    grid.push_back(lo *
                   std::pow(hi / lo, static_cast<double>(i) / (count - 1)));
  return grid;
}

RegionBoundary trace_more_capable(const WiretapChannel& w,
                                  const std::vector<double>& mu_grid,
                                  const SolverOptions& opts) {
  if (!is_more_capable(w))
    throw std::invalid_argument(
        "trace_more_capable: more capable certificate required");
  const std::size_t n = w.input_dim();
  const ExtremeValue fmax = maximize_f(w);
  const Perms group = input_translation_group(w).value_or(cyclic_perms(n));
  const std::vector<std::size_t> dims(n + 1, n);

  RegionBoundary boundary;
  boundary.cb = w.cb();
  boundary.ce = w.ce();
  boundary.secrecy_capacity = std::max(0.0, fmax.value);

  if (n > 16)
    throw std::invalid_argument("trace_more_capable: input alphabet too large");
  std::mt19937_64 rng(opts.seed);
  std::vector<double> warm;
  for (double mu : mu_grid) {
    const auto objective = [&w, mu, n](const std::vector<double>& x) {
      const double* pu = x.data();
      double induced[16] = {0};
      double adv = 0;
      for (std::size_t u = 0; u < n; ++u) {
        const double* r = x.data() + (u + 1) * n;
        for (std::size_t j = 0; j < n; ++j) induced[j] += pu[u] * r[j];
        if (pu[u] > 1e-15) adv += pu[u] * f_mu(w, r, 0.0);
      }
      return mu * mutual_information(w.main, induced) + adv;
    };

    std::vector<std::vector<double>> seeds;
    seeds.push_back(
        pack_joint(std::vector<double>(n, 1.0 / n), orbit(fmax.input, group)));
    {
      std::vector<double> lam(n, 0.0);
      lam[0] = 1.0;
      seeds.push_back(pack_joint(lam, std::vector<Pmf>(n, fmax.input)));
      seeds.push_back(pack_joint(lam, std::vector<Pmf>(n, Pmf::uniform(n))));
    }
    if (!warm.empty()) seeds.push_back(warm);
    while (seeds.size() < 12) {
      std::vector<Pmf> rows;
      for (std::size_t u = 0; u < n; ++u) rows.push_back(random_pmf(n, rng));
      seeds.push_back(pack_joint(random_pmf(n, rng).weights(), rows));
    }

    double best = -1e300;
    std::vector<double> best_x;
    for (auto& x : seeds) {
      const double v = ascend_product_simplex(dims, x, objective);
      if (v > best) {
        best = v;
        best_x = x;
      }
    }
    warm = best_x;

    Pmf pu(std::vector<double>(best_x.begin(), best_x.begin() + n));
    std::vector<std::vector<double>> pv_rows;
    for (std::size_t u = 0; u < n; ++u) {
      const double* r = best_x.data() + (u + 1) * n;
      pv_rows.emplace_back(r, r + n);
    }
    const AuxiliaryChain chain =
        AuxiliaryChain::split(pu, pv_rows, identity_rows(n));
    append_point(boundary.points, make_point(w, chain, mu, best));
  }
  return boundary;
}

AuxiliaryChain construct_optimal_uv(const WiretapChannel& w, double mu,
                                    const SolverOptions& opts) {
  const auto group = input_translation_group(w);
  if (!group)
    throw std::invalid_argument(
        "construct_optimal_uv: input symmetry certificate required");
  const std::size_t n = w.input_dim();
  const AuxiliarySolution aux = auxiliary_problem(w, mu, opts);

  std::vector<double> lambda;
  std::vector<Pmf> base_rows;
  if (aux.clamped) {
    lambda = {1.0};
    base_rows = {Pmf::basis(n, 0)};
  } else {
    lambda = aux.chain.induced_v().weights();
    for (std::size_t v = 0; v < aux.chain.card_v(); ++v) {
      const double* r = aux.chain.px_given_v.row_data(v);
      base_rows.push_back(Pmf(std::vector<double>(r, r + n)));
    }
  }
  const std::size_t m = lambda.size();

  // Uniform U over the group; branch u carries the auxiliary solution with
  // its rows translated by group element u, in V block u.
  std::vector<std::vector<double>> pv_rows(n, std::vector<double>(n * m, 0.0));
  std::vector<Pmf> x_rows;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t i = 0; i < m; ++i) pv_rows[u][u * m + i] = lambda[i];
    for (std::size_t i = 0; i < m; ++i)
      x_rows.push_back(apply_permutation(base_rows[i], (*group)[u]));
  }
  AuxiliaryChain chain = AuxiliaryChain::split(Pmf::uniform(n), pv_rows, x_rows);

  const Pmf induced = chain.induced_x();
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(induced[i] - 1.0 / n) > kNumericTol)
      throw std::logic_error(
          "construct_optimal_uv: construction must induce the uniform input");
  const double expected = mu * mutual_information(w.main, induced) +
                          (aux.clamped ? 0.0 : aux.value);
  if (std::abs(evaluate_objective(w, chain, mu) - expected) > scaled_tol(mu))
    throw std::logic_error(
        "construct_optimal_uv: assembled chain misses the auxiliary value");
  return chain;
}

AuxiliaryChain dominant_shortcut(const WiretapChannel& w, double mu) {
  const auto group = input_translation_group(w);
  if (!group)
    throw std::invalid_argument(
        "dominant_shortcut: input symmetry certificate required");
  const std::size_t n = w.input_dim();
  const Pmf uniform = Pmf::uniform(n);
  const ExtremeValue fmax = maximize_f(w);
  if (f_mu(w, uniform, 0.0) < fmax.value - kClassifyTol)
    throw std::invalid_argument(
        "dominant_shortcut: uniform input must maximize f");

  const ExtremeValue fmin_mu = minimize_f(w, mu);
  AuxiliaryChain chain =
      AuxiliaryChain::prefix_only(uniform, orbit(fmin_mu.input, *group));
  const double expected = f_mu(w, uniform, mu) - f_mu(w, fmin_mu.input, mu);
  if (std::abs(evaluate_objective(w, chain, mu) - expected) > scaled_tol(mu))
    throw std::logic_error("dominant_shortcut: shift chain misses its value");
  return chain;
}

AuxiliaryChain corner_cb_cs(const WiretapChannel& w) {
  if (!is_more_capable(w))
    throw std::invalid_argument(
        "corner_cb_cs: more capable certificate required");
  const auto group = input_translation_group(w);
  if (!group)
    throw std::invalid_argument(
        "corner_cb_cs: input symmetry certificate required");
  const std::size_t n = w.input_dim();
  const Pmf uniform = Pmf::uniform(n);
  const ExtremeValue fmax = maximize_f(w);
  if (f_mu(w, uniform, 0.0) >= fmax.value - kClassifyTol) {
    // The uniform input is optimal for both coordinates at once.
    return AuxiliaryChain::trivial(uniform);
  }

  std::vector<std::vector<double>> pv_rows;
  for (const Pmf& row : orbit(fmax.input, *group))
    pv_rows.push_back(row.weights());
  AuxiliaryChain chain =
      AuxiliaryChain::split(uniform, pv_rows, identity_rows(n));

  const ObjectiveBreakdown parts = evaluate_objective_parts(w, chain, 0.0);
  const Pmf induced = chain.induced_x();
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(induced[i] - 1.0 / n) > kNumericTol)
      throw std::logic_error("corner_cb_cs: induced input must be uniform");
  if (std::abs(parts.advantage - fmax.value) > kNumericTol)
    throw std::logic_error("corner_cb_cs: corner equivocation mismatch");
  return chain;
}

SecrecyResult secrecy_capacity(const WiretapChannel& w,
                               const SolverOptions& opts) {
  const ExtremeValue fmax = maximize_f(w);
  const ExtremeValue fmin = minimize_f(w);
  const auto group = input_translation_group(w);
  const double funiform = f_mu(w, Pmf::uniform(w.input_dim()), 0.0);

  SecrecyResult result;
  if (group && funiform >= fmax.value - kClassifyTol) {
    result.value = fmax.value - fmin.value;
    result.chain = dominant_shortcut(w, 0.0);
    result.method = "dominant-shortcut";
  } else if (is_more_capable(w)) {
    result.value = std::max(0.0, fmax.value);
    result.chain = AuxiliaryChain::trivial(fmax.input);
    result.method = "more-capable";
  } else {
    AuxiliarySolution aux = auxiliary_problem(w, 0.0, opts);
    result.value = aux.value;
    result.chain = aux.chain;
    result.method = "auxiliary-search";
  }
  if (result.value > fmax.value - fmin.value + kOptTol)
    throw std::logic_error("secrecy_capacity: difference bound violated");
  return result;
}

RegionBoundary trace_region(const WiretapChannel& w,
                            const std::vector<double>& mu_grid,
                            const SolverOptions& opts) {
  if (mu_grid.empty())
    throw std::invalid_argument("trace_region: empty mu grid");
  for (std::size_t i = 0; i < mu_grid.size(); ++i)
    if (mu_grid[i] < 0 || (i > 0 && mu_grid[i] <= mu_grid[i - 1]))
      throw std::invalid_argument("trace_region: grid must ascend from >= 0");

  const std::size_t n = w.input_dim();
  const auto group = input_translation_group(w);
  const ExtremeValue fmax = maximize_f(w);

  if (is_more_capable(w)) {
    RegionBoundary boundary = trace_more_capable(w, mu_grid, opts);
    if (n == 2 && group) boundary.mu_star = mu_star(w);
    if (group) {
      // Land exactly on (C_B, C_s).
      const AuxiliaryChain corner = corner_cb_cs(w);
      const double mu = mu_grid.back();
      append_point(boundary.points,
                   make_point(w, corner, mu, evaluate_objective(w, corner, mu)));
    }
    return boundary;
  }

  RegionBoundary boundary;
  boundary.cb = w.cb();
  boundary.ce = w.ce();
  boundary.secrecy_capacity = secrecy_capacity(w, opts).value;

  if (n == 2 && group) {
    const std::optional<double> ms = mu_star(w);
    boundary.mu_star = ms;
    std::vector<double> grid;
    for (double mu : mu_grid)
      if (!ms || mu <= *ms + 1e-12) grid.push_back(mu);
    if (ms && (grid.empty() || std::abs(grid.back() - *ms) > 1e-12))
      grid.push_back(*ms);

    const double cb_uniform = mutual_information(w.main, Pmf::uniform(2));
    for (double mu : grid) {
      const TangentConfig cfg = best_config(w, mu);
      const double aux =
          cfg.kind == ConfigKind::trivial && cfg.objective <= kOptTol
              ? 0.0
              : cfg.objective;
      append_point(boundary.points,
                   make_point(w, assemble_binary(cfg), mu,
                              mu * cb_uniform + aux));
    }
    const RegionPoint curve_end = boundary.points.back();

    // Right edge of the region: the split corner when prefixing still pays
    // there, then the (C_B, 0) foot.
    std::optional<RegionPoint> edge_top;
    if (fmax.value > kOptTol) {
      TangentConfig corner_cfg;
      corner_cfg.kind = ConfigKind::trivial;
      corner_cfg.mixture = fmax.input[1];
      corner_cfg.objective = fmax.value;
      const double mu = ms ? *ms : mu_grid.back();
      edge_top = make_point(w, assemble_binary(corner_cfg), mu,
                            mu * cb_uniform + fmax.value);
      append_point(boundary.points, *edge_top);
    }
    if (boundary.points.back().equivocation > 1e-12) {
      TangentConfig end_cfg;
      end_cfg.kind = ConfigKind::trivial;
      end_cfg.objective = 0.0;
      const double mu = ms ? std::max(*ms, mu_grid.back()) : mu_grid.back();
      RegionPoint foot =
          make_point(w, assemble_binary(end_cfg), mu, mu * cb_uniform);
      if (!edge_top) edge_top = foot;
      append_point(boundary.points, std::move(foot));
    }
    if (ms && edge_top && edge_top->rate - curve_end.rate > 1e-9)
      boundary.corner_segment = std::make_pair(curve_end, *edge_top);
    return boundary;
  }

  if (group) {
    for (double mu : mu_grid) {
      const AuxiliaryChain chain = construct_optimal_uv(w, mu, opts);
      append_point(boundary.points,
                   make_point(w, chain, mu, evaluate_objective(w, chain, mu)));
    }
    return boundary;
  }

  boundary.warnings.push_back(
      "no classification certificate: direct chain search fallback");
  const std::size_t m = n * n;
  std::vector<std::size_t> dims;
  dims.push_back(n);
  for (std::size_t u = 0; u < n; ++u) dims.push_back(m);
  for (std::size_t v = 0; v < m; ++v) dims.push_back(n);
  std::mt19937_64 rng(opts.seed);

  const auto unpack = [&](const std::vector<double>& x) {
    Pmf pu(std::vector<double>(x.begin(), x.begin() + n));
    std::vector<std::vector<double>> pv_rows;
    std::size_t off = n;
    for (std::size_t u = 0; u < n; ++u, off += m)
      pv_rows.emplace_back(x.begin() + off, x.begin() + off + m);
    std::vector<Pmf> x_rows;
    for (std::size_t v = 0; v < m; ++v, off += n)
      x_rows.push_back(
          Pmf(std::vector<double>(x.begin() + off, x.begin() + off + n)));
    return AuxiliaryChain::split(pu, pv_rows, x_rows);
  };

  for (double mu : mu_grid) {
    const auto objective = [&](const std::vector<double>& x) {
      return evaluate_objective(w, unpack(x), mu);
    };
    double best = -1e300;
    std::vector<double> best_x;
    for (int s = 0; s < 8; ++s) {
      std::vector<double> x(n, 1.0 / n);
      for (std::size_t u = 0; u < n; ++u) {
        const Pmf r = s == 0 ? Pmf::uniform(m) : random_pmf(m, rng);
        x.insert(x.end(), r.weights().begin(), r.weights().end());
      }
      for (std::size_t v = 0; v < m; ++v) {
        const Pmf r = s == 0 ? Pmf::basis(n, v % n) : random_pmf(n, rng);
        x.insert(x.end(), r.weights().begin(), r.weights().end());
      }
      const double val = ascend_product_simplex(dims, x, objective);
      if (val > best) {
        best = val;
        best_x = x;
      }
    }
    append_point(boundary.points, make_point(w, unpack(best_x), mu, best));
  }
  return boundary;
}

}  // namespace wiretap
