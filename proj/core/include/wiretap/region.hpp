#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wiretap/chain.hpp"
#include "wiretap/channel.hpp"

namespace wiretap {

// Optimality slack used when comparing solver output against oracles; grid
// discretization dominates this.
inline constexpr double kOptTol = 1e-6;

struct SolverOptions {
  int starts = 32;
  std::uint64_t seed = 0x0B5E55;
  unsigned coarse = 20;   // per-axis resolution of the seeding grid
  unsigned threads = 1;   // parallel restarts in the auxiliary search
};

// Best found value of  max over (weights, rows) of
//   f(sum_i lambda_i p_i) - sum_i lambda_i f_mu(p_i),
// clamped at zero. raw_value keeps the unclamped optimum; spread is the gap
// between the best and worst polished restart, reported as a confidence
// signal for the non-concave search.
struct AuxiliarySolution {
  double value = 0;
  double raw_value = 0;
  AuxiliaryChain chain;
  bool clamped = false;
  int starts = 0;
  double spread = 0;
};

AuxiliarySolution auxiliary_problem(const WiretapChannel& w, double mu,
                                    const SolverOptions& opts = {});

struct RegionPoint {
  double mu = 0;
  double rate = 0;
  double equivocation = 0;
  AuxiliaryChain chain;
};

struct RegionBoundary {
  std::vector<RegionPoint> points;  // ascending mu
  std::optional<double> mu_star;
  // Endpoints of the straight stretch of slope mu_star, when one exists.
  std::optional<std::pair<RegionPoint, RegionPoint>> corner_segment;
  double secrecy_capacity = 0;
  double cb = 0;
  double ce = 0;
  std::vector<std::string> warnings;
};

// 0 plus 64 geometrically spaced slopes in [1e-3, 32].
std::vector<double> default_mu_grid();

// Rate-splitting-only sweep for more capable channels: per mu maximizes
// mu I(X;Y) + sum_u p(u) f(p(.|u)) over U -> X with |U| <= |X|.
RegionBoundary trace_more_capable(const WiretapChannel& w,
                                  const std::vector<double>& mu_grid,
                                  const SolverOptions& opts = {});

// Lifts the auxiliary solution of an input-symmetric channel to a full
// |U| = |X|, |V| = |X|^2 chain: uniform U, block-diagonal V weights, row
// blocks translated by the symmetry group. Induces the uniform input and
// attains mu C_B + auxiliary value exactly.
AuxiliaryChain construct_optimal_uv(const WiretapChannel& w, double mu,
                                    const SolverOptions& opts = {});

// When the uniform input already maximizes f, prefixing alone is optimal:
// V uniform over the group orbit of argmin f_mu. No splitting variable.
AuxiliaryChain dominant_shortcut(const WiretapChannel& w, double mu);

// Chain achieving the (C_B, C_s) corner of a more capable input-symmetric
// channel: uniform U over the orbit of argmax f, V = X.
AuxiliaryChain corner_cb_cs(const WiretapChannel& w);

struct SecrecyResult {
  double value = 0;
  AuxiliaryChain chain;
  std::string method;
};

SecrecyResult secrecy_capacity(const WiretapChannel& w,
                               const SolverOptions& opts = {});

// Upper-right boundary of the rate-equivocation region. Dispatches on the
// channel classification; channels with no usable certificate fall back to
// a direct chain search and record a warning.
RegionBoundary trace_region(const WiretapChannel& w,
                            const std::vector<double>& mu_grid,
                            const SolverOptions& opts = {});

}  // namespace wiretap
