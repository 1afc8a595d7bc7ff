#pragma once

#include <optional>
#include <vector>

#include "wiretap/chain.hpp"
#include "wiretap/channel.hpp"
#include "wiretap/classify.hpp"

namespace wiretap {

// Residual tolerance for the chord/tangent optimality conditions.
inline constexpr double kTangentTol = 1e-6;
// Default curve sampling step.
inline constexpr double kCurveStep = 1e-4;

// Dense sampling of f and f_mu along the binary input simplex, parametrized
// by t = P(X = x1). Derivatives are centered finite differences with
// second-order one-sided stencils at the endpoints.
struct CurveSample {
  double mu = 0;
  std::vector<double> grid;
  std::vector<double> f;
  std::vector<double> fmu;
  std::vector<double> dfmu;
  std::vector<double> d2fmu;
};

CurveSample sample_curve(const WiretapChannel& w, double mu,
                         unsigned resolution = 10000);

enum class ConfigKind {
  trivial,             // (p1, p2) = (0, 1), mixture at a critical point of f
  boundary_left,       // chord anchored at t = 0, tangent at interior p2
  boundary_right,      // chord anchored at t = 1, tangent at interior p1
  interior_symmetric,  // p2 = 1 - p1, lambda = 1/2 (symmetric f_mu)
  interior_tangent,    // generic interior bitangent
};
const char* to_string(ConfigKind kind);

// Candidate maximizer of f(lambda p1 + (1-lambda) p2)
// - lambda f_mu(p1) - (1-lambda) f_mu(p2); lambda weights p1.
struct TangentConfig {
  ConfigKind kind = ConfigKind::trivial;
  double lambda = 1;
  double p1 = 0;
  double p2 = 1;
  double mixture = 0;
  double objective = 0;
  double residual = 0;  // worst applicable optimality-condition residual
};

// Every candidate satisfying the chord-slope condition (and tangency at
// interior endpoints) within kTangentTol, sorted by objective descending.
// The trivial (0, 1) candidates are always present.
std::vector<TangentConfig> find_configs(const WiretapChannel& w, double mu);

// Best candidate; ties within 1e-9 prefer boundary_left, boundary_right,
// interior_symmetric, interior_tangent, then trivial.
TangentConfig best_config(const WiretapChannel& w, double mu);

// Smallest mu at which the prefix advantage collapses: for channels whose
// eavesdropper dominates (max f <= tol), min{mu : f(uniform) <= min f_mu};
// when f takes both signs, min{mu : min f_mu >= 0}; 0 for more-capable
// channels. none when the condition is never reached (the boundary only
// approaches its corner asymptotically).
std::optional<double> mu_star(const WiretapChannel& w);

// The erasure-main display chain: two-state U, four-state V built from the
// best boundary-anchored configuration and its input-relabeled copy.
// Requires C_B <= C_E, a symmetry certificate, and mu <= mu_star.
AuxiliaryChain bec_bsc_chain(const WiretapChannel& w, double mu);

// Design formulas for the BSC-main / binary symmetric-erasure-eavesdropper
// family: the curvature ratio c, the crossover eps_star at which the
// advantage curve's curvature at t = 0 vanishes, and the edge slope of the
// advantage curve at eps_star.
struct BsecDesign {
  double curvature_ratio = 0;
  double eps_star = 0;
  double edge_slope = 0;
};
BsecDesign bsec_design(double p, double q);

// Classification plus curve-shape checks for a concrete bsc_bsec instance:
// analytic edge slope/curvature of f at t = 0, inflection count of f in
// (0, 0.5), and whether f peaks at the uniform input.
struct BsecVerification {
  ClassificationReport classification;
  double edge_slope = 0;
  double edge_curvature = 0;
  unsigned inflections = 0;
  bool max_at_uniform = false;
};
BsecVerification verify_bsec_instance(double p, double q, double eps);

}  // namespace wiretap
