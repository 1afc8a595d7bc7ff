#include "wiretap/binary.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace wiretap {
namespace {

constexpr double kFdStep = 1e-5;
constexpr unsigned kScanSteps = 2000;
constexpr double kRefineTol = 1e-10;

Pmf bin(double t) { return Pmf({1.0 - t, t}); }

double fval(const WiretapChannel& w, double t, double mu) {
  const double px[2] = {1.0 - t, t};
  return f_mu(w, px, mu);
}

// Centered difference away from the edges, degrading to one-sided there.
double slope_at(const WiretapChannel& w, double t, double mu) {
  const double lo = std::max(0.0, t - kFdStep);
  const double hi = std::min(1.0, t + kFdStep);
  return (fval(w, hi, mu) - fval(w, lo, mu)) / (hi - lo);
}

double bisect_root(const std::function<double(double)>& g, double lo,
                   double hi) {
  double glo = g(lo);
  for (int it = 0; it < 80 && hi - lo > kRefineTol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if ((gm < 0) == (glo < 0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

struct Scan {
  std::vector<double> t, f, fmu;
};

Scan scan_curve(const WiretapChannel& w, double mu) {
  Scan s;
  s.t.resize(kScanSteps + 1);
  s.f.resize(kScanSteps + 1);
  s.fmu.resize(kScanSteps + 1);
  for (unsigned i = 0; i <= kScanSteps; ++i) {
    s.t[i] = static_cast<double>(i) / kScanSteps;
    s.f[i] = fval(w, s.t[i], 0.0);
    s.fmu[i] = fval(w, s.t[i], mu);
  }
  return s;
}

// Roots of the finite-difference derivative of fn, bracketed on the scan
// grid and bisected to kRefineTol.
std::vector<double> critical_points(const WiretapChannel& w, double mu,
                                    const std::vector<double>& values) {
  std::vector<double> roots;
  const auto deriv = [&](double t) { return slope_at(w, t, mu); };
  for (unsigned i = 1; i + 2 <= kScanSteps; ++i) {
    const double dl = values[i + 1] - values[i];
    const double dr = values[i + 2] - values[i + 1];
    if ((dl > 0) != (dr > 0))
      roots.push_back(bisect_root(
          deriv, static_cast<double>(i) / kScanSteps,
          static_cast<double>(i + 2) / kScanSteps));
  }
  return roots;
}

// Mixture points m in (lo, hi) with f'(m) = slope (the chord condition).
std::vector<double> mixture_roots(const WiretapChannel& w, const Scan& s,
                                  double lo, double hi, double slope) {
  std::vector<double> out;
  const auto g = [&](double t) { return slope_at(w, t, 0.0) - slope; };
  unsigned i0 = static_cast<unsigned>(std::ceil(lo * kScanSteps));
  unsigned i1 = static_cast<unsigned>(std::floor(hi * kScanSteps));
  if (i1 > kScanSteps) i1 = kScanSteps;
  double prev_t = -1, prev_g = 0;
  for (unsigned i = i0; i + 1 <= i1; ++i) {
    const double td = (s.f[i + 1] - s.f[i]) * kScanSteps - slope;
    if (prev_t >= 0 && (td > 0) != (prev_g > 0)) {
      const double mid = static_cast<double>(i) / kScanSteps + 0.5 / kScanSteps;
      out.push_back(bisect_root(g, prev_t, mid));
    }
    prev_t = static_cast<double>(i) / kScanSteps + 0.5 / kScanSteps;
    prev_g = td;
  }
  return out;
}

int kind_priority(ConfigKind k) {
  switch (k) {
    case ConfigKind::boundary_left: return 0;
    case ConfigKind::boundary_right: return 1;
    case ConfigKind::interior_symmetric: return 2;
    case ConfigKind::interior_tangent: return 3;
    case ConfigKind::trivial: return 4;
  }
  return 5;
}

}  // namespace

const char* to_string(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::trivial: return "trivial";
    case ConfigKind::boundary_left: return "boundary-left";
    case ConfigKind::boundary_right: return "boundary-right";
    case ConfigKind::interior_symmetric: return "interior-symmetric";
    case ConfigKind::interior_tangent: return "interior-tangent";
  }
  return "unknown";
}

CurveSample sample_curve(const WiretapChannel& w, double mu,
                         unsigned resolution) {
  if (w.input_dim() != 2)
    throw std::invalid_argument("sample_curve: binary input required");
  if (resolution < 4)
    throw std::invalid_argument("sample_curve: resolution too small");
  CurveSample s;
  s.mu = mu;
  const std::size_t n = resolution + 1;
  const double h = 1.0 / resolution;
  s.grid.resize(n);
  s.f.resize(n);
  s.fmu.resize(n);
  s.dfmu.resize(n);
  s.d2fmu.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.grid[i] = static_cast<double>(i) / resolution;
    s.f[i] = fval(w, s.grid[i], 0.0);
    s.fmu[i] = fval(w, s.grid[i], mu);
  }
  const auto& g = s.fmu;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    s.dfmu[i] = (g[i + 1] - g[i - 1]) / (2 * h);
    s.d2fmu[i] = (g[i + 1] - 2 * g[i] + g[i - 1]) / (h * h);
  }
  s.dfmu[0] = (-3 * g[0] + 4 * g[1] - g[2]) / (2 * h);
  s.dfmu[n - 1] = (3 * g[n - 1] - 4 * g[n - 2] + g[n - 3]) / (2 * h);
  s.d2fmu[0] = (2 * g[0] - 5 * g[1] + 4 * g[2] - g[3]) / (h * h);
  s.d2fmu[n - 1] =
      (2 * g[n - 1] - 5 * g[n - 2] + 4 * g[n - 3] - g[n - 4]) / (h * h);
  return s;
}

std::vector<TangentConfig> find_configs(const WiretapChannel& w, double mu) {
  if (w.input_dim() != 2)
    throw std::invalid_argument("find_configs: binary input required");
  const Scan s = scan_curve(w, mu);
  std::vector<TangentConfig> out;

  const auto objective = [&](double lambda, double p1, double p2) {
    const double m = lambda * p1 + (1 - lambda) * p2;
    return fval(w, m, 0.0) - lambda * fval(w, p1, mu) -
           (1 - lambda) * fval(w, p2, mu);
  };
  const auto push = [&](TangentConfig c) {
    if (c.lambda < -1e-9 || c.lambda > 1 + 1e-9) return;
    c.lambda = std::clamp(c.lambda, 0.0, 1.0);
    if (c.residual > kTangentTol) return;
    for (const TangentConfig& e : out)
      if (std::abs(e.p1 - c.p1) < 2e-6 && std::abs(e.p2 - c.p2) < 2e-6 &&
          std::abs(e.lambda - c.lambda) < 2e-6)
        return;
    out.push_back(c);
  };

  // Trivial candidates: vertices of the simplex as (p1, p2) = (0, 1) with
  // the mixture at a critical point of f (chord slope zero), plus the two
  // degenerate endpoint mixtures.
  for (double m : {0.0, 1.0})
    push({ConfigKind::trivial, 1 - m, 0, 1, m, objective(1 - m, 0, 1), 0});
  for (double m : critical_points(w, 0.0, s.f))
    push({ConfigKind::trivial, 1 - m, 0, 1, m, objective(1 - m, 0, 1),
          std::abs(slope_at(w, m, 0.0))});

  // Boundary-anchored: chord from an endpoint of the curve, tangent to f_mu
  // at an interior point; the anchored endpoint needs no tangency.
  for (double anchor : {0.0, 1.0}) {
    const auto tangency = [&](double t) {
      return slope_at(w, t, mu) * (t - anchor) - fval(w, t, mu);
    };
    double prev_t = -1, prev_g = 0;
    for (unsigned i = 1; i + 1 <= kScanSteps; ++i) {
      const double t = s.t[i];
      const double gt =
          (s.fmu[i + 1] - s.fmu[i - 1]) * (kScanSteps / 2.0) * (t - anchor) -
          s.fmu[i];
      if (prev_t > 0 && (gt > 0) != (prev_g > 0)) {
        const double tp = bisect_root(tangency, prev_t, t);
        const double slope = fval(w, tp, mu) / (tp - anchor);
        const double lo = std::min(anchor, tp), hi = std::max(anchor, tp);
        for (double m : mixture_roots(w, s, lo, hi, slope)) {
          TangentConfig c;
          if (anchor == 0.0) {
            c.kind = ConfigKind::boundary_left;
            c.p1 = 0;
            c.p2 = tp;
            c.lambda = 1 - m / tp;
          } else {
            c.kind = ConfigKind::boundary_right;
            c.p1 = tp;
            c.p2 = 1;
            c.lambda = (1 - m) / (1 - tp);
          }
          c.mixture = m;
          c.objective = objective(c.lambda, c.p1, c.p2);
          c.residual = std::max(std::abs(slope_at(w, m, 0.0) - slope),
                                std::abs(slope_at(w, tp, mu) - slope));
          push(c);
        }
      }
      prev_t = t;
      prev_g = gt;
    }
  }

  // Reflection-symmetric f_mu admits the symmetric pair configuration:
  // tangency at a critical point and its mirror image, mixture at 1/2.
  double asym = 0;
  for (unsigned i = 0; i <= kScanSteps; ++i)
    asym = std::max(asym, std::abs(s.fmu[i] - s.fmu[kScanSteps - i]));
  if (asym <= 1e-9) {
    for (double p1 : critical_points(w, mu, s.fmu)) {
      if (p1 >= 0.5 - 1e-6) continue;
      TangentConfig c;
      c.kind = ConfigKind::interior_symmetric;
      c.lambda = 0.5;
      c.p1 = p1;
      c.p2 = 1 - p1;
      c.mixture = 0.5;
      c.objective = objective(0.5, p1, 1 - p1);
      c.residual = std::max({std::abs(slope_at(w, 0.5, 0.0)),
                             std::abs(slope_at(w, p1, mu)),
                             std::abs(slope_at(w, 1 - p1, mu))});
      push(c);
    }
  }

  // Generic interior bitangents: coarse pair scan, then local refinement of
  // the two tangency residuals.
  const unsigned coarse = 200;
  const auto residual2 = [&](double a, double b) {
    const double sl = (fval(w, b, mu) - fval(w, a, mu)) / (b - a);
    const double r1 = slope_at(w, a, mu) - sl;
    const double r2 = slope_at(w, b, mu) - sl;
    return r1 * r1 + r2 * r2;
  };
  for (unsigned i = 1; i < coarse; ++i) {
    for (unsigned j = i + 4; j < coarse; ++j) {
      double a = static_cast<double>(i) / coarse;
      double b = static_cast<double>(j) / coarse;
      if (residual2(a, b) > 2.5e-3) continue;
      double step = 1.0 / coarse, best = residual2(a, b);
      while (step > kRefineTol) {
        bool moved = false;
        for (int axis = 0; axis < 2; ++axis)
          for (double dir : {1.0, -1.0}) {
            double na = a + (axis == 0 ? dir * step : 0);
            double nb = b + (axis == 1 ? dir * step : 0);
            na = std::clamp(na, 1e-4, 1 - 1e-4);
            nb = std::clamp(nb, 1e-4, 1 - 1e-4);
            if (nb - na < 1e-4) continue;
            const double v = residual2(na, nb);
            if (v < best - 1e-18) {
              a = na;
              b = nb;
              best = v;
              moved = true;
            }
          }
        if (!moved) step *= 0.5;
      }
      if (best > kTangentTol * kTangentTol) continue;
      const double slope = (fval(w, b, mu) - fval(w, a, mu)) / (b - a);
      for (double m : mixture_roots(w, s, a, b, slope)) {
        TangentConfig c;
        c.kind = ConfigKind::interior_tangent;
        c.p1 = a;
        c.p2 = b;
        c.lambda = (b - m) / (b - a);
        c.mixture = m;
        c.objective = objective(c.lambda, a, b);
        c.residual = std::max({std::abs(slope_at(w, m, 0.0) - slope),
                               std::abs(slope_at(w, a, mu) - slope),
                               std::abs(slope_at(w, b, mu) - slope)});
        push(c);
      }
    }
  }

  std::sort(out.begin(), out.end(),
            [](const TangentConfig& x, const TangentConfig& y) {
              return x.objective > y.objective;
            });
  return out;
}

TangentConfig best_config(const WiretapChannel& w, double mu) {
  const auto configs = find_configs(w, mu);
  TangentConfig best = configs.front();
  for (const TangentConfig& c : configs) {
    if (c.objective > best.objective + 1e-9) {
      best = c;
    } else if (std::abs(c.objective - best.objective) <= 1e-9 &&
               kind_priority(c.kind) < kind_priority(best.kind)) {
      best = c;
    }
  }
  return best;
}

std::optional<double> mu_star(const WiretapChannel& w) {
  if (w.input_dim() != 2)
    throw std::invalid_argument("mu_star: binary input required");
  if (minimize_f(w).value >= -kClassifyTol) return 0.0;
  const bool eve_dominates = maximize_f(w).value <= kClassifyTol;
  const double f_uniform = fval(w, 0.5, 0.0);
  const auto condition = [&](double mu) {
    const double lo = minimize_f(w, mu).value;
    return eve_dominates ? f_uniform <= lo + 1e-12 : lo >= -1e-12;
  };
  if (condition(0.0)) return 0.0;
  double lo = 0.0, hi = 1e-3;
  while (!condition(hi)) {
    lo = hi;
    hi *= 2;
    if (hi > 1e7) return std::nullopt;
  }
  while (hi - lo > 1e-8) {
    const double mid = 0.5 * (lo + hi);
    (condition(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

AuxiliaryChain bec_bsc_chain(const WiretapChannel& w, double mu) {
  if (w.input_dim() != 2)
    throw std::invalid_argument("bec_bsc_chain: binary input required");
  if (!input_translation_group(w))
    throw std::invalid_argument("bec_bsc_chain: symmetry certificate failed");
  if (w.cb() > w.ce() + kClassifyTol)
    throw std::invalid_argument("bec_bsc_chain: requires C_B <= C_E");
  const auto ms = mu_star(w);
  if (ms && mu > *ms + 1e-12)
    throw std::invalid_argument("bec_bsc_chain: mu beyond mu_star");

  const TangentConfig cfg = best_config(w, mu);
  double anchor, tangent, anchor_weight;
  if (cfg.kind == ConfigKind::boundary_left) {
    anchor = 0;
    tangent = cfg.p2;
    anchor_weight = cfg.lambda;
  } else if (cfg.kind == ConfigKind::boundary_right) {
    anchor = 1;
    tangent = cfg.p1;
    anchor_weight = 1 - cfg.lambda;
  } else {
    throw std::invalid_argument(
        "bec_bsc_chain: no boundary-anchored optimum at this mu");
  }

  const Pmf pu = Pmf::uniform(2);
  const std::vector<std::vector<double>> pv_rows = {
      {anchor_weight, 1 - anchor_weight, 0, 0},
      {0, 0, anchor_weight, 1 - anchor_weight}};
  const std::vector<Pmf> x_rows = {bin(anchor), bin(tangent), bin(1 - anchor),
                                   bin(1 - tangent)};
  AuxiliaryChain chain = AuxiliaryChain::split(pu, pv_rows, x_rows);

  const Pmf px = chain.induced_x();
  for (std::size_t i = 0; i < px.dim(); ++i)
    if (std::abs(px[i] - 0.5) > kNumericTol)
      throw std::logic_error("bec_bsc_chain: induced input not uniform");
  const double want =
      mu * mutual_information(w.main, Pmf::uniform(2)) + cfg.objective;
  if (std::abs(evaluate_objective(w, chain, mu) - want) > kNumericTol)
    throw std::logic_error("bec_bsc_chain: assembled value mismatch");
  return chain;
}

BsecDesign bsec_design(double p, double q) {
  if (p <= 0 || q <= 0 || p + q >= 1)
    throw std::invalid_argument("bsec_design: need p, q > 0 and p + q < 1");
  const double d = 1 - p - 2 * q;
  const double c = d * d * (1 - p) / ((1 - p - q) * q);
  const double eps = 0.5 - 0.5 * std::sqrt(c / (4 + c));
  const double b = (1 - 2 * eps) * std::log2((1 - eps) / eps) -
                   d * std::log2((1 - p - q) / q);

  // The defining property of eps_star: the curvature of the advantage curve
  // at t = 0 vanishes there.
  const double curv = -(1 - 2 * eps) * (1 - 2 * eps) / (eps * (1 - eps)) + c;
  if (std::abs(curv) > kNumericTol * std::max(1.0, c))
    throw std::logic_error("bsec_design: curvature identity violated");
  if (b < -kNumericTol)
    throw std::logic_error("bsec_design: negative edge slope");
  if (std::abs(d) < 1e-12 && std::abs(b) > kNumericTol)
    throw std::logic_error("bsec_design: edge slope should vanish");
  return {c, eps, b};
}

BsecVerification verify_bsec_instance(double p, double q, double eps) {
  const WiretapChannel w = make_bsc_bsec(p, q, eps);
  const BsecDesign design = bsec_design(p, q);
  BsecVerification out;
  out.classification = classify(w);
  out.edge_slope = (1 - 2 * eps) * std::log2((1 - eps) / eps) -
                   (1 - p - 2 * q) * std::log2((1 - p - q) / q);
  out.edge_curvature = (-(1 - 2 * eps) * (1 - 2 * eps) / (eps * (1 - eps)) +
                        design.curvature_ratio) /
                       std::log(2.0);

  // Sign changes of the curvature of f on (0, 0.5), with hysteresis so that
  // finite-difference noise around a flat stretch is not double counted.
  const double h = 1e-4;
  int last_sign = 0;
  for (double t = 2e-3; t < 0.5; t += 1e-3) {
    const double d2 =
        (fval(w, t + h, 0.0) - 2 * fval(w, t, 0.0) + fval(w, t - h, 0.0)) /
        (h * h);
    const int sign = d2 > 1e-6 ? 1 : (d2 < -1e-6 ? -1 : 0);
    if (sign != 0) {
      if (last_sign != 0 && sign != last_sign) ++out.inflections;
      last_sign = sign;
    }
  }
  out.max_at_uniform =
      fval(w, 0.5, 0.0) >= out.classification.f_max.value - kClassifyTol;
  return out;
}

}  // namespace wiretap
