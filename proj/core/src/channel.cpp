#include "wiretap/channel.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "wiretap/optimize.hpp"

namespace wiretap {

ChannelMatrix::ChannelMatrix(std::size_t in_dim, std::size_t out_dim,
                             std::vector<double> row_major)
    : in_(in_dim), out_(out_dim), m_(std::move(row_major)) {
  if (in_ < 1 || out_ < 1 || m_.size() != in_ * out_)
    throw std::invalid_argument("channel: shape mismatch");
  row_h_.resize(in_);
  for (std::size_t x = 0; x < in_; ++x) {
    // Row validation (and renormalization of tiny drift) via Pmf.
    Pmf r(std::vector<double>(m_.begin() + x * out_,
                              m_.begin() + (x + 1) * out_));
    std::copy(r.weights().begin(), r.weights().end(), m_.begin() + x * out_);
    row_h_[x] = entropy(r);
  }
}

ChannelMatrix ChannelMatrix::from_rows(
    const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw std::invalid_argument("channel: no rows");
  const std::size_t out = rows[0].size();
  std::vector<double> m;
  m.reserve(rows.size() * out);
  for (const auto& r : rows) {
    if (r.size() != out)
      throw std::invalid_argument("channel: ragged rows");
    m.insert(m.end(), r.begin(), r.end());
  }
  return ChannelMatrix(rows.size(), out, std::move(m));
}

ChannelMatrix ChannelMatrix::identity(std::size_t dim) {
  std::vector<double> m(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = 1.0;
  return ChannelMatrix(dim, dim, std::move(m));
}

Pmf ChannelMatrix::row(std::size_t x) const {
  return Pmf(std::vector<double>(m_.begin() + x * out_,
                                 m_.begin() + (x + 1) * out_));
}

void ChannelMatrix::output(const double* px, double* out) const {
  std::fill(out, out + out_, 0.0);
  for (std::size_t x = 0; x < in_; ++x) {
    const double w = px[x];
    if (w == 0) continue;
    const double* r = &m_[x * out_];
    for (std::size_t y = 0; y < out_; ++y) out[y] += w * r[y];
  }
}

Pmf ChannelMatrix::output(const Pmf& px) const {
  if (px.dim() != in_)
    throw std::invalid_argument("channel: input dimension mismatch");
  std::vector<double> out(out_);
  output(px.data(), out.data());
  return Pmf(std::move(out));
}

bool approx_equal(const ChannelMatrix& a, const ChannelMatrix& b, double tol) {
  if (a.in_dim() != b.in_dim() || a.out_dim() != b.out_dim()) return false;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    if (std::abs(a.data()[i] - b.data()[i]) > tol) return false;
  return true;
}

double mutual_information(const ChannelMatrix& ch, const double* px) {
  double out[32];
  std::vector<double> heap;
  double* o = out;
  if (ch.out_dim() > 32) {
    heap.resize(ch.out_dim());
    o = heap.data();
  }
  ch.output(px, o);
  double hy = entropy(o, ch.out_dim());
  for (std::size_t x = 0; x < ch.in_dim(); ++x)
    hy -= px[x] * ch.row_entropy(x);
  return hy;
}

double mutual_information(const ChannelMatrix& ch, const Pmf& px) {
  if (px.dim() != ch.in_dim())
    throw std::invalid_argument("mutual_information: dimension mismatch");
  return mutual_information(ch, px.data());
}

ChannelMatrix compose_prefix(const ChannelMatrix& prefix,
                             const ChannelMatrix& ch) {
  if (prefix.out_dim() != ch.in_dim())
    throw std::invalid_argument("compose_prefix: dimension mismatch");
  std::vector<double> m(prefix.in_dim() * ch.out_dim(), 0.0);
  for (std::size_t v = 0; v < prefix.in_dim(); ++v)
    for (std::size_t x = 0; x < ch.in_dim(); ++x) {
      const double w = prefix(v, x);
      if (w == 0) continue;
      for (std::size_t y = 0; y < ch.out_dim(); ++y)
        m[v * ch.out_dim() + y] += w * ch(x, y);
    }
  return ChannelMatrix(prefix.in_dim(), ch.out_dim(), std::move(m));
}

CapacityResult capacity(const ChannelMatrix& ch, double tol,
                        unsigned max_iter) {
  const std::size_t n = ch.in_dim(), m = ch.out_dim();
  std::vector<double> r(n, 1.0 / n), q(m), d(n);
  CapacityResult res;
  for (unsigned it = 1; it <= max_iter; ++it) {
    ch.output(r.data(), q.data());
    double lower = 0, upper = -1e300;
    for (std::size_t x = 0; x < n; ++x) {
      double kl = 0;
      for (std::size_t y = 0; y < m; ++y) {
        const double p = ch(x, y);
        if (p == 0) continue;
        // An output reachable from x but starved by the current input mix
        // forces x back into the support.
        kl += q[y] > 0 ? p * std::log2(p / q[y]) : 1e6;
      }
      d[x] = kl;
      lower += r[x] * kl;
      upper = std::max(upper, kl);
    }
    res.value = lower;
    res.gap = upper - lower;
    res.iterations = it;
    if (res.gap <= tol) {
      res.input = Pmf(r);
      return res;
    }
    double sum = 0;
    for (std::size_t x = 0; x < n; ++x) {
      r[x] *= std::exp2(std::min(d[x] - lower, 700.0));
      sum += r[x];
    }
    for (double& v : r) v /= sum;
  }
  throw std::runtime_error("capacity: no convergence after " +
                           std::to_string(max_iter) +
                           " iterations (gap " + std::to_string(res.gap) + ")");
}

namespace {

bool invariant_under(const ChannelMatrix& ch,
                     const std::vector<std::vector<std::size_t>>& perms,
                     const SymmetryOptions& opts) {
  // Constant per-input row entropy plus output-entropy invariance under the
  // candidate permutations; together these make mutual information (and the
  // translate-based constructions built on it) exactly invariant.
  for (std::size_t x = 1; x < ch.in_dim(); ++x)
    if (std::abs(ch.row_entropy(x) - ch.row_entropy(0)) > opts.tol)
      return false;
  auto check = [&](const Pmf& p) {
    const double base = entropy(ch.output(p));
    for (const auto& g : perms) {
      const Pmf moved = apply_permutation(p, g);
      if (std::abs(entropy(ch.output(moved)) - base) > opts.tol)
        return false;
    }
    return true;
  };
  unsigned res = opts.grid_resolution;
  while (res > 1 && simplex_grid_size(ch.in_dim(), res) > 200000) res /= 2;
  for (const Pmf& p : simplex_grid(ch.in_dim(), res))
    if (!check(p)) return false;
  std::mt19937_64 rng(opts.seed);
  for (unsigned i = 0; i < opts.random_samples; ++i)
    if (!check(random_pmf(ch.in_dim(), rng))) return false;
  return true;
}

std::vector<std::vector<std::size_t>> cyclic_group(std::size_t n) {
  std::vector<std::vector<std::size_t>> g(n, std::vector<std::size_t>(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) g[k][i] = (i + k) % n;
  return g;
}

std::vector<std::vector<std::size_t>> xor_group4() {
  return {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
}

std::vector<std::vector<std::size_t>> drop_identity(
    std::vector<std::vector<std::size_t>> g) {
  g.erase(g.begin());
  return g;
}

}  // namespace

bool is_cyclic_shift_symmetric(const ChannelMatrix& ch,
                               const SymmetryOptions& opts) {
  return invariant_under(ch, drop_identity(cyclic_group(ch.in_dim())), opts);
}

std::optional<std::vector<std::vector<std::size_t>>> input_translation_group(
    const ChannelMatrix& ch, const SymmetryOptions& opts) {
  const std::size_t n = ch.in_dim();
  if (auto g = cyclic_group(n); invariant_under(ch, drop_identity(g), opts))
    return g;
  if (n == 4)
    if (auto g = xor_group4(); invariant_under(ch, drop_identity(g), opts))
      return g;
  return std::nullopt;
}

std::optional<std::vector<std::vector<std::size_t>>> input_translation_group(
    const WiretapChannel& w, const SymmetryOptions& opts) {
  const std::size_t n = w.input_dim();
  if (auto g = cyclic_group(n);
      invariant_under(w.main, drop_identity(g), opts) &&
      invariant_under(w.eavesdropper, drop_identity(g), opts))
    return g;
  if (n == 4)
    if (auto g = xor_group4();
        invariant_under(w.main, drop_identity(g), opts) &&
        invariant_under(w.eavesdropper, drop_identity(g), opts))
      return g;
  return std::nullopt;
}

WiretapChannel make_wiretap(ChannelMatrix main, ChannelMatrix eavesdropper,
                            std::string name) {
  if (main.in_dim() != eavesdropper.in_dim())
    throw std::invalid_argument("wiretap: input alphabets differ");
  if (main.in_dim() < 2)
    throw std::invalid_argument("wiretap: need at least two inputs");
  CapacityResult cb = capacity(main);
  CapacityResult ce = capacity(eavesdropper);
  return WiretapChannel{std::move(main), std::move(eavesdropper),
                        std::move(name), std::move(cb), std::move(ce)};
}

double f_mu(const WiretapChannel& w, const double* px, double mu) {
  return (mu + 1) * mutual_information(w.main, px) -
         mutual_information(w.eavesdropper, px);
}

double f_mu(const WiretapChannel& w, const Pmf& px, double mu) {
  if (px.dim() != w.input_dim())
    throw std::invalid_argument("f_mu: dimension mismatch");
  return f_mu(w, px.data(), mu);
}

ChannelMatrix make_bsc(double eps) {
  if (eps < 0 || eps > 1)
    throw std::invalid_argument("bsc: crossover out of [0,1]");
  return ChannelMatrix(2, 2, {1 - eps, eps, eps, 1 - eps});
}

ChannelMatrix make_bec(double alpha) {
  if (alpha < 0 || alpha > 1)
    throw std::invalid_argument("bec: erasure rate out of [0,1]");
  return ChannelMatrix(2, 3, {1 - alpha, alpha, 0, 0, alpha, 1 - alpha});
}

WiretapChannel make_bsc_bec(double eps, double alpha) {
  if (eps < 0 || eps >= 0.5)
    throw std::invalid_argument("bsc_bec: need 0 <= eps < 0.5");
  return make_wiretap(make_bsc(eps), make_bec(alpha), "bsc_bec");
}

WiretapChannel make_bec_bsc(double alpha, double eps) {
  if (eps < 0 || eps >= 0.5)
    throw std::invalid_argument("bec_bsc: need 0 <= eps < 0.5");
  return make_wiretap(make_bec(alpha), make_bsc(eps), "bec_bsc");
}

namespace {

// ch(x, y) = noise[x ^ y]; additive noise over the two-bit XOR group.
ChannelMatrix xor_noise_channel(const std::vector<double>& noise) {
  std::vector<double> m(16);
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) m[x * 4 + y] = noise[x ^ y];
  return ChannelMatrix(4, 4, std::move(m));
}

}  // namespace

WiretapChannel make_xor_pair(double p, double q, double r) {
  for (double v : {p, q, r})
    if (v < 0 || v > 1) throw std::invalid_argument("xor_pair: parameter out of [0,1]");
  ChannelMatrix main =
      xor_noise_channel({(1 - p) / 2, p / 2, (1 - q) / 2, q / 2});
  ChannelMatrix eav =
      xor_noise_channel({(1 - r) / 2, (1 - r) / 2, r / 2, r / 2});
  return make_wiretap(std::move(main), std::move(eav), "xor_pair");
}

WiretapChannel make_bsc_bsec(double p, double q, double eps) {
  if (p <= 0 || q <= 0 || p + q >= 1)
    throw std::invalid_argument("bsc_bsec: need p, q > 0 and p + q < 1");
  if (eps < 0 || eps >= 0.5)
    throw std::invalid_argument("bsc_bsec: need 0 <= eps < 0.5");
  ChannelMatrix eav(2, 3, {1 - p - q, q, p, q, 1 - p - q, p});
  return make_wiretap(make_bsc(eps), std::move(eav), "bsc_bsec");
}

}  // namespace wiretap
