#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wiretap/pmf.hpp"

namespace wiretap {

inline constexpr double kCapacityTol = 1e-10;
inline constexpr unsigned kCapacityMaxIter = 100000;
inline constexpr double kSymmetryTol = 1e-9;
inline constexpr double kMatrixEqTol = 1e-12;

// Row-stochastic conditional distribution p(output | input).
class ChannelMatrix {
 public:
  ChannelMatrix(std::size_t in_dim, std::size_t out_dim,
                std::vector<double> row_major);
  static ChannelMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static ChannelMatrix identity(std::size_t dim);

  std::size_t in_dim() const { return in_; }
  std::size_t out_dim() const { return out_; }
  double operator()(std::size_t x, std::size_t y) const {
    return m_[x * out_ + y];
  }
  const std::vector<double>& data() const { return m_; }
  const double* row_data(std::size_t x) const { return &m_[x * out_]; }
  Pmf row(std::size_t x) const;
  double row_entropy(std::size_t x) const { return row_h_[x]; }

  // Output marginal px^T * matrix; out must hold out_dim() entries.
  void output(const double* px, double* out) const;
  Pmf output(const Pmf& px) const;

 private:
  std::size_t in_, out_;
  std::vector<double> m_;
  std::vector<double> row_h_;
};

bool approx_equal(const ChannelMatrix& a, const ChannelMatrix& b,
                  double tol = kMatrixEqTol);

double mutual_information(const ChannelMatrix& ch, const double* px);
double mutual_information(const ChannelMatrix& ch, const Pmf& px);

// p(y|v) = sum_x p(x|v) p(y|x); prefix rows index v.
ChannelMatrix compose_prefix(const ChannelMatrix& prefix,
                             const ChannelMatrix& ch);

struct CapacityResult {
  double value = 0;
  Pmf input{std::vector<double>{1.0}};
  double gap = 0;
  unsigned iterations = 0;
};

// Alternating maximization with the standard upper/lower sandwich: stops when
// max_x D(p(.|x) || q) - I(r) <= tol.
CapacityResult capacity(const ChannelMatrix& ch, double tol = kCapacityTol,
                        unsigned max_iter = kCapacityMaxIter);

struct SymmetryOptions {
  unsigned grid_resolution = 50;
  unsigned random_samples = 200;
  std::uint64_t seed = 0x77A7;
  double tol = kSymmetryTol;
};

// Numerical certificate: constant row entropy and output entropy invariant
// under every cyclic rotation of the input distribution, over a
// deterministic grid plus seeded random draws. Implies I(X;Y) invariance.
bool is_cyclic_shift_symmetric(const ChannelMatrix& ch,
                               const SymmetryOptions& opts = {});

// Transitive input translation group under which the channel is certified
// invariant in the same sense. Tries the cyclic rotations first, then (for
// 4-ary inputs) the two-bit XOR translations. Returns all |X| permutations,
// identity first.
std::optional<std::vector<std::vector<std::size_t>>> input_translation_group(
    const ChannelMatrix& ch, const SymmetryOptions& opts = {});

// Main channel to Bob and eavesdropper channel to Eve on a shared input
// alphabet, with capacities cached at construction.
struct WiretapChannel {
  ChannelMatrix main;
  ChannelMatrix eavesdropper;
  std::string name;
  CapacityResult main_capacity;
  CapacityResult eavesdropper_capacity;

  std::size_t input_dim() const { return main.in_dim(); }
  double cb() const { return main_capacity.value; }
  double ce() const { return eavesdropper_capacity.value; }
};

WiretapChannel make_wiretap(ChannelMatrix main, ChannelMatrix eavesdropper,
                            std::string name = {});

// (mu + 1) I(X;Y) - I(X;Z); mu = 0 gives the bare advantage f.
double f_mu(const WiretapChannel& w, const Pmf& px, double mu = 0);
double f_mu(const WiretapChannel& w, const double* px, double mu = 0);

ChannelMatrix make_bsc(double eps);
// Erasure output alphabet ordered {0, e, 1}.
ChannelMatrix make_bec(double alpha);

WiretapChannel make_bsc_bec(double eps, double alpha);
WiretapChannel make_bec_bsc(double alpha, double eps);

// Quaternary pair with two-bit XOR additive noise: Bob's noise
// {(1-p)/2, p/2, (1-q)/2, q/2}, Eve's noise {(1-r)/2, (1-r)/2, r/2, r/2}.
WiretapChannel make_xor_pair(double p, double q, double r);

// Main BSC(eps); eavesdropper a binary symmetric erasure channel written as
// rows {1-p-q, q, p} and {q, 1-p-q, p} (third output uninformative).
WiretapChannel make_bsc_bsec(double p, double q, double eps);

// Shared translation group certified for both component channels.
std::optional<std::vector<std::vector<std::size_t>>> input_translation_group(
    const WiretapChannel& w, const SymmetryOptions& opts = {});

}  // namespace wiretap
