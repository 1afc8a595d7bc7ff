#pragma once

#include <cstddef>
#include <vector>

#include "wiretap/channel.hpp"
#include "wiretap/pmf.hpp"

namespace wiretap {

// Markov chain U -> V -> X: splitting variable U, prefix variable V, channel
// input X. pu over U, pv_given_u |U| x |V|, px_given_v |V| x |X|.
struct AuxiliaryChain {
  // Defaults to the degenerate single-state chain over a 1-letter alphabet.
  Pmf pu{std::vector<double>{1.0}};
  ChannelMatrix pv_given_u = ChannelMatrix::identity(1);
  ChannelMatrix px_given_v = ChannelMatrix::identity(1);

  std::size_t card_u() const { return pu.dim(); }
  std::size_t card_v() const { return pv_given_u.out_dim(); }
  std::size_t card_x() const { return px_given_v.out_dim(); }

  Pmf induced_v() const { return pv_given_u.output(pu); }
  Pmf induced_x() const { return px_given_v.output(induced_v()); }

  // U degenerate, V = X with marginal px (no splitting, no prefixing).
  static AuxiliaryChain trivial(const Pmf& px);
  // U degenerate, V with the given weights and input rows (prefixing only).
  static AuxiliaryChain prefix_only(const Pmf& pv,
                                    const std::vector<Pmf>& rows);
  // Splitting and prefixing: per-u V weights over a shared row set.
  static AuxiliaryChain split(const Pmf& pu,
                              const std::vector<std::vector<double>>& pv_rows,
                              const std::vector<Pmf>& x_rows);
};

void validate(const AuxiliaryChain& chain, std::size_t input_dim);

// Internal-consistency tolerance for the two evaluation forms below.
inline constexpr double kNumericTol = 1e-9;

struct ObjectiveBreakdown {
  double value = 0;      // mu * I(V;Y) + I(V;Y|U) - I(V;Z|U)
  double rate = 0;       // I(V;Y)
  double advantage = 0;  // I(V;Y|U) - I(V;Z|U)
};

// Boundary objective of a chain. Evaluated twice: directly through the
// prefixed channels and through the equivalent X-side decomposition
// mu I(X;Y) + I(X;Y|U) - I(X;Z|U) - [(mu+1) I(X;Y|V) - I(X;Z|V)];
// disagreement beyond kNumericTol means a broken Markov factorization and
// throws.
ObjectiveBreakdown evaluate_objective_parts(const WiretapChannel& w,
                                            const AuxiliaryChain& chain,
                                            double mu);
double evaluate_objective(const WiretapChannel& w, const AuxiliaryChain& chain,
                          double mu);

}  // namespace wiretap
