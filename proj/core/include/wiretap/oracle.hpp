#pragma once

#include <cstdint>

#include "wiretap/binary.hpp"
#include "wiretap/chain.hpp"
#include "wiretap/channel.hpp"

namespace wiretap {

// Evaluation budget for the exhaustive solvers.
inline constexpr std::uint64_t kBruteBinaryCap = 1'000'000'000;
inline constexpr std::uint64_t kBruteChainCap = 100'000'000;

struct BruteBinaryResult {
  double value = 0;
  TangentConfig config;   // kind is a structural label, residual unset
  double lipschitz = 0;   // max adjacent-cell delta x resolution
  double error_bound = 0; // one-step probe around the maximizer
  std::uint64_t evaluated = 0;
};

// Exhaustive grid over (lambda, p1, p2) at step 1/resolution for the binary
// prefix objective f(mix) - lambda f_mu(p1) - (1-lambda) f_mu(p2).
BruteBinaryResult brute_binary(const WiretapChannel& w, double mu,
                               unsigned resolution);

struct BruteChainResult {
  double value = 0;
  AuxiliaryChain chain;
  double lipschitz = 0;
  double error_bound = 0;
  std::uint64_t evaluated = 0;
};

// Exhaustive grid over U -> V -> X chains: V-to-X rows, per-u V weights and
// the U marginal all quantized at 1/resolution. Binary input only, tiny
// cardinalities; relabeling symmetry of V and U prunes the enumeration.
BruteChainResult brute_chain(const WiretapChannel& w, double mu,
                             std::size_t card_u, std::size_t card_v,
                             unsigned resolution);

}  // namespace wiretap
