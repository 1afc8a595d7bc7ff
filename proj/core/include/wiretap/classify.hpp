#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wiretap/chain.hpp"
#include "wiretap/channel.hpp"
#include "wiretap/pmf.hpp"

namespace wiretap {

// Sign-decision tolerance for channel-ordering tests.
inline constexpr double kClassifyTol = 1e-8;
inline constexpr std::uint64_t kClassifySeed = 0xC1A55;

struct ExtremeValue {
  double value = 0;
  Pmf input{std::vector<double>{1.0}};
};

// Global extremum of f_mu over the simplex: coarse grid (resolution 0 picks
// a per-dimension default) followed by multi-start local refinement.
ExtremeValue minimize_f(const WiretapChannel& w, double mu = 0,
                        unsigned grid_resolution = 0,
                        std::uint64_t seed = kClassifySeed);
ExtremeValue maximize_f(const WiretapChannel& w, double mu = 0,
                        unsigned grid_resolution = 0,
                        std::uint64_t seed = kClassifySeed);

// Bob dominates for every input distribution: min f >= -tol. The witness is
// the located minimizer (the prefix-row anchor when negative).
bool is_more_capable(const WiretapChannel& w, ExtremeValue* witness = nullptr);

// Certifies concavity of f via midpoint inequalities at several pair spans
// (equivalent to the less-noisy ordering; certificate, not proof).
bool is_less_noisy(const WiretapChannel& w, std::uint64_t seed = kClassifySeed);

// Requires cyclic-shift certificates on both component channels; true when f
// at the uniform distribution attains the global maximum.
bool is_dominantly_cyclic(const WiretapChannel& w);

struct ClassificationReport {
  bool more_capable = false;
  bool less_noisy = false;
  bool cyclic_shift_symmetric = false;
  bool dominantly_cyclic = false;
  ExtremeValue f_min;
  ExtremeValue f_max;
  std::string notes;
};

ClassificationReport classify(const WiretapChannel& w);

// Strictly improving prefix for channels that are not more capable.
// With an interior f-maximizer: V mixes the f-minimizer with simplex
// vertices so that the induced input equals the maximizer, which beats
// max f strictly. With a boundary maximizer the construction falls back to
// uniform translates of the minimizer when an input translation group is
// certified and that chain still improves strictly. Otherwise nothing.
std::optional<AuxiliaryChain> improving_prefix(const WiretapChannel& w);

}  // namespace wiretap
