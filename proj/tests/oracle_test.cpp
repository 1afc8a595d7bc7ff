#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "wiretap/binary.hpp"
#include "wiretap/chain.hpp"
#include "wiretap/channel.hpp"
#include "wiretap/oracle.hpp"
#include "wiretap/region.hpp"

using namespace wiretap;

TEST_SUITE("oracle") {
  TEST_CASE("brute_binary agrees with the analytic config in both regimes") {
    SUBCASE("erasure main") {
      const WiretapChannel w = make_bec_bsc(0.5, 0.1);
      const auto r = brute_binary(w, 0.0, 200);
      const double analytic = best_config(w, 0.0).objective;
      CHECK(r.value <= analytic + kOptTol);
      CHECK(analytic - r.value <= r.error_bound + kOptTol);
    }
    SUBCASE("erasure eavesdropper") {
      const WiretapChannel w = make_bsc_bec(0.1, 0.4);
      const auto r = brute_binary(w, 0.0, 200);
      const double analytic = best_config(w, 0.0).objective;
      CHECK(r.value <= analytic + kOptTol);
      CHECK(analytic - r.value <= r.error_bound + kOptTol);
    }
  }

  TEST_CASE("brute_binary maximizer is reproducible from its parameters") {
    const WiretapChannel w = make_bsc_bec(0.1, 0.6);
    const auto r = brute_binary(w, 0.2, 150);
    const double mix = r.config.lambda * r.config.p1 + (1 - r.config.lambda) * r.config.p2;
    const double direct = f_mu(w, Pmf::binary(mix)) -
                          r.config.lambda * f_mu(w, Pmf::binary(r.config.p1), 0.2) -
                          (1 - r.config.lambda) * f_mu(w, Pmf::binary(r.config.p2), 0.2);
    CHECK(r.value == doctest::Approx(direct).epsilon(1e-10));
    CHECK(r.evaluated > 0);
    CHECK(r.lipschitz > 0);
  }

  TEST_CASE("brute_binary is deterministic") {
    const WiretapChannel w = make_bec_bsc(0.5, 0.1);
    const auto a = brute_binary(w, 0.05, 120);
    const auto b = brute_binary(w, 0.05, 120);
    CHECK(a.value == b.value);
    CHECK(a.config.p1 == b.config.p1);
    CHECK(a.evaluated == b.evaluated);
  }

  TEST_CASE("brute_binary guards") {
    CHECK_THROWS_AS(brute_binary(make_xor_pair(0.1, 0.2, 0.45), 0.0, 50),
                    std::invalid_argument);
    CHECK_THROWS_AS(brute_binary(make_bsc_bec(0.1, 0.5), 0.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(brute_binary(make_bsc_bec(0.1, 0.5), 0.0, 2000), std::length_error);
  }

  TEST_CASE("brute_chain returns a valid chain matching its value") {
    const WiretapChannel w = make_bec_bsc(0.5, 0.1);
    for (double mu : {0.0, 0.1}) {
      const auto r = brute_chain(w, mu, 2, 2, 6);
      validate(r.chain, 2);
      CHECK(evaluate_objective(w, r.chain, mu) == doctest::Approx(r.value).epsilon(1e-9));
      CHECK(r.evaluated > 0);
    }
  }

  TEST_CASE("brute_chain stays below the analytic support value") {
    const WiretapChannel w = make_bec_bsc(0.5, 0.1);
    const double mu = 0.03;
    const auto r = brute_chain(w, mu, 2, 4, 6);
    const double support = mu * w.cb() + best_config(w, mu).objective;
    CHECK(r.value <= support + kOptTol);
    // Coarse grid, so only a rough lower sanity bound.
    CHECK(r.value >= support - 0.05);
  }

  TEST_CASE("brute_chain brackets the secrecy capacity at mu zero") {
    const WiretapChannel w = make_bsc_bec(0.1, 0.6);
    const double cs = 0.139035952556;
    const auto r = brute_chain(w, 0.0, 1, 2, 10);
    CHECK(r.value <= cs + kOptTol);
    CHECK(r.value >= cs - r.error_bound - kOptTol);
    // The grid contains the single-row uniform chain, so its value is a floor.
    CHECK(r.value >= 0.131004406411 - 1e-9);
  }

  TEST_CASE("brute_chain guards") {
    CHECK_THROWS_AS(brute_chain(make_xor_pair(0.1, 0.2, 0.45), 0.0, 2, 2, 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(brute_chain(make_bsc_bec(0.1, 0.5), 0.0, 2, 5, 4), std::invalid_argument);
    CHECK_THROWS_AS(brute_chain(make_bsc_bec(0.1, 0.5), 0.0, 2, 2, 11), std::invalid_argument);
    CHECK_THROWS_AS(brute_chain(make_bsc_bec(0.1, 0.5), 0.3, 4, 4, 10), std::length_error);
  }

  TEST_CASE("brute_chain determinism") {
    const WiretapChannel w = make_bec_bsc(0.45, 0.1);
    const auto a = brute_chain(w, 0.2, 2, 2, 5);
    const auto b = brute_chain(w, 0.2, 2, 2, 5);
    CHECK(a.value == b.value);
    CHECK(a.evaluated == b.evaluated);
  }
}
