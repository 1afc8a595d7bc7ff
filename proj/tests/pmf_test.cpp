#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "wiretap/optimize.hpp"
#include "wiretap/pmf.hpp"

using namespace wiretap;

namespace {

Pmf reconstruct(const SimplexDecomposition& d, const Pmf& anchor) {
  std::vector<double> w(anchor.dim(), 0.0);
  for (std::size_t i = 0; i < anchor.dim(); ++i) w[i] = d.anchor_weight * anchor[i];
  for (std::size_t k = 0; k < d.vertices.size(); ++k) w[d.vertices[k]] += d.vertex_weights[k];
  return Pmf(w);
}

}  // namespace

TEST_SUITE("pmf") {
  TEST_CASE("construction validates and renormalizes") {
    CHECK_THROWS_AS(Pmf(std::vector<double>{0.5, -0.1, 0.6}), std::invalid_argument);
    CHECK_THROWS_AS(Pmf(std::vector<double>{0.5, 0.4}), std::invalid_argument);
    CHECK_THROWS_AS(Pmf(std::vector<double>{}), std::invalid_argument);
    // Drift below the slack is absorbed.
    Pmf p(std::vector<double>{0.5 + 2e-7, 0.5});
    double sum = 0;
    for (std::size_t i = 0; i < p.dim(); ++i) sum += p[i];
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("factories") {
    const Pmf u = Pmf::uniform(4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(u[i] == doctest::Approx(0.25));
    const Pmf e2 = Pmf::basis(3, 2);
    CHECK(e2[2] == 1.0);
    CHECK(e2[0] == 0.0);
    const Pmf b = Pmf::binary(0.3);
    CHECK(b[0] == doctest::Approx(0.3));
    CHECK(b[1] == doctest::Approx(0.7));
  }

  TEST_CASE("entropy reference values") {
    CHECK(entropy(Pmf::uniform(2)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(entropy(Pmf::basis(2, 0)) == doctest::Approx(0.0));
    CHECK(entropy(Pmf::binary(0.1)) == doctest::Approx(0.4689955935892812).epsilon(1e-12));
    CHECK(entropy(Pmf::uniform(8)) == doctest::Approx(3.0).epsilon(1e-12));
  }

  TEST_CASE("binary_entropy matches two-point entropy") {
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    for (double x : {0.01, 0.1, 0.37, 0.62, 0.93})
      CHECK(binary_entropy(x) == doctest::Approx(entropy(Pmf::binary(x))).epsilon(1e-12));
  }

  TEST_CASE("cyclic_shift basics") {
    const Pmf p(std::vector<double>{1.0, 0.0, 0.0});
    const Pmf s = cyclic_shift(p, 1);
    CHECK(s[0] == 0.0);
    CHECK(s[1] == 1.0);
    const Pmf q(std::vector<double>{0.5, 0.3, 0.2});
    const Pmf full = cyclic_shift(q, 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(full[i] == doctest::Approx(q[i]));
    const Pmf u = cyclic_shift(Pmf::uniform(3), 2);
    for (std::size_t i = 0; i < 3; ++i) CHECK(u[i] == doctest::Approx(1.0 / 3));
  }

  TEST_CASE("shift composed dim times is identity and entropy is shift-invariant") {
    std::mt19937_64 rng(7);
    for (std::size_t dim = 2; dim <= 5; ++dim) {
      for (int t = 0; t < 20; ++t) {
        const Pmf p = random_pmf(dim, rng);
        Pmf s = p;
        for (std::size_t k = 0; k < dim; ++k) s = cyclic_shift(s, 1);
        for (std::size_t i = 0; i < dim; ++i) CHECK(s[i] == doctest::Approx(p[i]).epsilon(1e-12));
        CHECK(entropy(cyclic_shift(p, 1)) == doctest::Approx(entropy(p)).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("apply_permutation sends mass i to slot perm[i]") {
    const Pmf p(std::vector<double>{0.5, 0.3, 0.2});
    const Pmf q = apply_permutation(p, {2, 0, 1});
    CHECK(q[2] == doctest::Approx(p[0]));
    CHECK(q[0] == doctest::Approx(p[1]));
    CHECK(q[1] == doctest::Approx(p[2]));
    CHECK_THROWS_AS(apply_permutation(p, {0, 0, 1}), std::invalid_argument);
  }

  TEST_CASE("decompose binary example") {
    const auto d = decompose(Pmf(std::vector<double>{0.3, 0.7}), Pmf::uniform(2));
    CHECK(d.anchor_weight == doctest::Approx(0.6).epsilon(1e-9));
    REQUIRE(d.vertices.size() == 1);
    CHECK(d.vertices[0] == 1);
    CHECK(d.vertex_weights[0] == doctest::Approx(0.4).epsilon(1e-9));
  }

  TEST_CASE("decompose identity case") {
    const Pmf a(std::vector<double>{0.2, 0.5, 0.3});
    const auto d = decompose(a, a);
    CHECK(d.anchor_weight == doctest::Approx(1.0).epsilon(1e-9));
    for (double qk : d.vertex_weights) CHECK(qk == doctest::Approx(0.0).epsilon(1e-9));
  }

  TEST_CASE("decompose round-trips random pairs") {
    std::mt19937_64 rng(11);
    for (std::size_t dim = 2; dim <= 5; ++dim) {
      for (int t = 0; t < 50; ++t) {
        const Pmf target = random_pmf(dim, rng);
        const Pmf anchor = random_pmf(dim, rng);
        const auto d = decompose(target, anchor);
        CHECK(d.anchor_weight >= -kPmfTol);
        const Pmf back = reconstruct(d, anchor);
        for (std::size_t i = 0; i < dim; ++i)
          CHECK(std::abs(back[i] - target[i]) <= 1e-9);
      }
    }
  }

  TEST_CASE("decompose keeps interior targets off the faces") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 50; ++t) {
      std::vector<double> w(4);
      double sum = 0;
      for (auto& x : w) {
        x = 0.05 + std::uniform_real_distribution<double>(0, 1)(rng);
        sum += x;
      }
      for (auto& x : w) x /= sum;
      const auto d = decompose(Pmf(w), random_pmf(4, rng));
      CHECK(d.anchor_weight > 0.0);
    }
  }

  TEST_CASE("simplex_grid enumeration") {
    const auto g22 = simplex_grid(2, 2);
    REQUIRE(g22.size() == 3);
    CHECK(g22[0][0] == doctest::Approx(0.0));
    CHECK(g22[1][0] == doctest::Approx(0.5));
    CHECK(g22[2][0] == doctest::Approx(1.0));
    CHECK(simplex_grid(2, 4).size() == 5);
    CHECK(simplex_grid(3, 3).size() == 10);
    CHECK(simplex_grid_size(3, 3) == 10);
    for (const Pmf& p : simplex_grid(3, 5)) {
      double sum = 0;
      for (std::size_t i = 0; i < 3; ++i) sum += p[i];
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
  }

  TEST_CASE("simplex_grid rejects oversized requests") {
    CHECK(simplex_grid_size(8, 100) > 20'000'000ull);
    CHECK_THROWS_AS(simplex_grid(8, 100), std::length_error);
  }

  TEST_CASE("is_interior") {
    CHECK(Pmf::uniform(3).is_interior());
    CHECK_FALSE(Pmf::basis(3, 0).is_interior());
  }
}
