#include <doctest.h>

#include <groupprox/l2q_prox.hpp>

#include "support/vectors.hpp"

#include <cmath>
#include <numeric>
#include <random>

using namespace groupprox;
using groupprox::testing::near;
using groupprox::testing::vec;
using doctest::Approx;

TEST_CASE("prox_l2q examples") {
  const ScalarPenalty half(1.0, 0.5);
  {
    const auto p = prox_l2q(vec({1.5, 0.0}), half);
    REQUIRE(p.size() == 2);
    CHECK(p.minimizers[0].isZero(0.0));
    CHECK(near(p.minimizers[1], vec({1.0, 0.0}), 1e-12));
  }
  {
    const auto p = prox_l2q(vec({3.0, 4.0}), {1.0, 1.0});
    REQUIRE(p.size() == 1);
    CHECK(near(p.minimizers[0], vec({2.4, 3.2}), 1e-12));
  }
  CHECK(prox_l2q(vec({0.5, 0.5}), half).is_zero());
  CHECK(prox_l2q(Vector::Zero(4), half).is_zero());
  CHECK(l2q_objective(vec({3.0, 4.0}), vec({0.0, 0.0}), half) == Approx(12.5));
  CHECK(l2q_objective(vec({3.0, 4.0}), vec({0.6, 0.8}), half) == Approx(1.0 + 8.0));
}

TEST_CASE("prox_l2q is radial") {
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> val(-3.0, 3.0), q_dist(0.0, 1.0), nu_dist(0.2, 3.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const Index n = 1 + trial % 6;
    Vector y(n);
    for (Index i = 0; i < n; ++i) y[i] = val(rng);
    const ScalarPenalty pen(nu_dist(rng), trial % 7 == 0 ? 1.0 : q_dist(rng));
    const auto p = prox_l2q(y, pen);
    const auto r = prox_scalar(pen, y.norm());
    REQUIRE(p.size() == r.values.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
      CHECK(p.minimizers[k].norm() == Approx(r.values[k]).epsilon(1e-10).scale(1e-12));
      if (r.values[k] > 0.0) CHECK(near(p.minimizers[k], y * (r.values[k] / y.norm()), 1e-10));
      CHECK(l2q_objective(y, p.minimizers[k], pen) == Approx(p.objective).epsilon(1e-10));
    }
  }
}

TEST_CASE("prox_l2q commutes with signed permutations") {
  std::mt19937 rng(12);
  std::uniform_real_distribution<double> val(-2.0, 2.0), q_dist(0.05, 0.95);
  std::bernoulli_distribution flip(0.5);
  for (int trial = 0; trial < 500; ++trial) {
    const Index n = 1 + trial % 5;
    Vector y(n);
    for (Index i = 0; i < n; ++i) y[i] = val(rng);
    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<double> signs(static_cast<std::size_t>(n));
    for (auto& s : signs) s = flip(rng) ? -1.0 : 1.0;
    const SignedPermutation P(order, signs);
    const ScalarPenalty pen(1.0, q_dist(rng));
    const auto lhs = prox_l2q(P.apply(y), pen);
    const auto rhs = prox_l2q(y, pen);
    REQUIRE(lhs.size() == rhs.size());
    for (std::size_t k = 0; k < lhs.size(); ++k)
      CHECK(near(lhs.minimizers[k], P.apply(rhs.minimizers[k]), 1e-12));
  }
}
