#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rthy/errors.hpp"
#include "rthy/order.hpp"

using namespace rthy;

namespace {

FinitePreorder chain() { return FinitePreorder::from_generators(3, {{2, 1}, {1, 0}}); }

FinitePreorder random_preorder(std::mt19937& rng, std::size_t n) {
  std::bernoulli_distribution coin(0.25);
  std::vector<std::pair<std::size_t, std::size_t>> gens;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && coin(rng)) gens.emplace_back(a, b);
  return FinitePreorder::from_generators(n, gens);
}

ElementSet random_set(std::mt19937& rng, std::size_t n) {
  ElementSet s(n);
  std::bernoulli_distribution coin(0.4);
  for (std::size_t i = 0; i < n; ++i)
    if (coin(rng)) s.set(i);
  return s;
}

}  // namespace

TEST_CASE("closures on the three-element chain") {
  auto p = chain();
  CHECK(down_closure(p, make_set(3, {1})) == make_set(3, {0, 1}));
  CHECK(up_closure(p, make_set(3, {1})) == make_set(3, {1, 2}));
  CHECK(down_closure(p, make_set(3)) == make_set(3));
  CHECK(up_closure(p, make_set(3, {0, 1, 2})) == make_set(3, {0, 1, 2}));
  auto d = FinitePreorder::discrete(3);
  CHECK(down_closure(d, make_set(3, {2})) == make_set(3, {2}));
  CHECK_THROWS_AS(down_closure(p, make_set(4, {1})), Error);
  CHECK_THROWS_AS(make_set(3, {3}), Error);
}

TEST_CASE("enhancement and degradation on the chain and the discrete order") {
  auto p = chain();
  auto d = FinitePreorder::discrete(2);
  CHECK(enhancement_leq(p, make_set(3, {2}), make_set(3, {0, 1})));
  CHECK(enhancement_leq(p, make_set(3, {0}), make_set(3)));
  CHECK_FALSE(enhancement_leq(d, make_set(2, {0}), make_set(2, {1})));
  CHECK(degradation_leq(p, make_set(3), make_set(3, {1})));
  CHECK(degradation_leq(p, make_set(3, {0, 1}), make_set(3, {0})));
  CHECK_FALSE(degradation_leq(d, make_set(2, {0}), make_set(2, {1})));
}

TEST_CASE("downward closed sets") {
  auto p = chain();
  CHECK(downsets_fixed(p, down_closure(p, make_set(3, {2}))));
  CHECK_FALSE(downsets_fixed(p, make_set(3, {2})));
  CHECK(downsets_fixed(p, make_set(3)));
}

TEST_CASE("construction rejects non-reflexive relations and closes transitively") {
  std::vector<ElementSet> rel{make_set(2, {0, 1}), make_set(2)};
  CHECK_THROWS_AS(FinitePreorder{rel}, Error);
  std::vector<ElementSet> open{make_set(3, {0, 1}), make_set(3, {1, 2}), make_set(3, {2})};
  FinitePreorder p(open);
  CHECK(p.geq(0, 2));
  CHECK(p == FinitePreorder::from_generators(3, {{0, 1}, {1, 2}}));
  CHECK_THROWS_AS(FinitePreorder::from_generators(2, {{0, 5}}), Error);
}

TEST_CASE("closure operators are idempotent and extensive on random preorders") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 7;
    auto p = random_preorder(rng, n);
    auto Y = random_set(rng, n);
    auto down = down_closure(p, Y), up = up_closure(p, Y);
    CHECK(down_closure(p, down) == down);
    CHECK(up_closure(p, up) == up);
    CHECK(Y.is_subset_of(down));
    CHECK(Y.is_subset_of(up));
    CHECK(downsets_fixed(p, down));
  }
}

TEST_CASE("enhancement order: extension, reflexivity, transitivity and unions") {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 6;
    auto p = random_preorder(rng, n);
    auto X = random_set(rng, n), Y = random_set(rng, n), Z = random_set(rng, n);
    CHECK(enhancement_leq(p, X | Y, Y));
    CHECK(enhancement_leq(p, X, X));
    if (enhancement_leq(p, X, Y) && enhancement_leq(p, Y, Z)) CHECK(enhancement_leq(p, X, Z));
    if (enhancement_leq(p, X, Y) && enhancement_leq(p, X, Z)) CHECK(enhancement_leq(p, X, Y | Z));
  }
}

TEST_CASE("closure decisions match brute-force function search on small carriers") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + trial % 6;
    auto p = random_preorder(rng, n);
    auto Y = random_set(rng, n), Z = random_set(rng, n);
    auto ym = members(Y), zm = members(Z);
    CHECK(enhancement_leq(p, Y, Z) == oracle::enhancement_brute(p, ym, zm));
    CHECK(degradation_leq(p, Y, Z) == oracle::degradation_brute(p, ym, zm));
  }
}

TEST_CASE("strict pairs regenerate the preorder") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    auto p = random_preorder(rng, 5);
    CHECK(FinitePreorder::from_generators(5, p.strict_pairs()) == p);
  }
  CHECK(fx::all_preorders(3).size() == 29);
}
