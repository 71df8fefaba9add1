#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "rthy/channels.hpp"
#include "rthy/errors.hpp"
#include "rthy/majorize.hpp"
#include "rthy/measures.hpp"

using namespace rthy;
using fx::q;

namespace {

Vector delta(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

StateMonotone fmk(std::size_t m, std::size_t k) {
  return [=](const Encoding& x) { return weight_fmk(x, m, k); };
}

StateMonotone weight_monotone() {
  return [](const Encoding& x) { return Extended(weight(x)); };
}

}  // namespace

TEST_CASE("the channels reduce to the Shor encodings on the first input") {
  auto px = fx::psi_x(), py = fx::psi_y();
  CHECK(px.hypotheses() == 3);
  CHECK(px.outputs() == 4);
  CHECK(apply_input(px, delta(3, 0)) == fx::shor_x());
  CHECK(apply_input(py, delta(3, 0)) == fx::shor_y());
  CHECK(apply_input(px, std::size_t{0}) == fx::shor_x());
  CHECK(px(0, 0, 0) == q(1, 2));
  CHECK_THROWS_AS(apply_input(px, delta(2, 0)), Error);
  CHECK_THROWS_AS(apply_input(px, fx::vec({1, 1, -1})), Error);
  CHECK_THROWS_AS(ChannelEncoding(2, 2, RationalMatrix::from_rows({{1, 1, 1}})), Error);
}

TEST_CASE("the cyclic post-processings simulate each channel from its state") {
  CHECK(is_comb_witness(fx::shor_x(), fx::psi_x(), fx::sigma_x()));
  CHECK(is_comb_witness(fx::shor_y(), fx::psi_y(), fx::sigma_y()));
  CHECK_FALSE(is_comb_witness(fx::shor_x(), fx::psi_x(), fx::sigma_y()));
  auto s = comb_simulates(fx::shor_x(), fx::psi_x());
  REQUIRE(s.convertible);
  CHECK(is_comb_witness(fx::shor_x(), fx::psi_x(), *s.witness));
  CHECK(channel_equivalent(fx::psi_x(), fx::shor_x()));
  CHECK(channel_equivalent(fx::psi_y(), fx::shor_y()));
  CHECK_FALSE(channel_equivalent(fx::psi_x(), fx::shor_y()));
  CHECK_FALSE(channel_equivalent(fx::psi_y(), fx::shor_x()));

  auto no = comb_simulates(fx::shor_y(), fx::psi_x());
  CHECK_FALSE(no.convertible);
  REQUIRE(no.farkas);
  LpOutcome o;
  o.farkas = no.farkas;
  CHECK(verify_certificate(comb_lp(fx::shor_y(), fx::psi_x()), o));
  CHECK_THROWS_AS(comb_simulates(fx::binary(1, 0), fx::psi_x()), Error);
}

TEST_CASE("channel yields of the rank-weight monotones") {
  auto yx = channel_yield(fx::psi_x(), fmk(2, 3), YieldMode::deltas());
  CHECK(yx.value == Extended(q(1, 4)));
  CHECK(yx.exact);
  CHECK(yx.evaluated == 3);
  CHECK(yx.argmax == delta(3, 0));
  auto yy = channel_yield(fx::psi_y(), fmk(1, 3), YieldMode::deltas());
  CHECK(yy.value == Extended(1));
  CHECK(yy.exact);
  // Every input of psi_y relabels y; psi_x loses a hypothesis once a + h wraps to 0.
  for (std::size_t a = 0; a < 3; ++a) {
    CHECK(weight_fmk(apply_input(fx::psi_y(), a), 1, 3) == Extended(1));
    CHECK(weight_fmk(apply_input(fx::psi_x(), a), 2, 3) <= Extended(q(1, 4)));
  }
  CHECK(weight_fmk(apply_input(fx::psi_x(), 1), 2, 3) < Extended(q(1, 4)));
}

TEST_CASE("yield inputs and grid refinement") {
  auto d = yield_inputs(3, YieldMode::deltas());
  CHECK(d == std::vector<Vector>{delta(3, 0), delta(3, 1), delta(3, 2)});
  auto g = yield_inputs(3, YieldMode::grid_of(2));
  REQUIRE(g.size() == 6);
  CHECK(std::vector<Vector>(g.begin(), g.begin() + 3) == d);
  for (std::size_t i = 3; i < g.size(); ++i) CHECK(is_distribution(g[i]));
  CHECK_THROWS_AS(yield_inputs(3, YieldMode::grid_of(0)), Error);

  std::mt19937 rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    auto psi = ChannelEncoding::from_function(2, 2, [&](std::size_t, std::size_t) {
      return fx::random_distribution(rng, 3, 3);
    });
    auto coarse = channel_yield(psi, weight_monotone(), YieldMode::deltas());
    auto fine = channel_yield(psi, weight_monotone(), YieldMode::grid_of(3));
    CHECK(fine.value >= coarse.value);
    CHECK(fine.evaluated == 4);
  }
}

TEST_CASE("a lifted state is equivalent to the state") {
  std::mt19937 rng(72);
  for (int trial = 0; trial < 20; ++trial) {
    auto x = fx::random_encoding(rng, 3, 2, 3);
    auto psi = lift_state(x, 2);
    CHECK(apply_input(psi, fx::vec({q(1, 3), q(2, 3)})) == x);
    CHECK(channel_equivalent(psi, x));
    auto y = channel_yield(psi, weight_monotone(), YieldMode::deltas());
    CHECK(y.value == Extended(weight(x)));
    CHECK(y.exact);
  }
}

TEST_CASE("free combs cannot raise the yield of a convex monotone") {
  std::mt19937 rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    auto psi = ChannelEncoding::from_function(2, 2, [&](std::size_t, std::size_t) {
      return fx::random_distribution(rng, 3, 3);
    });
    auto pre = fx::random_map(rng, 2, 3, 2);
    auto post = fx::random_map(rng, 2, 3, 2);
    auto out = free_comb(pre, psi, post);
    CHECK(out.inputs() == 3);
    CHECK(out.outputs() == 2);
    for (std::size_t a = 0; a < 3; ++a) {
      auto col = pre.matrix().col(a);
      CHECK(apply_input(out, a) == apply(post, apply_input(psi, col)));
    }
    CHECK(channel_yield(out, weight_monotone(), YieldMode::deltas()).value <=
          channel_yield(psi, weight_monotone(), YieldMode::deltas()).value);
  }
}
