#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "rthy/channels.hpp"
#include "rthy/encoding.hpp"
#include "rthy/monotone.hpp"
#include "rthy/quantale.hpp"

namespace fx {

using rthy::Rational;

inline Rational q(long p, long d = 1) { return Rational(p, d); }
rthy::Vector vec(std::initializer_list<Rational> v);
rthy::Encoding rows(const std::vector<std::vector<Rational>>& r);

// The two 3-hypothesis encodings with incomparable information.
rthy::Encoding shor_x();
rthy::Encoding shor_y();
// 2-outcome coarse-graining of shor_x, and the map producing it.
rthy::Encoding coarse_x();
rthy::StochasticMap coarse_map();

// Channel versions of shor_x / shor_y and the post-processings that
// realize them from the states.
rthy::ChannelEncoding psi_x();
rthy::ChannelEncoding psi_y();
std::vector<rthy::StochasticMap> sigma_x();
std::vector<rthy::StochasticMap> sigma_y();

// Binary encodings whose first row is (a, b).
rthy::Encoding binary(const Rational& a, const Rational& b);

// {0,1,2}, all maps, free: f(x) <= x.
rthy::FunctionModule chain3();
// {0,1,2,1'}, all maps, free: f(x) below x where 2 >= 1 >= 0, 2 >= 1' >= 0.
rthy::FunctionModule chain3_plus();
// {0,1,2,0',1',2'}: free maps f(x) <= x inside each copy, plus the
// level-shifting map u.
struct TwoCopies {
  rthy::FunctionModule fm;
  std::size_t u;
};
TwoCopies two_copies();
// {s,a1,a2,a3}, all maps, only the identity free; the cyclic action.
rthy::FunctionModule star4();
rthy::PermutationAction cyclic4();
std::size_t atom_of(const rthy::FunctionModule& fm, const rthy::PartialMap& f);

// Identity valuation on the named atoms.
rthy::PartialValuation name_values(std::size_t n, const std::vector<std::pair<std::size_t, long>>& values);

// Module from a preorder: the identity plus one partial map a -> b per
// ordered pair; free keeps the pairs with a >= b.
rthy::FiniteQuantaleModule preorder_module(const rthy::FinitePreorder& p);
// All preorders on n points (by brute force over relations).
std::vector<rthy::FinitePreorder> all_preorders(std::size_t n);

// Random data with entries on a grid of denominator `denom`.
rthy::Vector random_distribution(std::mt19937& rng, std::size_t n, long denom);
rthy::Encoding random_encoding(std::mt19937& rng, std::size_t outcomes, std::size_t hypotheses, long denom);
rthy::StochasticMap random_map(std::mt19937& rng, std::size_t to, std::size_t from, long denom);
// Integer values in [0, 3]; on `domain` if given, else on a random subset.
rthy::PartialValuation random_valuation(std::mt19937& rng, std::size_t n, const rthy::ElementSet* domain = nullptr);
// Monotone for p on domain: sum of random weights over the down-set.
rthy::PartialValuation random_monotone(std::mt19937& rng, const rthy::FinitePreorder& p, const rthy::ElementSet& domain);
rthy::TSet random_tset(std::mt19937& rng, std::size_t n);

}  // namespace fx
