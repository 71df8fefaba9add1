#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "rthy/extended.hpp"
#include "rthy/order.hpp"
#include "rthy/quantale.hpp"

namespace rthy {

// Partial function X -> extended rationals with domain A.
class PartialValuation {
 public:
  PartialValuation() = default;
  explicit PartialValuation(std::size_t n) : domain_(n), values_(n) {}
  // Total valuation.
  explicit PartialValuation(std::vector<Extended> values);

  void set(std::size_t x, const Extended& v);
  std::size_t carrier() const { return domain_.size(); }
  const ElementSet& domain() const { return domain_; }
  bool defined(std::size_t x) const { return domain_.test(x); }
  // Throws IndexOutOfRange outside the domain.
  const Extended& at(std::size_t x) const;

  friend bool operator==(const PartialValuation&, const PartialValuation&) = default;

 private:
  ElementSet domain_;
  std::vector<Extended> values_;
};

using InterestingRelation = std::set<std::pair<std::size_t, std::size_t>>;

// sup of f over (D |> {x}) within A; -inf when empty. Throws NotRightInvariant.
Extended yield(const FiniteQuantaleModule& m, const TSet& D, const PartialValuation& f, std::size_t x);
// inf of f(y) over y in A with x in S |> {y}; +inf when empty. Throws NotLeftInvariant.
Extended cost(const FiniteQuantaleModule& m, const TSet& S, const PartialValuation& f, std::size_t x);
// Lowest-index atom attaining the yield / cost, if any.
std::optional<std::size_t> yield_witness(const FiniteQuantaleModule& m, const TSet& D, const PartialValuation& f,
                                         std::size_t x);
std::optional<std::size_t> cost_witness(const FiniteQuantaleModule& m, const TSet& S, const PartialValuation& f,
                                        std::size_t x);
// Whole-carrier versions.
PartialValuation yield_all(const FiniteQuantaleModule& m, const TSet& D, const PartialValuation& f);
PartialValuation cost_all(const FiniteQuantaleModule& m, const TSet& S, const PartialValuation& f);

// a >= b within the domain implies f(a) >= f(b).
bool is_monotone(const FinitePreorder& p, const PartialValuation& f);
// Pairs (a, b) in A x A with f(a) < f(b) and not a >= b.
InterestingRelation interesting_pairs(const FinitePreorder& p, const PartialValuation& f);
bool more_informative(const FinitePreorder& p, const PartialValuation& f, const PartialValuation& g);

}  // namespace rthy
