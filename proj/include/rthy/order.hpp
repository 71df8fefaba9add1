#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace rthy {

using ElementSet = boost::dynamic_bitset<>;

ElementSet make_set(std::size_t n, std::initializer_list<std::size_t> members = {});
ElementSet make_set(std::size_t n, const std::vector<std::size_t>& members);
std::vector<std::size_t> members(const ElementSet& s);

// Finite preorder; a >= b is stored as below(a) containing b.
class FinitePreorder {
 public:
  FinitePreorder() = default;
  // Full relation: rel[a] = {b : a >= b}. Throws NotReflexive if some
  // rel[a] lacks a; transitively closed on construction.
  explicit FinitePreorder(std::vector<ElementSet> rel);
  // Generator pairs (a, b) meaning a >= b; reflexive-transitive closure.
  static FinitePreorder from_generators(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
  static FinitePreorder discrete(std::size_t n);

  std::size_t size() const { return below_.size(); }
  bool geq(std::size_t a, std::size_t b) const { return below_.at(a).test(b); }
  const ElementSet& below(std::size_t a) const { return below_.at(a); }
  const ElementSet& above(std::size_t a) const { return above_.at(a); }
  // Generating pairs of the closed relation without reflexive pairs.
  std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const;

  friend bool operator==(const FinitePreorder& a, const FinitePreorder& b) { return a.below_ == b.below_; }

 private:
  std::vector<ElementSet> below_, above_;
};

// Throw IndexOutOfRange unless Y is a subset of p's carrier.
ElementSet down_closure(const FinitePreorder& p, const ElementSet& Y);
ElementSet up_closure(const FinitePreorder& p, const ElementSet& Y);
// Y >=_enh Z.
bool enhancement_leq(const FinitePreorder& p, const ElementSet& Y, const ElementSet& Z);
// Y >=_deg Z.
bool degradation_leq(const FinitePreorder& p, const ElementSet& Y, const ElementSet& Z);
bool downsets_fixed(const FinitePreorder& p, const ElementSet& D);

}  // namespace rthy
