#include "rthy/order.hpp"

#include <string>

#include "rthy/errors.hpp"

namespace rthy {

ElementSet make_set(std::size_t n, std::initializer_list<std::size_t> ms) {
  return make_set(n, std::vector<std::size_t>(ms));
}

ElementSet make_set(std::size_t n, const std::vector<std::size_t>& ms) {
  ElementSet s(n);
  for (auto m : ms) {
    if (m >= n) throw Error(ErrorKind::IndexOutOfRange, std::to_string(m) + " >= " + std::to_string(n));
    s.set(m);
  }
  return s;
}

std::vector<std::size_t> members(const ElementSet& s) {
  std::vector<std::size_t> out;
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

FinitePreorder::FinitePreorder(std::vector<ElementSet> rel) : below_(std::move(rel)) {
  const std::size_t n = below_.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (below_[a].size() != n) throw Error(ErrorKind::DimensionMismatch, "relation row size");
    if (!below_[a].test(a)) throw Error(ErrorKind::NotReflexive, "element " + std::to_string(a) + " is not related to itself");
  }
  // Square the relation until it stops growing.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a) {
      ElementSet next = below_[a];
      for (auto b = below_[a].find_first(); b != ElementSet::npos; b = below_[a].find_next(b)) next |= below_[b];
      if (next != below_[a]) {
        below_[a] = std::move(next);
        changed = true;
      }
    }
  }
  above_.assign(n, ElementSet(n));
  for (std::size_t a = 0; a < n; ++a)
    for (auto b = below_[a].find_first(); b != ElementSet::npos; b = below_[a].find_next(b)) above_[b].set(a);
}

FinitePreorder FinitePreorder::from_generators(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<ElementSet> rel(n, ElementSet(n));
  for (std::size_t a = 0; a < n; ++a) rel[a].set(a);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw Error(ErrorKind::IndexOutOfRange, "pair index beyond size " + std::to_string(n));
    rel[a].set(b);
  }
  return FinitePreorder(std::move(rel));
}

FinitePreorder FinitePreorder::discrete(std::size_t n) { return from_generators(n, {}); }

std::vector<std::pair<std::size_t, std::size_t>> FinitePreorder::strict_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (auto b = below_[a].find_first(); b != ElementSet::npos; b = below_[a].find_next(b))
      if (a != b) out.emplace_back(a, b);
  return out;
}

static void check_carrier(const FinitePreorder& p, const ElementSet& Y) {
  if (Y.size() != p.size())
    throw Error(ErrorKind::IndexOutOfRange,
                "set over " + std::to_string(Y.size()) + " elements used with preorder of size " + std::to_string(p.size()));
}

ElementSet down_closure(const FinitePreorder& p, const ElementSet& Y) {
  check_carrier(p, Y);
  ElementSet out(p.size());
  for (auto y = Y.find_first(); y != ElementSet::npos; y = Y.find_next(y)) out |= p.below(y);
  return out;
}

ElementSet up_closure(const FinitePreorder& p, const ElementSet& Y) {
  check_carrier(p, Y);
  ElementSet out(p.size());
  for (auto y = Y.find_first(); y != ElementSet::npos; y = Y.find_next(y)) out |= p.above(y);
  return out;
}

bool enhancement_leq(const FinitePreorder& p, const ElementSet& Y, const ElementSet& Z) {
  return down_closure(p, Z).is_subset_of(down_closure(p, Y));
}

bool degradation_leq(const FinitePreorder& p, const ElementSet& Y, const ElementSet& Z) {
  return up_closure(p, Y).is_subset_of(up_closure(p, Z));
}

bool downsets_fixed(const FinitePreorder& p, const ElementSet& D) { return down_closure(p, D) == D; }

}  // namespace rthy
