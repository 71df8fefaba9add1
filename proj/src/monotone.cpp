#include "rthy/monotone.hpp"

#include <algorithm>
#include <string>

#include "rthy/errors.hpp"

namespace rthy {

PartialValuation::PartialValuation(std::vector<Extended> values)
    : domain_(values.size()), values_(std::move(values)) {
  domain_.set();
}

void PartialValuation::set(std::size_t x, const Extended& v) {
  if (x >= carrier()) throw Error(ErrorKind::IndexOutOfRange, "valuation atom " + std::to_string(x));
  domain_.set(x);
  values_[x] = v;
}

const Extended& PartialValuation::at(std::size_t x) const {
  if (x >= carrier() || !domain_.test(x))
    throw Error(ErrorKind::IndexOutOfRange, "valuation undefined at " + std::to_string(x));
  return values_[x];
}

static void check_valuation(const FiniteQuantaleModule& m, const PartialValuation& f, std::size_t x) {
  if (f.carrier() != m.num_x()) throw Error(ErrorKind::DimensionMismatch, "valuation carrier differs from resources");
  if (x >= m.num_x()) throw Error(ErrorKind::IndexOutOfRange, "resource " + std::to_string(x));
}

static void check_right(const FiniteQuantaleModule& m, const TSet& D) {
  if (!is_right_invariant(m, D)) throw Error(ErrorKind::NotRightInvariant, "D * free differs from D");
}

static void check_left(const FiniteQuantaleModule& m, const TSet& S) {
  if (!is_left_invariant(m, S)) throw Error(ErrorKind::NotLeftInvariant, "free * S differs from S");
}

std::optional<std::size_t> yield_witness(const FiniteQuantaleModule& m, const TSet& D, const PartialValuation& f,
                                         std::size_t x) {
  check_valuation(m, f, x);
  check_right(m, D);
  XSet img = m.act(D, m.x_set({x})) & f.domain();
  std::optional<std::size_t> best;
  for (auto y = img.find_first(); y != XSet::npos; y = img.find_next(y))
    if (!best || f.at(y) > f.at(*best)) best = y;
  return best;
}

Extended yield(const FiniteQuantaleModule& m, const TSet& D, const PartialValuation& f, std::size_t x) {
  auto w = yield_witness(m, D, f, x);
  return w ? f.at(*w) : Extended::neg_inf();
}

std::optional<std::size_t> cost_witness(const FiniteQuantaleModule& m, const TSet& S, const PartialValuation& f,
                                        std::size_t x) {
  check_valuation(m, f, x);
  check_left(m, S);
  const ElementSet& A = f.domain();
  std::optional<std::size_t> best;
  for (auto y = A.find_first(); y != ElementSet::npos; y = A.find_next(y)) {
    if (!m.act(S, m.x_set({y})).test(x)) continue;
    if (!best || f.at(y) < f.at(*best)) best = y;
  }
  return best;
}

Extended cost(const FiniteQuantaleModule& m, const TSet& S, const PartialValuation& f, std::size_t x) {
  auto w = cost_witness(m, S, f, x);
  return w ? f.at(*w) : Extended::pos_inf();
}

PartialValuation yield_all(const FiniteQuantaleModule& m, const TSet& D, const PartialValuation& f) {
  std::vector<Extended> v(m.num_x());
  for (std::size_t x = 0; x < m.num_x(); ++x) v[x] = yield(m, D, f, x);
  return PartialValuation(std::move(v));
}

PartialValuation cost_all(const FiniteQuantaleModule& m, const TSet& S, const PartialValuation& f) {
  std::vector<Extended> v(m.num_x());
  for (std::size_t x = 0; x < m.num_x(); ++x) v[x] = cost(m, S, f, x);
  return PartialValuation(std::move(v));
}

static void check_carrier(const FinitePreorder& p, const PartialValuation& f) {
  if (f.carrier() != p.size()) throw Error(ErrorKind::DimensionMismatch, "valuation carrier differs from preorder");
}

bool is_monotone(const FinitePreorder& p, const PartialValuation& f) {
  check_carrier(p, f);
  for (auto [a, b] : p.strict_pairs())
    if (f.defined(a) && f.defined(b) && f.at(a) < f.at(b)) return false;
  return true;
}

InterestingRelation interesting_pairs(const FinitePreorder& p, const PartialValuation& f) {
  check_carrier(p, f);
  InterestingRelation out;
  auto dom = members(f.domain());
  for (auto a : dom)
    for (auto b : dom)
      if (f.at(a) < f.at(b) && !p.geq(a, b)) out.emplace(a, b);
  return out;
}

bool more_informative(const FinitePreorder& p, const PartialValuation& f, const PartialValuation& g) {
  auto F = interesting_pairs(p, f), G = interesting_pairs(p, g);
  return std::includes(F.begin(), F.end(), G.begin(), G.end());
}

}  // namespace rthy
