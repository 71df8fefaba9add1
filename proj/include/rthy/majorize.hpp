#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rthy/encoding.hpp"
#include "rthy/lp.hpp"
#include "rthy/quantale.hpp"

namespace rthy {

struct Majorization {
  bool convertible = false;
  std::optional<StochasticMap> witness;  // t with t . x = y
  std::optional<Vector> farkas;          // certificate for majorization_lp(x, y)
};

// Feasibility LP for t in T[A_x, A_y] with t . x = y. Variable t(j, i) sits
// at column j * x.outcomes() + i; rows are the h * y.outcomes() matching
// constraints followed by the x.outcomes() column sums.
LpProblem majorization_lp(const Encoding& x, const Encoding& y);

// Throws HypothesisMismatch.
Majorization majorizes(const Encoding& x, const Encoding& y);

// All k^n deterministic maps n -> k, lexicographic in (d(0), ..., d(n-1)).
// Throws EnumerationTooLarge past the guard.
std::vector<StochasticMap> det_postprocessings(std::size_t n, std::size_t k);

// Drops zero rows and merges proportional rows (first-occurrence order).
Encoding sufficient_statistic(const Encoding& x);

using Point2 = std::pair<Rational, Rational>;

// Counterclockwise from the lexicographically least vertex, no collinear points.
struct Zonotope2 {
  std::vector<Point2> vertices;
  bool contains(const Point2& p) const;
};

std::vector<Point2> convex_hull(std::vector<Point2> points);

// Throws WrongHypothesisCount unless x has two hypotheses.
Zonotope2 zonotope(const Encoding& x);
bool zonotope_includes(const Encoding& x, const Encoding& y);

// Throws DimensionMismatch unless z has k outcomes and x's hypothesis count.
bool markotope_contains(const Encoding& x, const Encoding& z, std::size_t k);
// k-outcome image of x contains that of y; for k = 2 this is zonotope
// inclusion at any hypothesis count. Throws HypothesisMismatch, EnumerationTooLarge.
bool markotope_includes(const Encoding& x, const Encoding& y, std::size_t k);

// Throws LengthMismatch, ZeroReference, NotStochastic.
std::vector<Point2> lorenz(const Vector& x, const Vector& r);
// Height of a Lorenz curve at abscissa t in [0, 1].
Rational lorenz_height(const std::vector<Point2>& curve, const Rational& t);

Majorization relative_majorizes(const Vector& x, const Vector& rx, const Vector& y, const Vector& ry);

// Columns are the push-forwards of x along each map of g, in g's order.
Encoding orbit_encoding(const Vector& x, const PermutationAction& g);

}  // namespace rthy
