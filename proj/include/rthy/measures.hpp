#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "rthy/encoding.hpp"
#include "rthy/extended.hpp"

namespace rthy {

// One slot of cva(x, y, z): a fixed point, or any point of the convex hull
// of the given vertices. Points are flattened to plain vectors.
struct HullSlot {
  std::vector<Vector> vertices;
};
using Slot = std::variant<Vector, HullSlot>;

// inf over the slot choices of inf{ lambda in [0,1] : x = lambda y + (1 - lambda) z };
// +inf if no choice admits a solution. One LP, mixtures linearized through
// unnormalized weights.
Extended cva_optimize(const Slot& x, const Slot& y, const Slot& z);

// Is p in the convex hull of vs.
bool in_convex_hull(const Vector& p, const std::vector<Vector>& vs);

Vector flatten(const Encoding& x);

// Throws ShapeMismatch.
Extended cva(const Encoding& x, const Encoding& y, const Encoding& z);

// The constant encodings of a shape, as the vertices of their polytope.
std::vector<Encoding> free_vertices(std::size_t outcomes, std::size_t hypotheses);

// min lambda with x = lambda g + (1 - lambda) s, g stochastic, s constant.
Rational weight(const Encoding& x);
// min lambda with lambda y + (1 - lambda) z constant, y stochastic.
Rational robustness(const Encoding& z);
// As robustness with y constant; +inf if infeasible.
Extended free_robustness(const Encoding& z);
// min lambda with x = lambda a + (1 - lambda) b, a and b constant.
Extended nonconvexity(const Encoding& x);

// Deterministic encodings of a shape, split at rank m, capped at rank k.
struct RankStratum {
  std::size_t m = 0, k = 0;
  std::vector<Encoding> upper;  // m < rank <= k
  std::vector<Encoding> lower;  // rank <= m
};
// All outcomes^hypotheses deterministic encodings, lexicographic.
// Throws EnumerationTooLarge.
std::vector<Encoding> deterministic_encodings(std::size_t outcomes, std::size_t hypotheses);
RankStratum rank_stratum(std::size_t outcomes, std::size_t hypotheses, std::size_t m, std::size_t k);

// Rank-weight monotone f_{m,k}; throws BadStratumBounds unless 1 <= m < k <= h.
Extended weight_fmk(const Encoding& x, std::size_t m, std::size_t k);

}  // namespace rthy
