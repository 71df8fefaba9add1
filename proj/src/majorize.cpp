#include "rthy/majorize.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rthy/errors.hpp"
#include "rthy/guard.hpp"

namespace rthy {

LpProblem majorization_lp(const Encoding& x, const Encoding& y) {
  if (x.hypotheses() != y.hypotheses())
    throw Error(ErrorKind::HypothesisMismatch,
                std::to_string(x.hypotheses()) + " vs " + std::to_string(y.hypotheses()) + " hypotheses");
  const std::size_t nx = x.outcomes(), ny = y.outcomes(), h = x.hypotheses();
  RationalMatrix A(h * ny + nx, ny * nx);
  Vector b(h * ny + nx);
  for (std::size_t c = 0; c < h; ++c)
    for (std::size_t j = 0; j < ny; ++j) {
      std::size_t row = c * ny + j;
      for (std::size_t i = 0; i < nx; ++i) A(row, j * nx + i) = x(i, c);
      b[row] = y(j, c);
    }
  for (std::size_t i = 0; i < nx; ++i) {
    std::size_t row = h * ny + i;
    for (std::size_t j = 0; j < ny; ++j) A(row, j * nx + i) = 1;
    b[row] = 1;
  }
  return LpProblem(std::move(A), std::move(b), Vector(ny * nx));
}

Majorization majorizes(const Encoding& x, const Encoding& y) {
  LpProblem p = majorization_lp(x, y);
  LpOutcome o = lp_solve(p);
  Majorization r;
  if (o.status == LpStatus::Infeasible) {
    r.farkas = o.farkas;
    return r;
  }
  const std::size_t nx = x.outcomes(), ny = y.outcomes();
  RationalMatrix t(ny, nx);
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i) t(j, i) = (*o.primal)[j * nx + i];
  r.convertible = true;
  r.witness = StochasticMap(std::move(t));
  return r;
}

std::vector<StochasticMap> det_postprocessings(std::size_t n, std::size_t k) {
  std::uint64_t count = saturating_pow(k, n);
  std::uint64_t guard = enumeration_guard();
  if (count > guard)
    throw Error(ErrorKind::EnumerationTooLarge,
                std::to_string(k) + "^" + std::to_string(n) + " maps exceed guard " + std::to_string(guard));
  std::vector<StochasticMap> out;
  if (k == 0) return out;
  out.reserve(count);
  std::vector<std::size_t> d(n, 0);
  for (;;) {
    out.push_back(StochasticMap::deterministic(d, k));
    std::size_t i = n;
    while (i > 0 && d[i - 1] == k - 1) d[--i] = 0;
    if (i == 0) break;
    ++d[i - 1];
  }
  return out;
}

Encoding sufficient_statistic(const Encoding& x) {
  const std::size_t h = x.hypotheses();
  std::vector<Vector> rows;
  for (std::size_t a = 0; a < x.outcomes(); ++a) {
    Vector r = x.matrix().row(a);
    if (std::all_of(r.begin(), r.end(), [](const Rational& v) { return v.is_zero(); })) continue;
    bool merged = false;
    for (auto& s : rows) {
      // r and s are proportional iff every 2x2 minor vanishes.
      bool prop = true;
      for (std::size_t c = 0; c < h && prop; ++c)
        for (std::size_t d = c + 1; d < h && prop; ++d) prop = r[c] * s[d] == r[d] * s[c];
      if (prop) {
        for (std::size_t c = 0; c < h; ++c) s[c] += r[c];
        merged = true;
        break;
      }
    }
    if (!merged) rows.push_back(std::move(r));
  }
  return Encoding(RationalMatrix::from_rows(rows));
}

static Rational cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point2> hull;
  for (int pass = 0; pass < 2; ++pass) {
    std::size_t start = hull.size();
    for (const auto& p : pts) {
      while (hull.size() >= start + 2 && cross(hull[hull.size() - 2], hull.back(), p).sign() <= 0) hull.pop_back();
      hull.push_back(p);
    }
    hull.pop_back();
    std::reverse(pts.begin(), pts.end());
  }
  return hull;
}

bool Zonotope2::contains(const Point2& p) const {
  const auto& v = vertices;
  if (v.empty()) return false;
  if (v.size() == 1) return v[0] == p;
  if (v.size() == 2) {
    if (!cross(v[0], v[1], p).is_zero()) return false;
    auto [lo1, hi1] = std::minmax(v[0].first, v[1].first);
    auto [lo2, hi2] = std::minmax(v[0].second, v[1].second);
    return lo1 <= p.first && p.first <= hi1 && lo2 <= p.second && p.second <= hi2;
  }
  for (std::size_t i = 0; i < v.size(); ++i)
    if (cross(v[i], v[(i + 1) % v.size()], p).sign() < 0) return false;
  return true;
}

Zonotope2 zonotope(const Encoding& x) {
  if (x.hypotheses() != 2)
    throw Error(ErrorKind::WrongHypothesisCount, "zonotope needs 2 hypotheses, got " + std::to_string(x.hypotheses()));
  Encoding s = sufficient_statistic(x);
  std::vector<Point2> pts;
  for (const auto& t : det_postprocessings(s.outcomes(), 2)) {
    Encoding img = apply(t, s);
    pts.emplace_back(img(0, 0), img(0, 1));
  }
  return Zonotope2{convex_hull(std::move(pts))};
}

bool zonotope_includes(const Encoding& x, const Encoding& y) {
  Zonotope2 zx = zonotope(x), zy = zonotope(y);
  return std::all_of(zy.vertices.begin(), zy.vertices.end(), [&](const Point2& p) { return zx.contains(p); });
}

bool markotope_contains(const Encoding& x, const Encoding& z, std::size_t k) {
  if (z.outcomes() != k || z.hypotheses() != x.hypotheses())
    throw Error(ErrorKind::DimensionMismatch, "target must have k outcomes and the same hypotheses");
  return lp_solve(majorization_lp(x, z)).status != LpStatus::Infeasible;
}

bool markotope_includes(const Encoding& x, const Encoding& y, std::size_t k) {
  if (x.hypotheses() != y.hypotheses())
    throw Error(ErrorKind::HypothesisMismatch, std::to_string(x.hypotheses()) + " vs " + std::to_string(y.hypotheses()));
  // The k-outcome image of y is the hull of its deterministic post-processings.
  for (const auto& d : det_postprocessings(y.outcomes(), k))
    if (!markotope_contains(x, apply(d, y), k)) return false;
  return true;
}

std::vector<Point2> lorenz(const Vector& x, const Vector& r) {
  if (x.size() != r.size())
    throw Error(ErrorKind::LengthMismatch, std::to_string(x.size()) + " vs " + std::to_string(r.size()));
  for (const auto& v : r)
    if (v.is_zero()) throw Error(ErrorKind::ZeroReference, "reference has a zero entry");
  if (!is_distribution(x) || !is_distribution(r)) throw Error(ErrorKind::NotStochastic, "lorenz inputs must be distributions");
  std::vector<std::size_t> idx(x.size());
  std::iota(idx.begin(), idx.end(), 0);
  // x_i / r_i > x_j / r_j  iff  x_i r_j > x_j r_i  (r positive)
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return x[i] * r[j] > x[j] * r[i]; });
  std::vector<Point2> curve{{Rational(0), Rational(0)}};
  Rational cx, cy;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    cx += r[idx[k]];
    cy += x[idx[k]];
    bool tie_next = k + 1 < idx.size() && x[idx[k]] * r[idx[k + 1]] == x[idx[k + 1]] * r[idx[k]];
    if (!tie_next) curve.emplace_back(cx, cy);
  }
  return curve;
}

Rational lorenz_height(const std::vector<Point2>& curve, const Rational& t) {
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    const auto& [x0, y0] = curve[i];
    const auto& [x1, y1] = curve[i + 1];
    if (x0 <= t && t <= x1) return y0 + (y1 - y0) * (t - x0) / (x1 - x0);
  }
  throw Error(ErrorKind::IndexOutOfRange, "abscissa outside the curve");
}

Majorization relative_majorizes(const Vector& x, const Vector& rx, const Vector& y, const Vector& ry) {
  if (x.size() != rx.size() || y.size() != ry.size()) throw Error(ErrorKind::LengthMismatch, "distribution vs reference");
  return majorizes(Encoding::from_columns({x, rx}), Encoding::from_columns({y, ry}));
}

Encoding orbit_encoding(const Vector& x, const PermutationAction& g) {
  if (x.size() != g.carrier()) throw Error(ErrorKind::DimensionMismatch, "distribution length differs from action carrier");
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < g.size(); ++k) {
    Vector c(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) c[g.map(k)[i]] += x[i];
    cols.push_back(std::move(c));
  }
  return Encoding::from_columns(cols);
}

}  // namespace rthy
