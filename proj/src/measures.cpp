#include "rthy/measures.hpp"

#include <set>
#include <string>

#include "rthy/errors.hpp"
#include "rthy/guard.hpp"
#include "rthy/lp.hpp"
#include "rthy/matrix.hpp"

namespace rthy {

namespace {

std::size_t slot_dim(const Slot& s) {
  if (const auto* v = std::get_if<Vector>(&s)) return v->size();
  const auto& h = std::get<HullSlot>(s);
  return h.vertices.empty() ? SIZE_MAX : h.vertices[0].size();
}

// Adds weights w_i >= 0 for the slot's vertices and returns them; the slot
// contributes sum_i w_i v_i with sum_i w_i tied to `mass` by the caller.
std::vector<std::size_t> add_weights(LinearProgram& lp, const HullSlot& h) {
  std::vector<std::size_t> w;
  for (std::size_t i = 0; i < h.vertices.size(); ++i) w.push_back(lp.add_variable());
  return w;
}

}  // namespace

Extended cva_optimize(const Slot& x, const Slot& y, const Slot& z) {
  std::size_t d = SIZE_MAX;
  for (const Slot* s : {&x, &y, &z}) {
    std::size_t sd = slot_dim(*s);
    if (sd == SIZE_MAX) continue;
    if (d != SIZE_MAX && sd != d) throw Error(ErrorKind::ShapeMismatch, "slots of different dimension");
    d = sd;
  }
  for (const Slot* s : {&x, &y, &z})
    if (const auto* h = std::get_if<HullSlot>(s))
      for (const auto& v : h->vertices)
        if (v.size() != d) throw Error(ErrorKind::ShapeMismatch, "vertex of wrong dimension");
  if (d == SIZE_MAX) return Extended::pos_inf();  // every slot is an empty hull

  // x = lambda y + (1 - lambda) z, written as
  //   sum_k c_k u_k - sum_i a_i v_i - sum_j b_j w_j = 0
  // with sum c = 1, sum a = lambda, sum b = 1 - lambda. A fixed slot turns its
  // weighted sum into a multiple of its point (1, lambda, 1 - lambda).
  LinearProgram lp;
  std::size_t lambda = lp.add_variable(false, Rational(1));
  lp.set_cost(lambda, 1);
  std::vector<Terms> rows(d);
  Vector rhs(d);

  auto attach = [&](const Slot& s, int sign, int mass) {
    // mass: 0 -> 1, 1 -> lambda, 2 -> 1 - lambda
    if (const auto* v = std::get_if<Vector>(&s)) {
      for (std::size_t e = 0; e < d; ++e) {
        const Rational& c = (*v)[e];
        if (c.is_zero()) continue;
        if (mass == 0) rhs[e] -= Rational(sign) * c;
        if (mass == 1) rows[e].emplace_back(lambda, Rational(sign) * c);
        if (mass == 2) {
          rhs[e] -= Rational(sign) * c;
          rows[e].emplace_back(lambda, Rational(-sign) * c);
        }
      }
      return;
    }
    const auto& h = std::get<HullSlot>(s);
    auto w = add_weights(lp, h);
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t e = 0; e < d; ++e)
        if (!h.vertices[i][e].is_zero()) rows[e].emplace_back(w[i], Rational(sign) * h.vertices[i][e]);
    Terms sum;
    for (auto wi : w) sum.emplace_back(wi, 1);
    if (mass == 0) lp.add_constraint(sum, Sense::Eq, 1);
    if (mass == 1) {
      sum.emplace_back(lambda, -1);
      lp.add_constraint(sum, Sense::Eq, 0);
    }
    if (mass == 2) {
      sum.emplace_back(lambda, 1);
      lp.add_constraint(sum, Sense::Eq, 1);
    }
  };
  attach(x, 1, 0);
  attach(y, -1, 1);
  attach(z, -1, 2);
  for (std::size_t e = 0; e < d; ++e) lp.add_constraint(rows[e], Sense::Eq, rhs[e]);

  auto sol = lp.solve();
  if (sol.status != LpStatus::Optimal) return Extended::pos_inf();
  return sol.values[lambda];
}

bool in_convex_hull(const Vector& p, const std::vector<Vector>& vs) {
  if (vs.empty()) return false;
  LinearProgram lp;
  std::size_t first = lp.add_variables(vs.size());
  Terms sum;
  for (std::size_t i = 0; i < vs.size(); ++i) sum.emplace_back(first + i, 1);
  lp.add_constraint(sum, Sense::Eq, 1);
  for (std::size_t e = 0; e < p.size(); ++e) {
    Terms row;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (vs[i].size() != p.size()) throw Error(ErrorKind::ShapeMismatch, "vertex of wrong dimension");
      if (!vs[i][e].is_zero()) row.emplace_back(first + i, vs[i][e]);
    }
    lp.add_constraint(row, Sense::Eq, p[e]);
  }
  return lp.solve().status == LpStatus::Optimal;
}

Vector flatten(const Encoding& x) { return x.matrix().entries(); }

static void same_shape(const Encoding& a, const Encoding& b) {
  if (a.outcomes() != b.outcomes() || a.hypotheses() != b.hypotheses())
    throw Error(ErrorKind::ShapeMismatch, std::to_string(a.outcomes()) + "x" + std::to_string(a.hypotheses()) + " vs " +
                                              std::to_string(b.outcomes()) + "x" + std::to_string(b.hypotheses()));
}

Extended cva(const Encoding& x, const Encoding& y, const Encoding& z) {
  same_shape(x, y);
  same_shape(x, z);
  return cva_optimize(flatten(x), flatten(y), flatten(z));
}

std::vector<Encoding> free_vertices(std::size_t outcomes, std::size_t hypotheses) {
  std::vector<Encoding> out;
  for (std::size_t a = 0; a < outcomes; ++a) {
    Vector col(outcomes);
    col[a] = 1;
    out.push_back(Encoding::constant(col, hypotheses));
  }
  return out;
}

// Specialized LPs below use the half-space description of the stochastic
// matrices (nonnegative, unit column sums) instead of their n^h vertices.

Rational weight(const Encoding& x) {
  const std::size_t n = x.outcomes(), h = x.hypotheses();
  LinearProgram lp;
  std::size_t lambda = lp.add_variable();
  lp.set_cost(lambda, 1);
  std::size_t G = lp.add_variables(n * h);  // lambda g
  std::size_t v = lp.add_variables(n);      // (1 - lambda) s, shared column
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < h; ++c) lp.add_constraint({{G + a * h + c, 1}, {v + a, 1}}, Sense::Eq, x(a, c));
  Terms mass{{lambda, 1}};
  for (std::size_t a = 0; a < n; ++a) mass.emplace_back(v + a, 1);
  lp.add_constraint(mass, Sense::Eq, 1);
  auto sol = lp.solve();
  return sol.values.at(lambda);
}

Rational robustness(const Encoding& z) {
  const std::size_t n = z.outcomes(), h = z.hypotheses();
  LinearProgram lp;
  std::size_t lambda = lp.add_variable(false, Rational(1));
  lp.set_cost(lambda, 1);
  std::size_t Y = lp.add_variables(n * h);  // lambda y
  std::size_t v = lp.add_variables(n);      // the free result
  // Y + (1 - lambda) z = v, column by column.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < h; ++c)
      lp.add_constraint({{Y + a * h + c, 1}, {lambda, -z(a, c)}, {v + a, -1}}, Sense::Eq, -z(a, c));
  for (std::size_t c = 0; c < h; ++c) {
    Terms col{{lambda, -1}};
    for (std::size_t a = 0; a < n; ++a) col.emplace_back(Y + a * h + c, 1);
    lp.add_constraint(col, Sense::Eq, 0);
  }
  Terms mass;
  for (std::size_t a = 0; a < n; ++a) mass.emplace_back(v + a, 1);
  lp.add_constraint(mass, Sense::Eq, 1);
  return lp.solve().values.at(lambda);
}

Extended free_robustness(const Encoding& z) {
  const std::size_t n = z.outcomes(), h = z.hypotheses();
  LinearProgram lp;
  std::size_t lambda = lp.add_variable(false, Rational(1));
  lp.set_cost(lambda, 1);
  std::size_t w = lp.add_variables(n);  // lambda y, y constant
  std::size_t v = lp.add_variables(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < h; ++c)
      lp.add_constraint({{w + a, 1}, {lambda, -z(a, c)}, {v + a, -1}}, Sense::Eq, -z(a, c));
  Terms ymass{{lambda, -1}}, vmass;
  for (std::size_t a = 0; a < n; ++a) {
    ymass.emplace_back(w + a, 1);
    vmass.emplace_back(v + a, 1);
  }
  lp.add_constraint(ymass, Sense::Eq, 0);
  lp.add_constraint(vmass, Sense::Eq, 1);
  auto sol = lp.solve();
  if (sol.status != LpStatus::Optimal) return Extended::pos_inf();
  return sol.values[lambda];
}

Extended nonconvexity(const Encoding& x) {
  const std::size_t n = x.outcomes(), h = x.hypotheses();
  LinearProgram lp;
  std::size_t lambda = lp.add_variable(false, Rational(1));
  lp.set_cost(lambda, 1);
  std::size_t A = lp.add_variables(n), B = lp.add_variables(n);  // lambda a, (1 - lambda) b
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < h; ++c) lp.add_constraint({{A + a, 1}, {B + a, 1}}, Sense::Eq, x(a, c));
  Terms am{{lambda, -1}}, bm{{lambda, 1}};
  for (std::size_t a = 0; a < n; ++a) {
    am.emplace_back(A + a, 1);
    bm.emplace_back(B + a, 1);
  }
  lp.add_constraint(am, Sense::Eq, 0);
  lp.add_constraint(bm, Sense::Eq, 1);
  auto sol = lp.solve();
  if (sol.status != LpStatus::Optimal) return Extended::pos_inf();
  return sol.values[lambda];
}

std::vector<Encoding> deterministic_encodings(std::size_t outcomes, std::size_t hypotheses) {
  std::uint64_t count = saturating_pow(outcomes, hypotheses);
  std::uint64_t guard = enumeration_guard();
  if (count > guard)
    throw Error(ErrorKind::EnumerationTooLarge, std::to_string(outcomes) + "^" + std::to_string(hypotheses) +
                                                    " encodings exceed guard " + std::to_string(guard));
  std::vector<Encoding> out;
  std::vector<std::size_t> d(hypotheses, 0);
  for (;;) {
    RationalMatrix m(outcomes, hypotheses);
    for (std::size_t c = 0; c < hypotheses; ++c) m(d[c], c) = 1;
    out.emplace_back(std::move(m));
    std::size_t i = hypotheses;
    while (i > 0 && d[i - 1] == outcomes - 1) d[--i] = 0;
    if (i == 0) break;
    ++d[i - 1];
  }
  return out;
}

RankStratum rank_stratum(std::size_t outcomes, std::size_t hypotheses, std::size_t m, std::size_t k) {
  if (m < 1 || m >= k || k > hypotheses)
    throw Error(ErrorKind::BadStratumBounds, "need 1 <= m < k <= h, got m=" + std::to_string(m) + " k=" +
                                                 std::to_string(k) + " h=" + std::to_string(hypotheses));
  RankStratum s;
  s.m = m;
  s.k = k;
  for (auto& e : deterministic_encodings(outcomes, hypotheses)) {
    std::size_t r = rank(e.matrix());
    if (r <= m)
      s.lower.push_back(std::move(e));
    else if (r <= k)
      s.upper.push_back(std::move(e));
  }
  return s;
}

Extended weight_fmk(const Encoding& x, std::size_t m, std::size_t k) {
  RankStratum s = rank_stratum(x.outcomes(), x.hypotheses(), m, k);
  HullSlot up, low;
  for (const auto& e : s.upper) up.vertices.push_back(flatten(e));
  for (const auto& e : s.lower) low.vertices.push_back(flatten(e));
  return cva_optimize(flatten(x), up, low);
}

}  // namespace rthy
