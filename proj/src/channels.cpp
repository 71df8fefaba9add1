#include "rthy/channels.hpp"

#include <algorithm>
#include <string>

#include "rthy/errors.hpp"
#include "rthy/guard.hpp"
#include "rthy/majorize.hpp"

namespace rthy {

ChannelEncoding::ChannelEncoding(std::size_t hypotheses, std::size_t inputs, RationalMatrix m)
    : h_(hypotheses), a_(inputs), m_(std::move(m)) {
  if (m_.cols() != h_ * a_)
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(m_.cols()) + " columns for " + std::to_string(h_) + " hypotheses x " +
                    std::to_string(a_) + " inputs");
  if (!is_stochastic(m_)) throw Error(ErrorKind::NotStochastic, "channel column is not a distribution");
}

ChannelEncoding ChannelEncoding::from_function(std::size_t hypotheses, std::size_t inputs,
                                               const std::function<Vector(std::size_t, std::size_t)>& f) {
  std::vector<Vector> cols;
  for (std::size_t h = 0; h < hypotheses; ++h)
    for (std::size_t a = 0; a < inputs; ++a) cols.push_back(f(h, a));
  std::size_t rows = cols.empty() ? 0 : cols[0].size();
  RationalMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error(ErrorKind::DimensionMismatch, "ragged channel columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return ChannelEncoding(hypotheses, inputs, std::move(m));
}

Encoding apply_input(const ChannelEncoding& psi, const Vector& mu) {
  if (mu.size() != psi.inputs())
    throw Error(ErrorKind::LengthMismatch,
                "input distribution has " + std::to_string(mu.size()) + " entries, channel has " +
                    std::to_string(psi.inputs()) + " inputs");
  if (!is_distribution(mu)) throw Error(ErrorKind::NotStochastic, "input is not a distribution");
  RationalMatrix m(psi.outputs(), psi.hypotheses());
  for (std::size_t h = 0; h < psi.hypotheses(); ++h)
    for (std::size_t a = 0; a < psi.inputs(); ++a) {
      if (mu[a].is_zero()) continue;
      for (std::size_t b = 0; b < psi.outputs(); ++b) m(b, h) += mu[a] * psi(b, h, a);
    }
  return Encoding(std::move(m));
}

Encoding apply_input(const ChannelEncoding& psi, std::size_t input) {
  if (input >= psi.inputs()) throw Error(ErrorKind::IndexOutOfRange, "input " + std::to_string(input));
  Vector mu(psi.inputs());
  mu[input] = 1;
  return apply_input(psi, mu);
}

ChannelEncoding lift_state(const Encoding& x, std::size_t inputs) {
  return ChannelEncoding::from_function(x.hypotheses(), inputs,
                                        [&](std::size_t h, std::size_t) { return x.column(h); });
}

ChannelEncoding free_comb(const StochasticMap& pre, const ChannelEncoding& psi, const StochasticMap& post) {
  if (pre.to() != psi.inputs() || post.from() != psi.outputs())
    throw Error(ErrorKind::DimensionMismatch, "comb does not fit the channel");
  return ChannelEncoding::from_function(psi.hypotheses(), pre.from(), [&](std::size_t h, std::size_t a2) {
    Vector mid(psi.outputs());
    for (std::size_t a = 0; a < psi.inputs(); ++a) {
      const Rational& w = pre.matrix()(a, a2);
      if (w.is_zero()) continue;
      for (std::size_t b = 0; b < psi.outputs(); ++b) mid[b] += w * psi(b, h, a);
    }
    return post.matrix() * mid;
  });
}

LpProblem comb_lp(const Encoding& x, const ChannelEncoding& psi) {
  if (x.hypotheses() != psi.hypotheses())
    throw Error(ErrorKind::HypothesisMismatch,
                std::to_string(x.hypotheses()) + " vs " + std::to_string(psi.hypotheses()) + " hypotheses");
  const std::size_t nb = x.outcomes(), na = psi.inputs(), nout = psi.outputs(), h = x.hypotheses();
  auto var = [&](std::size_t a, std::size_t b, std::size_t bp) { return (a * nb + b) * nout + bp; };
  const std::size_t match = h * na * nout;
  RationalMatrix A(match + na * nb, na * nb * nout);
  Vector rhs(match + na * nb);
  for (std::size_t c = 0; c < h; ++c)
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t bp = 0; bp < nout; ++bp) {
        std::size_t row = (c * na + a) * nout + bp;
        for (std::size_t b = 0; b < nb; ++b) A(row, var(a, b, bp)) = x(b, c);
        rhs[row] = psi(bp, c, a);
      }
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < nb; ++b) {
      std::size_t row = match + a * nb + b;
      for (std::size_t bp = 0; bp < nout; ++bp) A(row, var(a, b, bp)) = 1;
      rhs[row] = 1;
    }
  return LpProblem(std::move(A), std::move(rhs), Vector(na * nb * nout));
}

CombSimulation comb_simulates(const Encoding& x, const ChannelEncoding& psi) {
  LpProblem p = comb_lp(x, psi);
  LpOutcome o = lp_solve(p);
  CombSimulation r;
  if (o.status == LpStatus::Infeasible) {
    r.farkas = o.farkas;
    return r;
  }
  const std::size_t nb = x.outcomes(), nout = psi.outputs();
  std::vector<StochasticMap> sigma;
  for (std::size_t a = 0; a < psi.inputs(); ++a) {
    RationalMatrix s(nout, nb);
    for (std::size_t b = 0; b < nb; ++b)
      for (std::size_t bp = 0; bp < nout; ++bp) s(bp, b) = (*o.primal)[(a * nb + b) * nout + bp];
    sigma.emplace_back(std::move(s));
  }
  r.convertible = true;
  r.witness = std::move(sigma);
  return r;
}

bool is_comb_witness(const Encoding& x, const ChannelEncoding& psi, const std::vector<StochasticMap>& sigma) {
  if (x.hypotheses() != psi.hypotheses() || sigma.size() != psi.inputs()) return false;
  for (std::size_t a = 0; a < psi.inputs(); ++a) {
    if (sigma[a].from() != x.outcomes() || sigma[a].to() != psi.outputs()) return false;
    if (!(apply(sigma[a], x) == apply_input(psi, a))) return false;
  }
  return true;
}

bool channel_equivalent(const ChannelEncoding& psi, const Encoding& x) {
  if (x.hypotheses() != psi.hypotheses()) return false;
  if (!comb_simulates(x, psi).convertible) return false;
  for (std::size_t a = 0; a < psi.inputs(); ++a)
    if (majorizes(apply_input(psi, a), x).convertible) return true;
  return false;
}

std::vector<Vector> yield_inputs(std::size_t inputs, const YieldMode& mode) {
  std::vector<Vector> out;
  for (std::size_t a = 0; a < inputs; ++a) {
    Vector mu(inputs);
    mu[a] = 1;
    out.push_back(std::move(mu));
  }
  if (mode.kind == YieldMode::Kind::Deltas || inputs == 0) return out;
  const std::size_t g = mode.grid;
  if (g == 0) throw Error(ErrorKind::IndexOutOfRange, "grid denominator must be positive");
  // C(g + n - 1, n - 1), saturating.
  std::uint64_t count = 1, guard = enumeration_guard();
  for (std::size_t i = 1; i < inputs && count <= guard; ++i) count = count * (g + i) / i;
  if (count > guard)
    throw Error(ErrorKind::EnumerationTooLarge, "grid of denominator " + std::to_string(g) + " exceeds guard " +
                                                    std::to_string(guard));
  std::vector<std::size_t> n(inputs, 0);
  auto emit = [&] {
    if (std::count(n.begin(), n.end(), g) == 1) return;  // a delta, already listed
    Vector mu(inputs);
    for (std::size_t a = 0; a < inputs; ++a) mu[a] = Rational(static_cast<long>(n[a]), static_cast<long>(g));
    out.push_back(std::move(mu));
  };
  // Lexicographic walk over compositions of g into `inputs` parts.
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t left) {
    if (i + 1 == inputs) {
      n[i] = left;
      emit();
      return;
    }
    for (std::size_t v = 0; v <= left; ++v) {
      n[i] = v;
      walk(i + 1, left - v);
    }
  };
  walk(0, g);
  return out;
}

ChannelYield channel_yield(const ChannelEncoding& psi, const StateMonotone& f, const YieldMode& mode) {
  std::vector<Vector> inputs = yield_inputs(psi.inputs(), mode);
  std::vector<Extended> values(inputs.size());
  parallel_for(inputs.size(), [&](std::size_t i) { values[i] = f(apply_input(psi, inputs[i])); });
  ChannelYield r;
  r.value = Extended::neg_inf();
  r.evaluated = inputs.size();
  for (std::size_t i = 0; i < inputs.size(); ++i)
    if (values[i] > r.value) {
      r.value = values[i];
      r.argmax = inputs[i];
    }
  for (std::size_t i = 0; i < inputs.size() && !r.exact; ++i)
    if (values[i] == r.value) r.exact = channel_equivalent(psi, apply_input(psi, inputs[i]));
  return r;
}

}  // namespace rthy
