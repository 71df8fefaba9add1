#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "rthy/encoding.hpp"
#include "rthy/extended.hpp"
#include "rthy/lp.hpp"

namespace rthy {

// Stochastic map H x A -> B. Column hyp * inputs + input of the matrix is
// the output distribution for that (hypothesis, input) pair.
class ChannelEncoding {
 public:
  ChannelEncoding() = default;
  // matrix is outputs x (hypotheses * inputs); throws DimensionMismatch, NotStochastic.
  ChannelEncoding(std::size_t hypotheses, std::size_t inputs, RationalMatrix m);
  // f(h, a) gives the column for hypothesis h and input a.
  static ChannelEncoding from_function(std::size_t hypotheses, std::size_t inputs,
                                       const std::function<Vector(std::size_t, std::size_t)>& f);

  std::size_t hypotheses() const { return h_; }
  std::size_t inputs() const { return a_; }
  std::size_t outputs() const { return m_.rows(); }
  const RationalMatrix& matrix() const { return m_; }
  Vector column(std::size_t hyp, std::size_t input) const { return m_.col(hyp * a_ + input); }
  const Rational& operator()(std::size_t out, std::size_t hyp, std::size_t input) const {
    return m_(out, hyp * a_ + input);
  }
  friend bool operator==(const ChannelEncoding&, const ChannelEncoding&) = default;

 private:
  std::size_t h_ = 0, a_ = 0;
  RationalMatrix m_;
};

// Column h of the result is sum_a mu(a) psi(h, a). Throws LengthMismatch, NotStochastic.
Encoding apply_input(const ChannelEncoding& psi, const Vector& mu);
Encoding apply_input(const ChannelEncoding& psi, std::size_t input);

// The channel that ignores its input and reproduces x.
ChannelEncoding lift_state(const Encoding& x, std::size_t inputs);

// Hypothesis-independent pre- and post-processing: pre maps new inputs to
// old inputs, post maps old outputs to new outputs.
ChannelEncoding free_comb(const StochasticMap& pre, const ChannelEncoding& psi, const StochasticMap& post);

// Variables sigma(b'|b,a) at (a * |B| + b) * |B'| + b'. Rows: one per
// (h, a, b'), then one normalization row per (a, b). Throws HypothesisMismatch.
LpProblem comb_lp(const Encoding& x, const ChannelEncoding& psi);

struct CombSimulation {
  bool convertible = false;
  std::optional<std::vector<StochasticMap>> witness;  // one post-processing per input
  std::optional<Vector> farkas;
};

// Is psi(.|., a) = sigma_a . x for some stochastic sigma_a, for every input a.
CombSimulation comb_simulates(const Encoding& x, const ChannelEncoding& psi);
bool is_comb_witness(const Encoding& x, const ChannelEncoding& psi, const std::vector<StochasticMap>& sigma);

// x simulates psi through an input-copy comb, and some delta input of psi
// post-processes to x.
bool channel_equivalent(const ChannelEncoding& psi, const Encoding& x);

struct YieldMode {
  enum class Kind { Deltas, Grid } kind = Kind::Deltas;
  std::size_t grid = 0;  // denominator, Grid only
  static YieldMode deltas() { return {}; }
  static YieldMode grid_of(std::size_t g) { return {Kind::Grid, g}; }
};

struct ChannelYield {
  Extended value;
  Vector argmax;             // first maximizing input in evaluation order
  bool exact = false;        // false means value is only a lower bound
  std::size_t evaluated = 0;
};

using StateMonotone = std::function<Extended(const Encoding&)>;

// Inputs in evaluation order: the deltas, then the remaining grid points
// in lexicographic order of their numerators. Throws EnumerationTooLarge.
std::vector<Vector> yield_inputs(std::size_t inputs, const YieldMode& mode);

// f may be called concurrently.
ChannelYield channel_yield(const ChannelEncoding& psi, const StateMonotone& f, const YieldMode& mode);

}  // namespace rthy
