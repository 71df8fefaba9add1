#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rthy/matrix.hpp"

namespace rthy {

// min c'v  s.t.  A v = b,  v >= 0.
struct LpProblem {
  RationalMatrix A;
  Vector b;
  Vector c;

  LpProblem() = default;
  // Throws DimensionMismatch.
  LpProblem(RationalMatrix A_, Vector b_, Vector c_);
  std::size_t num_rows() const { return A.rows(); }
  std::size_t num_vars() const { return A.cols(); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* status_name(LpStatus s);

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  std::optional<Vector> primal;  // Optimal, Unbounded (a feasible point)
  std::optional<Vector> dual;    // Optimal
  std::optional<Vector> farkas;  // Infeasible: y'A <= 0, y'b > 0
  std::optional<Vector> ray;     // Unbounded: d >= 0, A d = 0, c'd < 0
  std::optional<Rational> objective;
  std::size_t pivots = 0;
};

// Two-phase dense simplex, Bland's rule.
LpOutcome lp_solve(const LpProblem& p);

// Re-checks the outcome against p by direct arithmetic.
bool verify_certificate(const LpProblem& p, const LpOutcome& o);

enum class Sense { Le, Eq, Ge };

using Terms = std::vector<std::pair<std::size_t, Rational>>;

// General LP over user variables; normalized to LpProblem by slack and
// split variables. Minimizes.
class LinearProgram {
 public:
  // Variable with lower bound 0 (or free), optional upper bound.
  std::size_t add_variable(bool free = false, std::optional<Rational> upper = std::nullopt);
  std::size_t add_variables(std::size_t n);
  std::size_t num_variables() const { return vars_.size(); }
  void set_cost(std::size_t var, const Rational& c);
  void add_constraint(Terms terms, Sense sense, Rational rhs);

  struct Solution {
    LpStatus status;
    Vector values;  // user variables, Optimal only
    std::optional<Rational> objective;
    LpProblem problem;
    LpOutcome outcome;
  };

  LpProblem standard_form() const;
  Solution solve() const;

 private:
  struct Var {
    bool free;
    std::optional<Rational> upper;
    Rational cost;
  };
  struct Row {
    Terms terms;
    Sense sense;
    Rational rhs;
  };
  std::vector<Var> vars_;
  std::vector<Row> rows_;
};

}  // namespace rthy
