#include "rthy/lp.hpp"

#include <string>

#include "rthy/errors.hpp"

namespace rthy {

LpProblem::LpProblem(RationalMatrix A_, Vector b_, Vector c_)
    : A(std::move(A_)), b(std::move(b_)), c(std::move(c_)) {
  if (b.size() != A.rows())
    throw Error(ErrorKind::DimensionMismatch,
                "rhs has " + std::to_string(b.size()) + " entries for " + std::to_string(A.rows()) + " rows");
  if (c.size() != A.cols())
    throw Error(ErrorKind::DimensionMismatch,
                "cost has " + std::to_string(c.size()) + " entries for " + std::to_string(A.cols()) + " columns");
}

const char* status_name(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "Optimal";
    case LpStatus::Infeasible: return "Infeasible";
    case LpStatus::Unbounded: return "Unbounded";
  }
  return "?";
}

namespace {

// Dense tableau over [A | I_artificial | rhs] with a reduced-cost row.
class Tableau {
 public:
  Tableau(const LpProblem& p) : m_(p.num_rows()), n_(p.num_vars()), sign_(m_, 1) {
    const std::size_t width = n_ + m_ + 1;
    t_.assign(m_, std::vector<mpq_class>(width));
    for (std::size_t i = 0; i < m_; ++i) {
      if (p.b[i].sign() < 0) sign_[i] = -1;
      for (std::size_t j = 0; j < n_; ++j) t_[i][j] = sign_[i] * p.A(i, j).raw();
      t_[i][n_ + i] = 1;
      t_[i][width - 1] = sign_[i] * p.b[i].raw();
    }
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) basis_[i] = n_ + i;
    rc_.assign(width, 0);
  }

  // Phase-I costs: 1 on artificials.
  void load_phase1() {
    const std::size_t width = n_ + m_ + 1;
    rc_.assign(width, 0);
    for (std::size_t i = 0; i < m_; ++i) rc_[n_ + i] = 1;
    price_out();
  }

  void load_phase2(const LpProblem& p) {
    rc_.assign(n_ + m_ + 1, 0);
    for (std::size_t j = 0; j < n_; ++j) rc_[j] = p.c[j].raw();
    price_out();
  }

  // Returns false on unboundedness (entering column stored in unbounded_col_).
  bool run(std::size_t allowed_cols) {
    for (;;) {
      std::size_t enter = allowed_cols;
      for (std::size_t j = 0; j < allowed_cols; ++j)
        if (sgn(rc_[j]) < 0) { enter = j; break; }
      if (enter == allowed_cols) return true;
      std::size_t leave = m_;
      mpq_class best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(t_[i][enter]) <= 0) continue;
        mpq_class ratio = t_[i].back() / t_[i][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) {
        unbounded_col_ = enter;
        return false;
      }
      pivot(leave, enter);
    }
  }

  // Pivot zero-level artificials out of the basis where possible.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (sgn(t_[i][j]) != 0) {
          pivot(i, j);
          break;
        }
      // An all-zero row is redundant; its artificial stays basic at zero.
    }
  }

  mpq_class objective() const { return -rc_.back(); }

  Vector primal() const {
    Vector v(n_);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) v[basis_[i]] = Rational(t_[i].back());
    return v;
  }

  // Multipliers of the original (unsigned) rows, read off the artificial
  // columns: rc(art_i) = cost(art_i) - y_i.
  Vector duals(bool phase1) const {
    Vector y(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      mpq_class yi = (phase1 ? mpq_class(1) : mpq_class(0)) - rc_[n_ + i];
      y[i] = Rational(mpq_class(sign_[i] * yi));
    }
    return y;
  }

  Vector ray() const {
    Vector d(n_);
    d[unbounded_col_] = 1;
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) d[basis_[i]] = Rational(mpq_class(-t_[i][unbounded_col_]));
    return d;
  }

  std::size_t pivots() const { return pivots_; }

 private:
  void price_out() {
    for (std::size_t i = 0; i < m_; ++i) {
      mpq_class cb = rc_[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < rc_.size(); ++j) rc_[j] -= cb * t_[i][j];
    }
  }

  void pivot(std::size_t r, std::size_t col) {
    ++pivots_;
    mpq_class pv = t_[r][col];
    for (auto& e : t_[r]) e /= pv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || sgn(t_[i][col]) == 0) continue;
      mpq_class f = t_[i][col];
      for (std::size_t j = 0; j < t_[i].size(); ++j)
        if (sgn(t_[r][j]) != 0) t_[i][j] -= f * t_[r][j];
    }
    if (sgn(rc_[col]) != 0) {
      mpq_class f = rc_[col];
      for (std::size_t j = 0; j < rc_.size(); ++j)
        if (sgn(t_[r][j]) != 0) rc_[j] -= f * t_[r][j];
    }
    basis_[r] = col;
  }

  std::size_t m_, n_;
  std::vector<int> sign_;
  std::vector<std::vector<mpq_class>> t_;
  std::vector<mpq_class> rc_;
  std::vector<std::size_t> basis_;
  std::size_t unbounded_col_ = 0;
  std::size_t pivots_ = 0;
};

}  // namespace

LpOutcome lp_solve(const LpProblem& p) {
  if (p.b.size() != p.A.rows() || p.c.size() != p.A.cols())
    throw Error(ErrorKind::DimensionMismatch, "inconsistent LP dimensions");
  Tableau tab(p);
  LpOutcome out;
  tab.load_phase1();
  tab.run(p.num_vars());
  if (sgn(tab.objective()) > 0) {
    out.status = LpStatus::Infeasible;
    out.farkas = tab.duals(true);
    out.pivots = tab.pivots();
    return out;
  }
  tab.drive_out_artificials();
  tab.load_phase2(p);
  bool bounded = tab.run(p.num_vars());
  out.pivots = tab.pivots();
  out.primal = tab.primal();
  if (!bounded) {
    out.status = LpStatus::Unbounded;
    out.ray = tab.ray();
    return out;
  }
  out.status = LpStatus::Optimal;
  out.dual = tab.duals(false);
  out.objective = Rational(tab.objective());
  return out;
}

namespace {

bool primal_feasible(const LpProblem& p, const Vector& v) {
  if (v.size() != p.num_vars()) return false;
  for (const auto& x : v)
    if (x.sign() < 0) return false;
  return p.A * v == p.b;
}

}  // namespace

bool verify_certificate(const LpProblem& p, const LpOutcome& o) {
  const std::size_t m = p.num_rows(), n = p.num_vars();
  switch (o.status) {
    case LpStatus::Optimal: {
      if (!o.primal || !o.dual || o.dual->size() != m) return false;
      const Vector& v = *o.primal;
      const Vector& y = *o.dual;
      if (!primal_feasible(p, v)) return false;
      for (std::size_t j = 0; j < n; ++j) {
        Rational red = p.c[j];
        for (std::size_t i = 0; i < m; ++i) red -= y[i] * p.A(i, j);
        if (red.sign() < 0) return false;
        if (!red.is_zero() && !v[j].is_zero()) return false;
      }
      if (o.objective && *o.objective != dot(p.c, v)) return false;
      return true;
    }
    case LpStatus::Infeasible: {
      if (!o.farkas || o.farkas->size() != m) return false;
      const Vector& y = *o.farkas;
      for (std::size_t j = 0; j < n; ++j) {
        Rational s;
        for (std::size_t i = 0; i < m; ++i) s += y[i] * p.A(i, j);
        if (s.sign() > 0) return false;
      }
      return dot(y, p.b).sign() > 0;
    }
    case LpStatus::Unbounded: {
      if (!o.primal || !o.ray || o.ray->size() != n) return false;
      if (!primal_feasible(p, *o.primal)) return false;
      for (const auto& x : *o.ray)
        if (x.sign() < 0) return false;
      for (std::size_t i = 0; i < m; ++i) {
        Rational s;
        for (std::size_t j = 0; j < n; ++j) s += p.A(i, j) * (*o.ray)[j];
        if (!s.is_zero()) return false;
      }
      return dot(p.c, *o.ray).sign() < 0;
    }
  }
  return false;
}

std::size_t LinearProgram::add_variable(bool free, std::optional<Rational> upper) {
  vars_.push_back({free, std::move(upper), Rational()});
  return vars_.size() - 1;
}

std::size_t LinearProgram::add_variables(std::size_t n) {
  std::size_t first = vars_.size();
  for (std::size_t i = 0; i < n; ++i) add_variable();
  return first;
}

void LinearProgram::set_cost(std::size_t var, const Rational& c) {
  if (var >= vars_.size()) throw Error(ErrorKind::IndexOutOfRange, "LP variable " + std::to_string(var));
  vars_[var].cost = c;
}

void LinearProgram::add_constraint(Terms terms, Sense sense, Rational rhs) {
  for (const auto& t : terms)
    if (t.first >= vars_.size()) throw Error(ErrorKind::IndexOutOfRange, "LP variable " + std::to_string(t.first));
  rows_.push_back({std::move(terms), sense, std::move(rhs)});
}

// Column layout: user variables, then negative parts of free variables,
// then one slack per inequality and per upper bound.
LpProblem LinearProgram::standard_form() const {
  const std::size_t nv = vars_.size();
  std::vector<std::size_t> neg(nv, SIZE_MAX);
  std::size_t cols = nv;
  for (std::size_t i = 0; i < nv; ++i)
    if (vars_[i].free) neg[i] = cols++;
  std::size_t nrows = rows_.size();
  for (const auto& v : vars_)
    if (v.upper) ++nrows;
  std::size_t slack_start = cols;
  for (const auto& r : rows_)
    if (r.sense != Sense::Eq) ++cols;
  for (const auto& v : vars_)
    if (v.upper) ++cols;

  RationalMatrix A(nrows, cols);
  Vector b(nrows), c(cols);
  for (std::size_t i = 0; i < nv; ++i) {
    c[i] = vars_[i].cost;
    if (neg[i] != SIZE_MAX) c[neg[i]] = -vars_[i].cost;
  }
  std::size_t row = 0, slack = slack_start;
  for (const auto& r : rows_) {
    for (const auto& [j, coef] : r.terms) {
      A(row, j) += coef;
      if (neg[j] != SIZE_MAX) A(row, neg[j]) -= coef;
    }
    if (r.sense == Sense::Le) A(row, slack++) = 1;
    if (r.sense == Sense::Ge) A(row, slack++) = -1;
    b[row] = r.rhs;
    ++row;
  }
  for (std::size_t i = 0; i < nv; ++i) {
    if (!vars_[i].upper) continue;
    A(row, i) = 1;
    if (neg[i] != SIZE_MAX) A(row, neg[i]) = -1;
    A(row, slack++) = 1;
    b[row] = *vars_[i].upper;
    ++row;
  }
  return LpProblem(std::move(A), std::move(b), std::move(c));
}

LinearProgram::Solution LinearProgram::solve() const {
  Solution s;
  s.problem = standard_form();
  s.outcome = lp_solve(s.problem);
  s.status = s.outcome.status;
  if (s.status == LpStatus::Optimal) {
    s.objective = s.outcome.objective;
    const Vector& x = *s.outcome.primal;
    s.values.resize(vars_.size());
    std::size_t next_neg = vars_.size();
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      s.values[i] = x[i];
      if (vars_[i].free) s.values[i] -= x[next_neg++];
    }
  }
  return s;
}

}  // namespace rthy
