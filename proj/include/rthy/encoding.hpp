#pragma once

#include <cstddef>
#include <vector>

#include "rthy/matrix.hpp"

namespace rthy {

// Column-stochastic matrix: outcomes x hypotheses, column c is the
// outcome distribution under hypothesis c.
class Encoding {
 public:
  Encoding() = default;
  // Throws NotStochastic.
  explicit Encoding(RationalMatrix m);
  static Encoding from_columns(const std::vector<Vector>& columns);
  static Encoding constant(const Vector& column, std::size_t hypotheses);

  std::size_t hypotheses() const { return m_.cols(); }
  std::size_t outcomes() const { return m_.rows(); }
  const RationalMatrix& matrix() const { return m_; }
  Vector column(std::size_t c) const { return m_.col(c); }
  const Rational& operator()(std::size_t a, std::size_t h) const { return m_(a, h); }
  bool is_constant() const;

  friend bool operator==(const Encoding&, const Encoding&) = default;

 private:
  RationalMatrix m_;
};

// Stochastic map from `from` outcomes to `to` outcomes; matrix is to x from.
class StochasticMap {
 public:
  StochasticMap() = default;
  explicit StochasticMap(RationalMatrix m);  // throws NotStochastic
  static StochasticMap identity(std::size_t n);
  // Deterministic map sending i to image[i].
  static StochasticMap deterministic(const std::vector<std::size_t>& image, std::size_t to);

  std::size_t from() const { return m_.cols(); }
  std::size_t to() const { return m_.rows(); }
  const RationalMatrix& matrix() const { return m_; }
  friend bool operator==(const StochasticMap&, const StochasticMap&) = default;

 private:
  RationalMatrix m_;
};

// t . x; throws DimensionMismatch.
Encoding apply(const StochasticMap& t, const Encoding& x);
// s . t (apply t first).
StochasticMap compose(const StochasticMap& s, const StochasticMap& t);
// lambda y + (1 - lambda) z, same shape.
Encoding mix(const Rational& lambda, const Encoding& y, const Encoding& z);

bool is_stochastic(const RationalMatrix& m);
bool is_distribution(const Vector& v);

}  // namespace rthy
