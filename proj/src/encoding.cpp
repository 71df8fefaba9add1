#include "rthy/encoding.hpp"

#include <string>

#include "rthy/errors.hpp"

namespace rthy {

bool is_distribution(const Vector& v) {
  Rational s;
  for (const auto& x : v) {
    if (x.sign() < 0) return false;
    s += x;
  }
  return s == 1;
}

bool is_stochastic(const RationalMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return false;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_distribution(m.col(c))) return false;
  return true;
}

Encoding::Encoding(RationalMatrix m) : m_(std::move(m)) {
  if (!is_stochastic(m_))
    throw Error(ErrorKind::NotStochastic, "encoding columns must be distributions (" + std::to_string(m_.rows()) +
                                              "x" + std::to_string(m_.cols()) + ")");
}

Encoding Encoding::from_columns(const std::vector<Vector>& columns) {
  if (columns.empty()) throw Error(ErrorKind::NotStochastic, "encoding without hypotheses");
  RationalMatrix m(columns[0].size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "ragged columns");
    for (std::size_t a = 0; a < m.rows(); ++a) m(a, c) = columns[c][a];
  }
  return Encoding(std::move(m));
}

Encoding Encoding::constant(const Vector& column, std::size_t hypotheses) {
  return from_columns(std::vector<Vector>(hypotheses, column));
}

bool Encoding::is_constant() const {
  for (std::size_t c = 1; c < hypotheses(); ++c)
    for (std::size_t a = 0; a < outcomes(); ++a)
      if (m_(a, c) != m_(a, 0)) return false;
  return true;
}

StochasticMap::StochasticMap(RationalMatrix m) : m_(std::move(m)) {
  if (!is_stochastic(m_)) throw Error(ErrorKind::NotStochastic, "stochastic map columns must be distributions");
}

StochasticMap StochasticMap::identity(std::size_t n) { return StochasticMap(RationalMatrix::identity(n)); }

StochasticMap StochasticMap::deterministic(const std::vector<std::size_t>& image, std::size_t to) {
  RationalMatrix m(to, image.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] >= to) throw Error(ErrorKind::IndexOutOfRange, "deterministic image out of range");
    m(image[i], i) = 1;
  }
  return StochasticMap(std::move(m));
}

Encoding apply(const StochasticMap& t, const Encoding& x) {
  if (t.from() != x.outcomes())
    throw Error(ErrorKind::DimensionMismatch, "map from " + std::to_string(t.from()) + " outcomes applied to encoding with " +
                                                  std::to_string(x.outcomes()));
  return Encoding(t.matrix() * x.matrix());
}

StochasticMap compose(const StochasticMap& s, const StochasticMap& t) {
  if (s.from() != t.to()) throw Error(ErrorKind::DimensionMismatch, "composition shape");
  return StochasticMap(s.matrix() * t.matrix());
}

Encoding mix(const Rational& lambda, const Encoding& y, const Encoding& z) {
  if (y.outcomes() != z.outcomes() || y.hypotheses() != z.hypotheses())
    throw Error(ErrorKind::ShapeMismatch, "mixture of differently shaped encodings");
  return Encoding(scale(lambda, y.matrix()) + scale(Rational(1) - lambda, z.matrix()));
}

}  // namespace rthy
