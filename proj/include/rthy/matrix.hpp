#pragma once

#include <cstddef>
#include <vector>

#include "rthy/rational.hpp"

namespace rthy {

using Vector = std::vector<Rational>;

// Dense row-major matrix of rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  // Nested initializer, one inner vector per row.
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  const std::vector<Rational>& entries() const { return a_; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  RationalMatrix transpose() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix scale(const Rational& s, const RationalMatrix& m);
Vector operator*(const RationalMatrix& a, const Vector& v);
Rational dot(const Vector& a, const Vector& b);

// Fraction-free (Bareiss) elimination on the integer-scaled matrix.
std::size_t rank(const RationalMatrix& m);

}  // namespace rthy
