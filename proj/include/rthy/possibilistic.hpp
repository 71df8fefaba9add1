#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rthy/encoding.hpp"

namespace rthy {

// Matrix over {0,1}, every column nonempty.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  // rows x cols, row-major; throws NotStochastic on an empty column.
  BoolMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> bits);
  static BoolMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool operator()(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c] != 0; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }
  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

// outcomes x hypotheses.
using BoolEncoding = BoolMatrix;
// to x from.
using BoolStochasticMap = BoolMatrix;

BoolMatrix ceil(const RationalMatrix& m);
BoolEncoding ceil(const Encoding& x);
BoolStochasticMap ceil(const StochasticMap& t);

// Boolean semiring product; throws DimensionMismatch.
BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b);

// Why no Boolean map exists: either an x-outcome with a nonempty row has
// no admissible target outcome, or a 1 of y at (row, hyp) cannot be produced.
struct BoolRefutation {
  enum class Kind { NoAdmissibleTarget, Uncoverable } kind;
  std::size_t index = 0;  // x-outcome, or y-outcome for Uncoverable
  std::size_t hyp = 0;    // Uncoverable only
};

struct BoolMajorization {
  bool convertible = false;
  std::optional<BoolStochasticMap> witness;  // lexicographically least, column-major
  std::optional<BoolRefutation> refutation;
  std::uint64_t nodes = 0;
};

// Throws HypothesisMismatch, SearchTooLarge.
BoolMajorization bool_majorizes(const BoolEncoding& x, const BoolEncoding& y);

// Replays a refutation against x and y directly.
bool verify_refutation(const BoolEncoding& x, const BoolEncoding& y, const BoolRefutation& r);

// Per hypothesis, the outcomes carrying a 1.
std::vector<std::vector<std::size_t>> to_hypergraph(const BoolEncoding& x);

}  // namespace rthy
