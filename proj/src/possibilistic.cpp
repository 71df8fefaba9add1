#include "rthy/possibilistic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rthy/errors.hpp"
#include "rthy/guard.hpp"

namespace rthy {

BoolMatrix::BoolMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> bits)
    : rows_(rows), cols_(cols), bits_(std::move(bits)) {
  if (bits_.size() != rows * cols) throw Error(ErrorKind::DimensionMismatch, "boolean matrix entries");
  for (auto& b : bits_) b = b ? 1 : 0;
  for (std::size_t c = 0; c < cols; ++c) {
    bool any = false;
    for (std::size_t r = 0; r < rows; ++r) any = any || (*this)(r, c);
    if (!any) throw Error(ErrorKind::NotStochastic, "boolean column " + std::to_string(c) + " is empty");
  }
}

BoolMatrix BoolMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  std::vector<std::uint8_t> bits;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorKind::DimensionMismatch, "ragged rows");
    for (int v : row) bits.push_back(v != 0);
  }
  return BoolMatrix(r, c, std::move(bits));
}

BoolMatrix ceil(const RationalMatrix& m) {
  std::vector<std::uint8_t> bits;
  for (const auto& v : m.entries()) bits.push_back(v.sign() > 0);
  return BoolMatrix(m.rows(), m.cols(), std::move(bits));
}

BoolEncoding ceil(const Encoding& x) { return ceil(x.matrix()); }
BoolStochasticMap ceil(const StochasticMap& t) { return ceil(t.matrix()); }

BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "boolean product shape");
  std::vector<std::uint8_t> bits(a.rows() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (a(i, k))
        for (std::size_t j = 0; j < b.cols(); ++j)
          if (b(k, j)) bits[i * b.cols() + j] = 1;
  return BoolMatrix(a.rows(), b.cols(), std::move(bits));
}

namespace {

// Target outcomes j that x-outcome i may be sent to without producing a 1
// where y has a 0.
std::vector<std::vector<std::size_t>> admissible(const BoolEncoding& x, const BoolEncoding& y) {
  std::vector<std::vector<std::size_t>> out(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < y.rows(); ++j) {
      bool ok = true;
      for (std::size_t c = 0; c < x.cols() && ok; ++c) ok = !x(i, c) || y(j, c);
      if (ok) out[i].push_back(j);
    }
  return out;
}

bool row_nonzero(const BoolEncoding& x, std::size_t i) {
  for (std::size_t c = 0; c < x.cols(); ++c)
    if (x(i, c)) return true;
  return false;
}

bool coverable(const BoolEncoding& x, const std::vector<std::vector<std::size_t>>& adm, std::size_t j, std::size_t c) {
  for (std::size_t i = 0; i < x.rows(); ++i) {
    if (!x(i, c)) continue;
    for (auto k : adm[i])
      if (k == j) return true;
  }
  return false;
}

struct Search {
  const BoolEncoding& x;
  const BoolEncoding& y;
  const std::vector<std::vector<std::size_t>>& adm;
  std::vector<std::vector<std::uint8_t>> suffix;  // best possible coverage from column i on
  std::vector<std::size_t> choice;                // chosen subset code per column
  std::uint64_t nodes = 0;

  std::vector<std::uint8_t> cover_of(std::size_t i, std::uint64_t code) const {
    std::vector<std::uint8_t> cov(y.rows() * y.cols());
    for (std::size_t b = 0; b < adm[i].size(); ++b)
      if (code >> b & 1)
        for (std::size_t c = 0; c < x.cols(); ++c)
          if (x(i, c)) cov[adm[i][b] * y.cols() + c] = 1;
    return cov;
  }

  bool covers(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) const {
    for (std::size_t e = 0; e < a.size(); ++e)
      if (y.bits()[e] && !a[e] && !b[e]) return false;
    return true;
  }

  bool run(std::size_t i, const std::vector<std::uint8_t>& cov) {
    ++nodes;
    if (i == x.rows()) return covers(cov, cov);
    if (!covers(cov, suffix[i])) return false;
    const std::uint64_t n = std::uint64_t(1) << adm[i].size();
    for (std::uint64_t code = 1; code < n; ++code) {
      auto next = cover_of(i, code);
      for (std::size_t e = 0; e < next.size(); ++e) next[e] |= cov[e];
      choice[i] = code;
      if (run(i + 1, next)) return true;
    }
    return false;
  }
};

}  // namespace

BoolMajorization bool_majorizes(const BoolEncoding& x, const BoolEncoding& y) {
  if (x.cols() != y.cols())
    throw Error(ErrorKind::HypothesisMismatch, std::to_string(x.cols()) + " vs " + std::to_string(y.cols()) + " hypotheses");
  auto adm = admissible(x, y);

  std::uint64_t space = 1, guard = enumeration_guard(kDefaultSearchGuard);
  for (const auto& a : adm) {
    std::uint64_t per = a.size() >= 63 ? UINT64_MAX : (std::uint64_t(1) << a.size()) - 1;
    space = (per != 0 && space > UINT64_MAX / per) ? UINT64_MAX : space * std::max<std::uint64_t>(per, 1);
  }
  if (space > guard)
    throw Error(ErrorKind::SearchTooLarge, "search space " + std::to_string(space) + " exceeds guard " + std::to_string(guard));

  BoolMajorization r;
  Search s{x, y, adm, {}, std::vector<std::size_t>(x.rows()), 0};
  s.suffix.assign(x.rows() + 1, std::vector<std::uint8_t>(y.rows() * y.cols()));
  for (std::size_t i = x.rows(); i-- > 0;) {
    auto full = s.cover_of(i, (std::uint64_t(1) << adm[i].size()) - 1);
    for (std::size_t e = 0; e < full.size(); ++e) s.suffix[i][e] = full[e] | s.suffix[i + 1][e];
  }
  bool found = s.run(0, std::vector<std::uint8_t>(y.rows() * y.cols()));
  r.nodes = s.nodes;
  if (!found) {
    // Taking every admissible target is the most permissive choice, so a
    // failed search always leaves one of these two obstructions.
    for (std::size_t i = 0; i < x.rows() && !r.refutation; ++i)
      if (adm[i].empty()) r.refutation = BoolRefutation{BoolRefutation::Kind::NoAdmissibleTarget, i, 0};
    for (std::size_t j = 0; j < y.rows() && !r.refutation; ++j)
      for (std::size_t c = 0; c < y.cols() && !r.refutation; ++c)
        if (y(j, c) && !coverable(x, adm, j, c)) r.refutation = BoolRefutation{BoolRefutation::Kind::Uncoverable, j, c};
    if (!r.refutation) throw std::logic_error("boolean search failed without an obstruction");
    return r;
  }
  std::vector<std::uint8_t> bits(y.rows() * x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t b = 0; b < adm[i].size(); ++b)
      if (s.choice[i] >> b & 1) bits[adm[i][b] * x.rows() + i] = 1;
  r.convertible = true;
  r.witness = BoolMatrix(y.rows(), x.rows(), std::move(bits));
  return r;
}

bool verify_refutation(const BoolEncoding& x, const BoolEncoding& y, const BoolRefutation& r) {
  if (x.cols() != y.cols()) return false;
  auto maps_ok = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < x.cols(); ++c)
      if (x(i, c) && !y(j, c)) return false;
    return true;
  };
  if (r.kind == BoolRefutation::Kind::NoAdmissibleTarget) {
    if (r.index >= x.rows() || !row_nonzero(x, r.index)) return false;
    for (std::size_t j = 0; j < y.rows(); ++j)
      if (maps_ok(r.index, j)) return false;
    return true;
  }
  if (r.index >= y.rows() || r.hyp >= y.cols() || !y(r.index, r.hyp)) return false;
  for (std::size_t i = 0; i < x.rows(); ++i)
    if (x(i, r.hyp) && maps_ok(i, r.index)) return false;
  return true;
}

std::vector<std::vector<std::size_t>> to_hypergraph(const BoolEncoding& x) {
  std::vector<std::vector<std::size_t>> edges(x.cols());
  for (std::size_t c = 0; c < x.cols(); ++c)
    for (std::size_t a = 0; a < x.rows(); ++a)
      if (x(a, c)) edges[c].push_back(a);
  return edges;
}

}  // namespace rthy
