#include "fixtures.hpp"

#include <algorithm>

namespace fx {

using namespace rthy;

Vector vec(std::initializer_list<Rational> v) { return Vector(v); }

Encoding rows(const std::vector<std::vector<Rational>>& r) { return Encoding(RationalMatrix::from_rows(r)); }

Encoding shor_x() {
  return rows({{q(1, 2), q(1, 2), q(1, 2)}, {q(1, 2), 0, 0}, {0, q(1, 2), 0}, {0, 0, q(1, 2)}});
}

Encoding shor_y() { return rows({{q(1, 2), 0, q(1, 2)}, {q(1, 2), q(1, 2), 0}, {0, q(1, 2), q(1, 2)}}); }

Encoding coarse_x() { return rows({{q(1, 2), 0, 0}, {q(1, 2), 1, 1}}); }

StochasticMap coarse_map() { return StochasticMap::deterministic({1, 0, 1, 1}, 2); }

namespace {

Vector half_half(std::size_t n, std::size_t i, std::size_t j) {
  Vector v(n);
  v[i] += q(1, 2);
  v[j] += q(1, 2);
  return v;
}

}  // namespace

// Hypotheses are h = 1, 2, 3 at columns 0, 1, 2.
ChannelEncoding psi_x() {
  return ChannelEncoding::from_function(3, 3, [](std::size_t c, std::size_t a) {
    return half_half(4, 0, (a + c + 1) % 4);
  });
}

ChannelEncoding psi_y() {
  return ChannelEncoding::from_function(3, 3, [](std::size_t c, std::size_t a) {
    std::size_t h = c + 1;
    return half_half(3, (a + h) % 3, (a + h + 2) % 3);
  });
}

std::vector<StochasticMap> sigma_x() {
  std::vector<StochasticMap> out;
  for (std::size_t a = 0; a < 3; ++a) {
    std::vector<std::size_t> img(4);
    for (std::size_t b = 0; b < 4; ++b) img[b] = b == 0 ? 0 : (b + a) % 4;
    out.push_back(StochasticMap::deterministic(img, 4));
  }
  return out;
}

std::vector<StochasticMap> sigma_y() {
  std::vector<StochasticMap> out;
  for (std::size_t a = 0; a < 3; ++a) {
    std::vector<std::size_t> img(3);
    for (std::size_t b = 0; b < 3; ++b) img[b] = (b + a) % 3;
    out.push_back(StochasticMap::deterministic(img, 3));
  }
  return out;
}

Encoding binary(const Rational& a, const Rational& b) { return rows({{a, b}, {1 - a, 1 - b}}); }

namespace {

std::vector<PartialMap> all_maps(std::size_t n) {
  std::vector<PartialMap> out;
  std::vector<std::size_t> d(n, 0);
  for (;;) {
    PartialMap f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = d[i];
    out.push_back(f);
    std::size_t i = n;
    while (i > 0 && d[i - 1] == n - 1) d[--i] = 0;
    if (i == 0) break;
    ++d[i - 1];
  }
  return out;
}

std::vector<PartialMap> maps_below(const FinitePreorder& p) {
  std::vector<PartialMap> out;
  for (const auto& f : all_maps(p.size())) {
    bool ok = true;
    for (std::size_t x = 0; x < p.size() && ok; ++x) ok = p.geq(x, *f[x]);
    if (ok) out.push_back(f);
  }
  return out;
}

}  // namespace

FunctionModule chain3() {
  auto p = FinitePreorder::from_generators(3, {{2, 1}, {1, 0}});
  return function_module({"0", "1", "2"}, all_maps(3), maps_below(p));
}

FunctionModule chain3_plus() {
  auto p = FinitePreorder::from_generators(4, {{2, 1}, {1, 0}, {2, 3}, {3, 0}});
  return function_module({"0", "1", "2", "1'"}, all_maps(4), maps_below(p));
}

TwoCopies two_copies() {
  // 0 1 2 0' 1' 2' at indices 0..5.
  std::vector<PartialMap> free;
  for (std::size_t a0 = 0; a0 < 1; ++a0)
    for (std::size_t a1 = 0; a1 < 2; ++a1)
      for (std::size_t a2 = 0; a2 < 3; ++a2)
        for (std::size_t b0 = 0; b0 < 1; ++b0)
          for (std::size_t b1 = 0; b1 < 2; ++b1)
            for (std::size_t b2 = 0; b2 < 3; ++b2) free.push_back({a0, a1, a2, 3 + b0, 3 + b1, 3 + b2});
  PartialMap u{std::nullopt, 3, 4, std::nullopt, 0, 1};
  TwoCopies t{function_module({"0", "1", "2", "0'", "1'", "2'"}, {u}, free), 0};
  t.u = atom_of(t.fm, u);
  return t;
}

FunctionModule star4() { return function_module({"s", "a1", "a2", "a3"}, all_maps(4), {}); }

PermutationAction cyclic4() { return PermutationAction::generated_by(4, {{0, 2, 3, 1}}); }

std::size_t atom_of(const FunctionModule& fm, const PartialMap& f) {
  auto it = std::find(fm.maps.begin(), fm.maps.end(), f);
  if (it == fm.maps.end()) throw std::logic_error("map not among the atoms");
  return static_cast<std::size_t>(it - fm.maps.begin());
}

PartialValuation name_values(std::size_t n, const std::vector<std::pair<std::size_t, long>>& values) {
  PartialValuation f(n);
  for (auto [x, v] : values) f.set(x, Extended(v));
  return f;
}

FiniteQuantaleModule preorder_module(const FinitePreorder& p) {
  const std::size_t n = p.size();
  std::vector<PartialMap> all, free;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      PartialMap t(n);
      t[a] = b;
      all.push_back(t);
      if (p.geq(a, b)) free.push_back(t);
    }
  return function_module([&] {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    return names;
  }(), all, free).module;
}

std::vector<FinitePreorder> all_preorders(std::size_t n) {
  std::vector<FinitePreorder> out;
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) off.emplace_back(a, b);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << off.size()); ++mask) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
    for (std::size_t k = 0; k < off.size(); ++k)
      if (mask >> k & 1) r[off[k].first][off[k].second] = true;
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a)
      for (std::size_t b = 0; b < n && transitive; ++b)
        for (std::size_t c = 0; c < n && transitive; ++c)
          if (r[a][b] && r[b][c] && !r[a][c]) transitive = false;
    if (!transitive) continue;
    std::vector<ElementSet> rel(n, ElementSet(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (r[a][b]) rel[a].set(b);
    out.emplace_back(rel);
  }
  return out;
}

Vector random_distribution(std::mt19937& rng, std::size_t n, long denom) {
  std::uniform_int_distribution<long> cut(0, denom);
  std::vector<long> cuts{0, denom};
  for (std::size_t i = 0; i + 1 < n; ++i) cuts.push_back(cut(rng));
  std::sort(cuts.begin(), cuts.end());
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(Rational(cuts[i + 1] - cuts[i], denom));
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

Encoding random_encoding(std::mt19937& rng, std::size_t outcomes, std::size_t hypotheses, long denom) {
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < hypotheses; ++c) cols.push_back(random_distribution(rng, outcomes, denom));
  return Encoding::from_columns(cols);
}

StochasticMap random_map(std::mt19937& rng, std::size_t to, std::size_t from, long denom) {
  return StochasticMap(random_encoding(rng, to, from, denom).matrix());
}

PartialValuation random_valuation(std::mt19937& rng, std::size_t n, const ElementSet* domain) {
  std::bernoulli_distribution coin(0.7);
  std::uniform_int_distribution<long> v(0, 3);
  PartialValuation f(n);
  for (std::size_t x = 0; x < n; ++x)
    if (domain ? domain->test(x) : coin(rng)) f.set(x, Extended(v(rng)));
  return f;
}

PartialValuation random_monotone(std::mt19937& rng, const FinitePreorder& p, const ElementSet& domain) {
  std::uniform_int_distribution<long> w(0, 2);
  std::vector<long> weight(p.size());
  for (auto& x : weight) x = w(rng);
  PartialValuation f(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (!domain.test(x)) continue;
    long s = 0;
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.geq(x, y)) s += weight[y];
    f.set(x, Extended(s));
  }
  return f;
}

TSet random_tset(std::mt19937& rng, std::size_t n) {
  std::bernoulli_distribution coin(0.2);
  TSet s(n);
  for (std::size_t i = 0; i < n; ++i)
    if (coin(rng)) s.set(i);
  return s;
}

}  // namespace fx
