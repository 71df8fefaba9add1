#include "rthy/io.hpp"

#include <fstream>
#include <map>
#include <utility>

#include "rthy/errors.hpp"

namespace rthy::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::size_t need_size(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    fail(std::string("\"") + key + "\" must be a nonnegative integer");
  return v.get<std::size_t>();
}

std::vector<std::string> names_of(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_array()) fail(std::string("\"") + key + "\" must be an array of names");
  std::vector<std::string> out;
  for (const auto& n : v) {
    if (!n.is_string()) fail(std::string("\"") + key + "\" must be an array of names");
    out.push_back(n.get<std::string>());
  }
  return out;
}

std::size_t lookup(const std::vector<std::string>& names, const std::string& n) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == n) return i;
  fail("unknown name \"" + n + "\"");
}

std::pair<std::string, std::string> split_key(const std::string& key) {
  auto pos = key.find(',');
  if (pos == std::string::npos) fail("table key \"" + key + "\" is not of the form \"a,b\"");
  return {key.substr(0, pos), key.substr(pos + 1)};
}

ElementSet optional_set(const json& j, const char* key, const std::vector<std::string>& names) {
  if (!j.contains(key)) return ElementSet(names.size());
  return set_from_json(j.at(key), names);
}

std::string pair_key(const std::string& a, const std::string& b) { return a + "," + b; }

}  // namespace

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(path + ": " + e.what());
  }
}

json to_json(const Rational& v) { return v.str(); }
json to_json(const Extended& v) { return v.str(); }

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(e.str());
  return out;
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  fail("expected a rational string, got " + j.dump());
}

Extended extended_from_json(const json& j) {
  if (j.is_string()) return Extended::parse(j.get<std::string>());
  return Extended(rational_from_json(j));
}

Vector vector_from_json(const json& j) {
  if (!j.is_array()) fail("expected an array of rationals");
  Vector v;
  for (const auto& e : j) v.push_back(rational_from_json(e));
  return v;
}

json matrix_to_json(const RationalMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

json bool_matrix_to_json(const BoolMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c) ? 1 : 0);
    out.push_back(std::move(row));
  }
  return out;
}

Encoding encoding_from_json(const json& j) {
  std::size_t h = need_size(j, "hypotheses"), n = need_size(j, "outcomes");
  const json& cols = need(j, "columns");
  if (!cols.is_array() || cols.size() != h) fail("\"columns\" must hold one array per hypothesis");
  std::vector<Vector> columns;
  for (const auto& c : cols) {
    Vector v = vector_from_json(c);
    if (v.size() != n) fail("column length differs from \"outcomes\"");
    columns.push_back(std::move(v));
  }
  if (h == 0) return Encoding(RationalMatrix(n, 0));
  return Encoding::from_columns(columns);
}

json encoding_to_json(const Encoding& x) {
  json cols = json::array();
  for (std::size_t c = 0; c < x.hypotheses(); ++c) cols.push_back(to_json(x.column(c)));
  return json{{"hypotheses", x.hypotheses()}, {"outcomes", x.outcomes()}, {"columns", cols}};
}

Vector distribution_from_json(const json& j) {
  if (j.is_array()) return vector_from_json(j);
  return vector_from_json(need(j, "distribution"));
}

FinitePreorder preorder_from_json(const json& j) {
  std::size_t n = need_size(j, "size");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (j.contains("pairs")) {
    if (!j.at("pairs").is_array()) fail("\"pairs\" must be an array");
    for (const auto& p : j.at("pairs")) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned())
        fail("each pair must be [i, j] with nonnegative integers");
      pairs.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
    }
  }
  return FinitePreorder::from_generators(n, pairs);
}

json preorder_to_json(const FinitePreorder& p) {
  json pairs = json::array();
  for (auto [a, b] : p.strict_pairs()) pairs.push_back({a, b});
  return json{{"size", p.size()}, {"pairs", pairs}};
}

FiniteQuantaleModule module_from_json(const json& j) {
  auto tab = ModuleTables::sized(names_of(j, "T"), names_of(j, "X"));
  tab.unit = optional_set(j, "unit", tab.t_names);
  tab.free = optional_set(j, "free", tab.t_names);
  if (j.contains("star")) {
    if (!j.at("star").is_object()) fail("\"star\" must be an object");
    for (const auto& [key, val] : j.at("star").items()) {
      auto [t, u] = split_key(key);
      tab.star_at(lookup(tab.t_names, t), lookup(tab.t_names, u)) = set_from_json(val, tab.t_names);
    }
  }
  if (j.contains("act")) {
    if (!j.at("act").is_object()) fail("\"act\" must be an object");
    for (const auto& [key, val] : j.at("act").items()) {
      auto [t, x] = split_key(key);
      tab.act_at(lookup(tab.t_names, t), lookup(tab.x_names, x)) = set_from_json(val, tab.x_names);
    }
  }
  return FiniteQuantaleModule(std::move(tab));
}

json module_to_json(const FiniteQuantaleModule& m) {
  const auto& tab = m.tables();
  json star = json::object(), act = json::object();
  for (std::size_t t = 0; t < m.num_t(); ++t) {
    for (std::size_t u = 0; u < m.num_t(); ++u)
      if (m.star_atoms(t, u).any()) star[pair_key(tab.t_names[t], tab.t_names[u])] = set_to_json(m.star_atoms(t, u), tab.t_names);
    for (std::size_t x = 0; x < m.num_x(); ++x)
      if (m.act_atoms(t, x).any()) act[pair_key(tab.t_names[t], tab.x_names[x])] = set_to_json(m.act_atoms(t, x), tab.x_names);
  }
  return json{{"T", tab.t_names}, {"X", tab.x_names}, {"unit", set_to_json(m.unit(), tab.t_names)},
              {"free", set_to_json(m.free(), tab.t_names)}, {"star", star}, {"act", act}};
}

CommutativeQuantale quantale_from_json(const json& j) {
  auto tab = QuantaleTables::sized(names_of(j, "R"));
  tab.unit = optional_set(j, "unit", tab.names);
  tab.free = optional_set(j, "free", tab.names);
  if (j.contains("box")) {
    if (!j.at("box").is_object()) fail("\"box\" must be an object");
    for (const auto& [key, val] : j.at("box").items()) {
      auto [a, b] = split_key(key);
      tab.box_at(lookup(tab.names, a), lookup(tab.names, b)) = set_from_json(val, tab.names);
    }
  }
  return CommutativeQuantale(std::move(tab));
}

ChannelEncoding channel_from_json(const json& j) {
  std::size_t h = need_size(j, "hypotheses"), a = need_size(j, "input"), b = need_size(j, "output");
  const json& cols = need(j, "columns");
  if (!cols.is_object()) fail("\"columns\" must map \"h,a\" to a distribution");
  std::map<std::pair<std::size_t, std::size_t>, Vector> found;
  for (const auto& [key, val] : cols.items()) {
    auto [hs, as] = split_key(key);
    std::size_t hi, ai;
    try {
      hi = std::stoul(hs);
      ai = std::stoul(as);
    } catch (const std::exception&) {
      fail("channel key \"" + key + "\" must be \"h,a\" with integer indices");
    }
    if (hi >= h || ai >= a) fail("channel key \"" + key + "\" out of range");
    Vector v = vector_from_json(val);
    if (v.size() != b) fail("channel column \"" + key + "\" length differs from \"output\"");
    found[{hi, ai}] = std::move(v);
  }
  if (found.size() != h * a) fail("channel needs one column per (hypothesis, input) pair");
  return ChannelEncoding::from_function(h, a, [&](std::size_t hi, std::size_t ai) { return found.at({hi, ai}); });
}

json channel_to_json(const ChannelEncoding& psi) {
  json cols = json::object();
  for (std::size_t h = 0; h < psi.hypotheses(); ++h)
    for (std::size_t a = 0; a < psi.inputs(); ++a)
      cols[std::to_string(h) + "," + std::to_string(a)] = to_json(psi.column(h, a));
  return json{{"hypotheses", psi.hypotheses()}, {"input", psi.inputs()}, {"output", psi.outputs()}, {"columns", cols}};
}

PartialValuation valuation_from_json(const json& j, const std::vector<std::string>& names) {
  if (!j.is_object()) fail("valuation must map names to values");
  PartialValuation f(names.size());
  for (const auto& [key, val] : j.items()) f.set(lookup(names, key), extended_from_json(val));
  return f;
}

json valuation_to_json(const PartialValuation& f, const std::vector<std::string>& names) {
  json out = json::object();
  for (std::size_t x = 0; x < f.carrier(); ++x)
    if (f.defined(x)) out[names.at(x)] = to_json(f.at(x));
  return out;
}

PermutationAction action_from_json(const json& j, const std::vector<std::string>& names) {
  const json& gens = need(j, "generators");
  if (!gens.is_array()) fail("\"generators\" must be an array of maps");
  std::vector<std::vector<std::size_t>> maps;
  for (const auto& g : gens) {
    if (!g.is_array() || g.size() != names.size()) fail("each generator lists the image of every name");
    std::vector<std::size_t> m;
    for (const auto& n : g) {
      if (!n.is_string()) fail("generator images must be names");
      m.push_back(lookup(names, n.get<std::string>()));
    }
    maps.push_back(std::move(m));
  }
  return PermutationAction::generated_by(names.size(), maps);
}

ElementSet set_from_json(const json& j, const std::vector<std::string>& names) {
  if (!j.is_array()) fail("expected an array of names");
  ElementSet s(names.size());
  for (const auto& n : j) {
    if (!n.is_string()) fail("expected an array of names");
    s.set(lookup(names, n.get<std::string>()));
  }
  return s;
}

json set_to_json(const ElementSet& s, const std::vector<std::string>& names) {
  json out = json::array();
  for (auto i : members(s)) out.push_back(names.at(i));
  return out;
}

json points_to_json(const std::vector<Point2>& pts) {
  json out = json::array();
  for (const auto& [x, y] : pts) out.push_back({x.str(), y.str()});
  return out;
}

json violations_to_json(const std::vector<Violation>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(json{{"kind", v.kind}, {"atoms", v.atoms}});
  return out;
}

}  // namespace rthy::io
