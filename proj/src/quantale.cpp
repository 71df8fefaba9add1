#include "rthy/quantale.hpp"

#include <map>
#include <set>

#include "rthy/errors.hpp"
#include "rthy/guard.hpp"

namespace rthy {

ModuleTables ModuleTables::sized(std::vector<std::string> t_names, std::vector<std::string> x_names) {
  ModuleTables m;
  m.t_names = std::move(t_names);
  m.x_names = std::move(x_names);
  const std::size_t nt = m.nt(), nx = m.nx();
  m.star.assign(nt * nt, TSet(nt));
  m.act.assign(nt * nx, XSet(nx));
  m.unit = TSet(nt);
  m.free = TSet(nt);
  return m;
}

std::string Violation::str() const {
  std::string s = kind + "(";
  for (std::size_t i = 0; i < atoms.size(); ++i) s += (i ? "," : "") + atoms[i];
  return s + ")";
}

FiniteQuantaleModule::FiniteQuantaleModule(ModuleTables tables) : tab_(std::move(tables)) {
  const std::size_t nt = tab_.nt(), nx = tab_.nx();
  if (tab_.star.size() != nt * nt || tab_.act.size() != nt * nx)
    throw Error(ErrorKind::DimensionMismatch, "module table sizes");
  for (const auto& s : tab_.star)
    if (s.size() != nt) throw Error(ErrorKind::DimensionMismatch, "star entry over wrong carrier");
  for (const auto& s : tab_.act)
    if (s.size() != nx) throw Error(ErrorKind::DimensionMismatch, "act entry over wrong carrier");
  if (tab_.unit.size() != nt || tab_.free.size() != nt)
    throw Error(ErrorKind::DimensionMismatch, "unit/free over wrong carrier");
  violations_ = validate(*this);
}

static std::size_t find_name(const std::vector<std::string>& names, const std::string& n, const char* what) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == n) return i;
  throw Error(ErrorKind::IndexOutOfRange, std::string("unknown ") + what + " '" + n + "'");
}

std::size_t FiniteQuantaleModule::t_index(const std::string& name) const {
  return find_name(tab_.t_names, name, "transformation");
}
std::size_t FiniteQuantaleModule::x_index(const std::string& name) const {
  return find_name(tab_.x_names, name, "resource");
}

TSet FiniteQuantaleModule::star(const TSet& S, const TSet& U) const {
  if (S.size() != num_t() || U.size() != num_t()) throw Error(ErrorKind::IndexOutOfRange, "transformation set size");
  TSet out(num_t());
  for (auto s = S.find_first(); s != TSet::npos; s = S.find_next(s))
    for (auto u = U.find_first(); u != TSet::npos; u = U.find_next(u)) out |= star_atoms(s, u);
  return out;
}

XSet FiniteQuantaleModule::act(const TSet& S, const XSet& Y) const {
  if (S.size() != num_t() || Y.size() != num_x()) throw Error(ErrorKind::IndexOutOfRange, "set size in action");
  XSet out(num_x());
  for (auto s = S.find_first(); s != TSet::npos; s = S.find_next(s))
    for (auto y = Y.find_first(); y != XSet::npos; y = Y.find_next(y)) out |= act_atoms(s, y);
  return out;
}

FiniteQuantaleModule FiniteQuantaleModule::with_free(const TSet& free) const {
  ModuleTables t = tab_;
  t.free = free;
  return FiniteQuantaleModule(std::move(t));
}

std::vector<Violation> validate(const FiniteQuantaleModule& m) {
  std::vector<Violation> out;
  const std::size_t nt = m.num_t(), nx = m.num_x();
  auto tn = [&](std::size_t t) { return m.t_name(t); };
  auto xn = [&](std::size_t x) { return m.x_name(x); };

  // Intern star entries so the triple loop compares integers.
  std::map<TSet, std::size_t> ids;
  std::vector<std::size_t> id(nt * nt);
  std::vector<std::vector<std::size_t>> mem(nt * nt);
  for (std::size_t s = 0; s < nt; ++s)
    for (std::size_t t = 0; t < nt; ++t) {
      const TSet& e = m.star_atoms(s, t);
      id[s * nt + t] = ids.emplace(e, ids.size()).first->second;
      mem[s * nt + t] = members(e);
    }
  for (std::size_t s = 0; s < nt; ++s)
    for (std::size_t t = 0; t < nt; ++t) {
      const auto& st = mem[s * nt + t];
      for (std::size_t u = 0; u < nt; ++u) {
        const auto& tu = mem[t * nt + u];
        bool ok;
        if (st.size() == 1 && tu.size() == 1) {
          ok = id[st[0] * nt + u] == id[s * nt + tu[0]];
        } else {
          TSet l(nt), r(nt);
          for (auto v : st) l |= m.star_atoms(v, u);
          for (auto w : tu) r |= m.star_atoms(s, w);
          ok = l == r;
        }
        if (!ok) out.push_back({"AssociativityViolation", {tn(s), tn(t), tn(u)}});
      }
    }

  for (std::size_t s = 0; s < nt; ++s)
    for (std::size_t t = 0; t < nt; ++t)
      for (std::size_t x = 0; x < nx; ++x) {
        XSet l(nx), r(nx);
        for (auto v : mem[s * nt + t]) l |= m.act_atoms(v, x);
        const XSet& tx = m.act_atoms(t, x);
        for (auto y = tx.find_first(); y != XSet::npos; y = tx.find_next(y)) r |= m.act_atoms(s, y);
        if (l != r) out.push_back({"MixedAssociativityViolation", {tn(s), tn(t), xn(x)}});
      }

  const TSet& unit = m.unit();
  for (std::size_t t = 0; t < nt; ++t) {
    TSet single = m.t_set({t});
    if (m.star(unit, single) != single || m.star(single, unit) != single)
      out.push_back({"UnitViolation", {tn(t)}});
  }
  for (std::size_t x = 0; x < nx; ++x) {
    XSet single = m.x_set({x});
    if (m.act(unit, single) != single) out.push_back({"UnitActionViolation", {xn(x)}});
  }

  if (!unit.is_subset_of(m.free())) out.push_back({"FreeNotReflexive", {}});
  const TSet& F = m.free();
  for (auto s = F.find_first(); s != TSet::npos; s = F.find_next(s))
    for (auto t = F.find_first(); t != TSet::npos; t = F.find_next(t))
      if (!m.star_atoms(s, t).is_subset_of(F)) out.push_back({"FreeNotIdempotent", {tn(s), tn(t)}});
  return out;
}

static void require_valid(const FiniteQuantaleModule& m) {
  if (!m.is_valid()) throw Error(ErrorKind::InvalidModule, m.violations().front().str());
}

FinitePreorder reachability(const FiniteQuantaleModule& m) {
  require_valid(m);
  std::vector<ElementSet> rel(m.num_x());
  for (std::size_t y = 0; y < m.num_x(); ++y) rel[y] = m.act(m.free(), m.x_set({y}));
  return FinitePreorder(std::move(rel));
}

XSet free_image(const FiniteQuantaleModule& m, const XSet& Y) { return m.act(m.free(), Y); }

Augmentation augment(const FiniteQuantaleModule& m, const TSet& B) {
  if (!m.unit().is_subset_of(B) || !m.star(B, B).is_subset_of(B))
    throw Error(ErrorKind::NotReflexiveTransitive, "augmenting set must contain the unit and be closed under *");
  Augmentation a;
  std::map<XSet, std::size_t> cls;
  for (std::size_t x = 0; x < m.num_x(); ++x) {
    XSet img = m.act(B, m.x_set({x}));
    auto [it, fresh] = cls.emplace(img, a.classes.size());
    if (fresh) {
      a.classes.emplace_back();
      a.representatives.push_back(img);
    }
    a.classes[it->second].push_back(x);
  }
  const std::size_t k = a.classes.size();
  std::vector<ElementSet> rel(k, ElementSet(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (a.representatives[j].is_subset_of(a.representatives[i])) rel[i].set(j);
  a.order = FinitePreorder(std::move(rel));
  return a;
}

bool is_left_invariant(const FiniteQuantaleModule& m, const TSet& S) { return m.star(m.free(), S) == S; }
bool is_right_invariant(const FiniteQuantaleModule& m, const TSet& D) { return m.star(D, m.free()) == D; }

Augmentations left_right_augmentations(const FiniteQuantaleModule& m, const TSet& U) {
  require_valid(m);
  Augmentations a{m.star(m.free(), U), m.star(U, m.free())};
  // Holds for any valid module; checked rather than assumed.
  if (!is_left_invariant(m, a.left) || !is_right_invariant(m, a.right))
    throw Error(ErrorKind::InvalidModule, "augmentation is not invariant");
  return a;
}

FunctionModule function_module(std::vector<std::string> x_names, const std::vector<PartialMap>& generators,
                               const std::vector<PartialMap>& free_generators) {
  const std::size_t n = x_names.size();
  const std::uint64_t guard = enumeration_guard();
  PartialMap id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i;
  for (const auto* list : {&generators, &free_generators})
    for (const auto& g : *list) {
      if (g.size() != n) throw Error(ErrorKind::IndexOutOfRange, "partial map of wrong length");
      for (const auto& v : g)
        if (v && *v >= n) throw Error(ErrorKind::IndexOutOfRange, "partial map value out of range");
    }
  auto compose = [&](const PartialMap& t, const PartialMap& u) {
    PartialMap r(n);
    for (std::size_t i = 0; i < n; ++i)
      if (u[i]) r[i] = t[*u[i]];
    return r;
  };
  // Breadth-first closure seeded with the identity and `seeds`.
  auto closure = [&](const std::vector<const std::vector<PartialMap>*>& seeds) {
    std::vector<PartialMap> maps{id};
    std::map<PartialMap, std::size_t> index{{id, 0}};
    auto add = [&](PartialMap f) {
      if (index.emplace(f, maps.size()).second) {
        maps.push_back(std::move(f));
        if (maps.size() > guard)
          throw Error(ErrorKind::EnumerationTooLarge, "function closure exceeds guard " + std::to_string(guard));
      }
    };
    for (const auto* list : seeds)
      for (const auto& g : *list) add(g);
    for (std::size_t k = 0; k < maps.size(); ++k)
      for (std::size_t j = 0; j <= k; ++j) {
        add(compose(maps[k], maps[j]));
        add(compose(maps[j], maps[k]));
      }
    return std::make_pair(maps, index);
  };
  auto [maps, index] = closure({&free_generators, &generators});
  auto free_maps = closure({&free_generators}).first;

  std::vector<std::string> t_names;
  for (const auto& f : maps) {
    std::string name = "[";
    for (std::size_t i = 0; i < n; ++i) name += (i ? " " : "") + (f[i] ? x_names[*f[i]] : std::string("-"));
    t_names.push_back(name + "]");
  }
  auto tab = ModuleTables::sized(std::move(t_names), std::move(x_names));
  const std::size_t nt = maps.size();
  for (std::size_t t = 0; t < nt; ++t) {
    for (std::size_t u = 0; u < nt; ++u) tab.star_at(t, u).set(index.at(compose(maps[t], maps[u])));
    for (std::size_t x = 0; x < n; ++x)
      if (maps[t][x]) tab.act_at(t, x).set(*maps[t][x]);
  }
  tab.unit.set(0);
  for (const auto& f : free_maps) tab.free.set(index.at(f));
  return FunctionModule{FiniteQuantaleModule(std::move(tab)), std::move(maps)};
}

PermutationAction::PermutationAction(std::size_t n, std::vector<std::vector<std::size_t>> maps)
    : n_(n), maps_(std::move(maps)) {
  std::set<std::vector<std::size_t>> all;
  for (const auto& f : maps_) {
    if (f.size() != n_) throw Error(ErrorKind::InvalidAction, "map of wrong length");
    for (auto v : f)
      if (v >= n_) throw Error(ErrorKind::InvalidAction, "map value out of range");
    all.insert(f);
  }
  std::vector<std::size_t> id(n_);
  for (std::size_t i = 0; i < n_; ++i) id[i] = i;
  if (!all.count(id)) throw Error(ErrorKind::InvalidAction, "identity missing");
  for (const auto& f : maps_)
    for (const auto& g : maps_) {
      std::vector<std::size_t> fg(n_);
      for (std::size_t i = 0; i < n_; ++i) fg[i] = f[g[i]];
      if (!all.count(fg)) throw Error(ErrorKind::InvalidAction, "not closed under composition");
    }
}

PermutationAction PermutationAction::generated_by(std::size_t n, const std::vector<std::vector<std::size_t>>& gens) {
  std::vector<std::size_t> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i;
  std::vector<std::vector<std::size_t>> maps{id};
  std::set<std::vector<std::size_t>> seen{id};
  for (std::size_t k = 0; k < maps.size(); ++k)
    for (const auto& g : gens) {
      if (g.size() != n) throw Error(ErrorKind::InvalidAction, "generator of wrong length");
      std::vector<std::size_t> h(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (maps[k][i] >= n) throw Error(ErrorKind::InvalidAction, "generator value out of range");
        h[i] = g[maps[k][i]];
      }
      if (seen.insert(h).second) maps.push_back(h);
    }
  return PermutationAction(n, std::move(maps));
}

bool PermutationAction::is_group() const {
  for (const auto& f : maps_) {
    std::set<std::size_t> img(f.begin(), f.end());
    if (img.size() != n_) return false;
  }
  return true;
}

XSet PermutationAction::image(std::size_t g, const XSet& Y) const {
  XSet out(n_);
  for (auto y = Y.find_first(); y != XSet::npos; y = Y.find_next(y)) out.set(maps_.at(g)[y]);
  return out;
}

static void check_action_carrier(const FiniteQuantaleModule& m, const PermutationAction& g) {
  if (g.carrier() != m.num_x()) throw Error(ErrorKind::InvalidAction, "action carrier differs from resources");
}

TSet covariant_transformations(const FiniteQuantaleModule& m, const PermutationAction& g) {
  check_action_carrier(m, g);
  TSet out(m.num_t());
  for (std::size_t t = 0; t < m.num_t(); ++t) {
    if (g_compatible(m, g, m.t_set({t}))) out.set(t);
  }
  return out;
}

bool g_compatible(const FiniteQuantaleModule& m, const PermutationAction& g, const TSet& U) {
  check_action_carrier(m, g);
  for (std::size_t k = 0; k < g.size(); ++k)
    for (std::size_t x = 0; x < m.num_x(); ++x) {
      XSet lhs = g.image(k, m.act(U, m.x_set({x})));
      XSet rhs = m.act(U, m.x_set({g.map(k)[x]}));
      if (lhs != rhs) return false;
    }
  return true;
}

std::vector<Violation> check_morphism(const FiniteQuantaleModule& src, const FiniteQuantaleModule& dst,
                                      const std::vector<TSet>& ell, const std::vector<XSet>& f, MorphismMode mode) {
  if (ell.size() != src.num_t() || f.size() != src.num_x())
    throw Error(ErrorKind::DimensionMismatch, "morphism maps must cover every source atom");
  for (const auto& s : ell)
    if (s.size() != dst.num_t()) throw Error(ErrorKind::DimensionMismatch, "ell value over wrong carrier");
  for (const auto& s : f)
    if (s.size() != dst.num_x()) throw Error(ErrorKind::DimensionMismatch, "f value over wrong carrier");

  auto lift_t = [&](const TSet& S) {
    TSet out(dst.num_t());
    for (auto s = S.find_first(); s != TSet::npos; s = S.find_next(s)) out |= ell[s];
    return out;
  };
  auto lift_x = [&](const XSet& Y) {
    XSet out(dst.num_x());
    for (auto y = Y.find_first(); y != XSet::npos; y = Y.find_next(y)) out |= f[y];
    return out;
  };
  auto holds = [&](const ElementSet& lhs, const ElementSet& rhs) {
    return mode == MorphismMode::Strict ? lhs == rhs : lhs.is_subset_of(rhs);
  };

  std::vector<Violation> out;
  for (std::size_t s = 0; s < src.num_t(); ++s)
    for (std::size_t t = 0; t < src.num_t(); ++t)
      if (!holds(lift_t(src.star_atoms(s, t)), dst.star(ell[s], ell[t])))
        out.push_back({"StarPreservationViolation", {src.t_name(s), src.t_name(t)}});
  for (std::size_t t = 0; t < src.num_t(); ++t)
    for (std::size_t x = 0; x < src.num_x(); ++x)
      if (!holds(lift_x(src.act_atoms(t, x)), dst.act(ell[t], f[x])))
        out.push_back({"ActionPreservationViolation", {src.t_name(t), src.x_name(x)}});
  const TSet& F = src.free();
  for (auto t = F.find_first(); t != TSet::npos; t = F.find_next(t))
    if (!ell[t].is_subset_of(dst.free())) out.push_back({"FreePreservationViolation", {src.t_name(t)}});
  return out;
}

QuantaleTables QuantaleTables::sized(std::vector<std::string> names) {
  QuantaleTables q;
  q.names = std::move(names);
  const std::size_t n = q.n();
  q.box.assign(n * n, ElementSet(n));
  q.unit = ElementSet(n);
  q.free = ElementSet(n);
  return q;
}

CommutativeQuantale::CommutativeQuantale(QuantaleTables tables) : tab_(std::move(tables)) {
  const std::size_t n = tab_.n();
  if (tab_.box.size() != n * n) throw Error(ErrorKind::DimensionMismatch, "box table size");
  for (const auto& e : tab_.box)
    if (e.size() != n) throw Error(ErrorKind::DimensionMismatch, "box entry over wrong carrier");
  if (tab_.unit.size() != n || tab_.free.size() != n)
    throw Error(ErrorKind::DimensionMismatch, "unit/free over wrong carrier");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (box_atoms(a, b) != box_atoms(b, a)) violations_.push_back({"CommutativityViolation", {name(a), name(b)}});
  FiniteQuantaleModule m = as_module();
  for (const auto& v : m.violations()) {
    if (v.kind == "MixedAssociativityViolation" || v.kind == "UnitActionViolation") continue;  // duplicates
    violations_.push_back(v);
  }
}

std::size_t CommutativeQuantale::index(const std::string& n) const { return find_name(tab_.names, n, "resource"); }

ElementSet CommutativeQuantale::box(const ElementSet& S, const ElementSet& T) const {
  if (S.size() != size() || T.size() != size()) throw Error(ErrorKind::IndexOutOfRange, "set size in box");
  ElementSet out(size());
  for (auto s = S.find_first(); s != ElementSet::npos; s = S.find_next(s))
    for (auto t = T.find_first(); t != ElementSet::npos; t = T.find_next(t)) out |= box_atoms(s, t);
  return out;
}

FiniteQuantaleModule CommutativeQuantale::as_module() const {
  ModuleTables m = ModuleTables::sized(tab_.names, tab_.names);
  m.star = tab_.box;
  m.act = tab_.box;
  m.unit = tab_.unit;
  m.free = tab_.free;
  return FiniteQuantaleModule(std::move(m));
}

bool ucrt_order(const CommutativeQuantale& q, const ElementSet& S, const ElementSet& T) {
  return T.is_subset_of(q.box(q.free(), S));
}

bool catalytic_order(const CommutativeQuantale& q, std::size_t c, const ElementSet& S, const ElementSet& T) {
  if (c >= q.size()) throw Error(ErrorKind::IndexOutOfRange, "catalyst index");
  ElementSet C = q.set({c});
  return ucrt_order(q, q.box(C, S), q.box(C, T));
}

}  // namespace rthy
