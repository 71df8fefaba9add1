#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rthy/order.hpp"

namespace rthy {

// Subsets of transformations and of resources are both bitmasks over atoms.
using TSet = ElementSet;
using XSet = ElementSet;

// Raw tables of a finite power-set quantale module. Absent entries are empty.
struct ModuleTables {
  std::vector<std::string> t_names, x_names;
  std::vector<TSet> star;  // index t * |T| + u: atoms of t * u (apply u, then t)
  std::vector<XSet> act;   // index t * |X| + x: atoms of t acting on x
  TSet unit, free;

  static ModuleTables sized(std::vector<std::string> t_names, std::vector<std::string> x_names);
  std::size_t nt() const { return t_names.size(); }
  std::size_t nx() const { return x_names.size(); }
  TSet& star_at(std::size_t t, std::size_t u) { return star[t * nt() + u]; }
  XSet& act_at(std::size_t t, std::size_t x) { return act[t * nx() + x]; }
};

struct Violation {
  std::string kind;
  std::vector<std::string> atoms;
  std::string str() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

class FiniteQuantaleModule {
 public:
  // Structural checks only (sizes, indices); axioms are reported by validate().
  explicit FiniteQuantaleModule(ModuleTables tables);

  std::size_t num_t() const { return tab_.nt(); }
  std::size_t num_x() const { return tab_.nx(); }
  const std::string& t_name(std::size_t t) const { return tab_.t_names.at(t); }
  const std::string& x_name(std::size_t x) const { return tab_.x_names.at(x); }
  // Throws IndexOutOfRange for unknown names.
  std::size_t t_index(const std::string& name) const;
  std::size_t x_index(const std::string& name) const;
  TSet t_set(const std::vector<std::size_t>& atoms) const { return make_set(num_t(), atoms); }
  XSet x_set(const std::vector<std::size_t>& atoms) const { return make_set(num_x(), atoms); }

  const TSet& star_atoms(std::size_t t, std::size_t u) const { return tab_.star[t * num_t() + u]; }
  const XSet& act_atoms(std::size_t t, std::size_t x) const { return tab_.act[t * num_x() + x]; }
  // Lifted operations (unions over atoms).
  TSet star(const TSet& S, const TSet& U) const;
  XSet act(const TSet& S, const XSet& Y) const;

  const TSet& unit() const { return tab_.unit; }
  const TSet& free() const { return tab_.free; }
  const ModuleTables& tables() const { return tab_; }
  FiniteQuantaleModule with_free(const TSet& free) const;

  // Computed once at construction.
  const std::vector<Violation>& violations() const { return violations_; }
  bool is_valid() const { return violations_.empty(); }

 private:
  ModuleTables tab_;
  std::vector<Violation> violations_;
};

std::vector<Violation> validate(const FiniteQuantaleModule& m);

// y >= z iff z in free |> {y}. Throws InvalidModule.
FinitePreorder reachability(const FiniteQuantaleModule& m);
XSet free_image(const FiniteQuantaleModule& m, const XSet& Y);

struct Augmentation {
  std::vector<std::vector<std::size_t>> classes;  // atoms of X, grouped
  std::vector<XSet> representatives;              // B |> {x} per class
  FinitePreorder order;                           // class i >= j iff rep_i contains rep_j
};
// Throws NotReflexiveTransitive unless B contains the unit and B*B is in B.
Augmentation augment(const FiniteQuantaleModule& m, const TSet& B);

bool is_left_invariant(const FiniteQuantaleModule& m, const TSet& S);   // free * S = S
bool is_right_invariant(const FiniteQuantaleModule& m, const TSet& D);  // D * free = D

struct Augmentations {
  TSet left;   // free * U
  TSet right;  // U * free
};
Augmentations left_right_augmentations(const FiniteQuantaleModule& m, const TSet& U);

// Partial function on X; nullopt where undefined.
using PartialMap = std::vector<std::optional<std::size_t>>;

struct FunctionModule {
  FiniteQuantaleModule module;
  std::vector<PartialMap> maps;  // atom t acts as maps[t]
};

// Transformations are the composition closure of the generators, the free
// generators and the identity; free is the closure of the free generators
// and the identity; unit is the identity. Atom 0 is the identity, the rest
// follow in breadth-first discovery order. Atom names list images, "-" for
// undefined. Throws EnumerationTooLarge past the guard, IndexOutOfRange on
// a bad image.
FunctionModule function_module(std::vector<std::string> x_names, const std::vector<PartialMap>& generators,
                               const std::vector<PartialMap>& free_generators);

// A finite monoid of maps on X (a permutation group in the usual case).
// Must contain the identity and be closed under composition.
class PermutationAction {
 public:
  // Throws InvalidAction.
  PermutationAction(std::size_t n, std::vector<std::vector<std::size_t>> maps);
  // Closure of the generators together with the identity.
  static PermutationAction generated_by(std::size_t n, const std::vector<std::vector<std::size_t>>& gens);

  std::size_t carrier() const { return n_; }
  std::size_t size() const { return maps_.size(); }
  const std::vector<std::size_t>& map(std::size_t g) const { return maps_.at(g); }
  bool is_group() const;
  XSet image(std::size_t g, const XSet& Y) const;

 private:
  std::size_t n_;
  std::vector<std::vector<std::size_t>> maps_;
};

// Atoms t with phi_g(t |> x) = t |> phi_g(x) for every g and atom x.
TSet covariant_transformations(const FiniteQuantaleModule& m, const PermutationAction& g);
// Set-level version of the same condition for the lifted U.
bool g_compatible(const FiniteQuantaleModule& m, const PermutationAction& g, const TSet& U);

enum class MorphismMode { Strict, Oplax };

// ell[t] is a subset of dst transformations, f[x] a subset of dst resources;
// both are lifted by unions.
std::vector<Violation> check_morphism(const FiniteQuantaleModule& src, const FiniteQuantaleModule& dst,
                                      const std::vector<TSet>& ell, const std::vector<XSet>& f, MorphismMode mode);

// Commutative power-set quantale with a free element.
struct QuantaleTables {
  std::vector<std::string> names;
  std::vector<ElementSet> box;  // index a * |R| + b
  ElementSet unit, free;

  static QuantaleTables sized(std::vector<std::string> names);
  std::size_t n() const { return names.size(); }
  ElementSet& box_at(std::size_t a, std::size_t b) { return box[a * n() + b]; }
};

class CommutativeQuantale {
 public:
  explicit CommutativeQuantale(QuantaleTables tables);

  std::size_t size() const { return tab_.n(); }
  const std::string& name(std::size_t a) const { return tab_.names.at(a); }
  std::size_t index(const std::string& name) const;
  ElementSet set(const std::vector<std::size_t>& atoms) const { return make_set(size(), atoms); }
  const ElementSet& box_atoms(std::size_t a, std::size_t b) const { return tab_.box[a * size() + b]; }
  ElementSet box(const ElementSet& S, const ElementSet& T) const;
  const ElementSet& unit() const { return tab_.unit; }
  const ElementSet& free() const { return tab_.free; }
  const QuantaleTables& tables() const { return tab_; }

  const std::vector<Violation>& violations() const { return violations_; }
  bool is_valid() const { return violations_.empty(); }
  // The module of R acting on itself, with R_free as free set.
  FiniteQuantaleModule as_module() const;

 private:
  QuantaleTables tab_;
  std::vector<Violation> violations_;
};

// S >= T iff R_free (x) S contains T.
bool ucrt_order(const CommutativeQuantale& q, const ElementSet& S, const ElementSet& T);
// c (x) S >= c (x) T.
bool catalytic_order(const CommutativeQuantale& q, std::size_t c, const ElementSet& S, const ElementSet& T);

}  // namespace rthy
