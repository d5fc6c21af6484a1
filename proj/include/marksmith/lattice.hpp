#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "marksmith/group.hpp"

namespace marksmith {

// Raised when a computation would exceed the configured group-order bound.
struct BoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kDefaultMaxOrder = 400;

// Least normal subgroup of B containing A; A must lie in B.
Sub normal_closure(const Sub& a, const Sub& b);

struct SubgroupClass {
  Sub rep;          // canonical minimum of the class
  int size = 0;     // |G| / |normalizer|
  Sub normalizer;
  std::vector<int> members;  // subgroup ids, ascending
};

// The full subgroup lattice of a group with conjugacy classification.
// Subgroups are sorted by (order, canonical key); classes by their
// representative's position in that order.
struct Lattice {
  const FiniteGroup* group = nullptr;
  std::vector<Sub> subgroups;
  std::vector<SubgroupClass> classes;
  std::vector<int> class_of;  // subgroup id -> class id
  std::vector<int> to_rep;    // subgroup id -> g with S^g = rep

  int subgroup_id(const Sub& s) const;    // throws if absent
  const Sub& rep(int class_id) const { return classes[class_id].rep; }
  int class_of_sub(const Sub& s) const { return class_of[subgroup_id(s)]; }
  // Conjugator g with S^g = rep of S's class.
  int conjugator_to_rep(const Sub& s) const { return to_rep[subgroup_id(s)]; }
};

// Layered cyclic-extension enumeration: seed with all cyclic subgroups and
// join pairs to a fixpoint. Throws BoundExceeded if |G| > max_order.
Lattice build_lattice(const FiniteGroup& g, int max_order = kDefaultMaxOrder);

// Faithful permutation image of P acting on the right cosets of K.
struct Quotient {
  Sub top, bottom;
  GroupPtr group;
  std::vector<int> project;  // aligned with top.elems -> quotient element index

  int image_of(int parent_elem) const;  // parent_elem must lie in top
};
Quotient make_quotient(const Sub& p, const Sub& k);

// A bijective homomorphism between two enumerated groups, as an element table.
struct Isomorphism {
  const FiniteGroup* source = nullptr;
  const FiniteGroup* target = nullptr;
  std::vector<int> map;

  int operator()(int e) const { return map[e]; }
  Isomorphism inverse() const;
  Isomorphism then(const Isomorphism& next) const;  // apply *this, then next
};

// First isomorphism found under canonical generator-image backtracking with
// (element order, conjugacy-class size) pruning; nullopt if none exists.
std::optional<Isomorphism> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);
std::vector<Isomorphism> all_isomorphisms(const FiniteGroup& a, const FiniteGroup& b);

// Aut(U) realized as a permutation group on the element indices of U; the
// product convention matches Perm (left factor acts first).
struct AutGroup {
  GroupPtr base;              // U
  GroupPtr group;             // permutation group of degree |U|
  Sub inner;                  // Inn(U)
  std::vector<int> out_transversal;  // Inn-coset representatives, identity first
  std::vector<int> out_coset_of;     // aut element -> position in out_transversal

  int out_size() const { return static_cast<int>(out_transversal.size()); }
  // Apply automorphism (by index) to an element of U.
  int apply(int aut, int u) const { return group->element(aut)[u]; }
};
AutGroup automorphism_group(GroupPtr u);

}  // namespace marksmith
