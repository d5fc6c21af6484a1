#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "marksmith/perm.hpp"

namespace marksmith {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A concrete permutation group with its full element list enumerated.
// Elements are sorted lexicographically by image array; that order is the
// canonical element order used for every deterministic choice in the library.
class FiniteGroup {
public:
  FiniteGroup(int degree, std::vector<Perm> generators);

  int degree() const { return degree_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<int>& generator_indices() const { return gen_indices_; }

  const Perm& element(int i) const { return elements_[i]; }
  int index_of(const Perm& p) const;                 // throws if absent
  std::optional<int> find(const Perm& p) const;

  int identity() const { return identity_; }
  int mul(int a, int b) const { return mul_[a * size() + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int x, int g) const { return mul(mul(inv_[g], x), g); }  // x^g = g^-1 x g
  int element_order(int a) const { return order_[a]; }

private:
  int degree_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::vector<int> gen_indices_;
  std::vector<int> mul_, inv_, order_;
  int identity_ = -1;
};

// Deterministic closure of a generating set: the generated subgroup as a
// sorted element list.
std::vector<Perm> closure(const std::vector<Perm>& generators);

// A subgroup of a fixed parent group, stored as a sorted vector of element
// indices. The index vector doubles as the canonical key of the subgroup.
struct Sub {
  const FiniteGroup* parent = nullptr;
  std::vector<int> elems;

  int order() const { return static_cast<int>(elems.size()); }
  bool contains(int e) const;
  bool contains_sub(const Sub& other) const;
  bool operator==(const Sub& o) const { return parent == o.parent && elems == o.elems; }
};

// (order, element key) comparison; the canonical subgroup order.
bool sub_less(const Sub& a, const Sub& b);

Sub trivial_sub(const FiniteGroup& g);
Sub full_sub(const FiniteGroup& g);
Sub sub_from_indices(const FiniteGroup& g, std::vector<int> indices);  // verifies closure

// Subgroup generated by the given element indices.
Sub generated_sub(const FiniteGroup& g, std::span<const int> seeds);

Sub conjugate(const Sub& h, int g);
Sub intersect(const Sub& a, const Sub& b);
Sub join(const Sub& a, const Sub& b);                 // <A, B>
Sub set_product(const Sub& a, const Sub& b);          // AB; throws unless a subgroup
bool is_normal_in(const Sub& k, const Sub& p);        // assumes k <= p

// {g in G : H^g = H}; H must be a subgroup of G.
Sub normalizer(const Sub& h);
// {g in G : gh = hg for all h in H}.
Sub centralizer(const Sub& h);
Sub center(const FiniteGroup& g);

// A small generating set for a subgroup, chosen greedily in canonical order.
std::vector<int> find_generators(const Sub& h);

// The subgroup as a standalone group (same degree, own element tables).
GroupPtr as_group(const Sub& h);

// Right cosets Kp of K in P, with deterministic minimal representatives.
struct Cosets {
  Sub top, bottom;
  std::vector<int> reps;       // minimal element of each coset, ascending
  std::vector<int> coset_of;   // aligned with top.elems: coset index
  int index_in_top(int e) const;  // position of element e in top.elems
  int coset_of_element(int e) const { return coset_of[index_in_top(e)]; }
};
Cosets right_cosets(const Sub& p, const Sub& k);

// Double cosets A g B in G, minimal representatives in canonical order.
std::vector<int> double_coset_reps(const Sub& a, const Sub& b);

// An injective homomorphism given by a total element-index table.
struct Embedding {
  const FiniteGroup* source = nullptr;
  const FiniteGroup* target = nullptr;
  std::vector<int> map;  // source element index -> target element index

  int operator()(int e) const { return map[e]; }
  Sub image(const Sub& h) const;
};

// G1 x G2 acting on the disjoint union of the two point sets. Element
// indices factor as pair(i1, i2) = i1 * |G2| + i2, which the constructor
// verifies against the canonical element order.
struct DirectProduct {
  GroupPtr left, right, group;
  Embedding embed_left, embed_right;

  int pair(int i1, int i2) const { return i1 * right->size() + i2; }
  int left_of(int e) const { return e / right->size(); }
  int right_of(int e) const { return e % right->size(); }

  Sub project_left(const Sub& l) const;
  Sub project_right(const Sub& l) const;
  Sub product_sub(const Sub& h1, const Sub& h2) const;  // H1 x H2
};

DirectProduct direct_product(GroupPtr g1, GroupPtr g2);

}  // namespace marksmith
