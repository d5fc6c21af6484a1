#pragma once

#include <string>
#include <vector>

#include "marksmith/morphisms.hpp"
#include "marksmith/rational.hpp"

namespace marksmith {

// A subgroup of G1 x G2 with its Goursat data: projections P_i, kernels K_i
// and the element-level isomorphism table of theta: P1/K1 -> P2/K2.
struct GoursatData {
  Sub l;
  Sub p1, k1, p2, k2;
  std::vector<int> theta;  // aligned with p1.elems: minimal element of the image coset
};

GoursatData goursat_decompose(const DirectProduct& dp, const Sub& l);

// Graph of theta1 . theta2^-1 for morphisms into the same model group.
Sub pi_subgroup(const DirectProduct& dp, const UMorphism& m1, const UMorphism& m2);

// Relational composition L * M = {(g1,g3) : (g1,g2) in L, (g2,g3) in M}.
// The plain sweep is the independent oracle; the butterfly route composes
// the restricted/co-restricted Goursat isomorphisms through the Butterfly
// meet of the two middle sections.
Sub star_relational(const DirectProduct& d12, const Sub& l, const DirectProduct& d23,
                    const Sub& m, const DirectProduct& d13);
Sub star_butterfly(const DirectProduct& d12, const Sub& l, const DirectProduct& d23,
                   const Sub& m, const DirectProduct& d13);
// Computes both routes, throws std::logic_error if they disagree.
Sub star(const DirectProduct& d12, const Sub& l, const DirectProduct& d23, const Sub& m,
         const DirectProduct& d13);

// All of G1 x G2's subgroup-class machinery derived from the factors alone:
// classes parametrized by Goursat type, section-class pair, and
// (A_theta1, A_theta2)-double coset in Aut(U).
struct ProductCtx {
  CtxPtr c1, c2;
  DirectProduct dp;

  struct Type {
    GroupPtr model;
    std::string name;
    AutGroup aut;
    MorphismSet mor1, mor2;
    int sec_type1, sec_type2;  // type ids within the factors' SectionData
  };
  struct Class {
    int type;
    int sc1, sc2;       // section class ids in the factor SectionData
    int dcoset;         // double-coset index
    int dcoset_rep;     // the representative as an Aut(U) element
    UMorphism m1, m2;   // representative realization pi(m1, m2)
    Sub rep;
    GoursatData goursat;
    Int nidx;           // |N(L) : L| by the automizer-composition formula
    std::string label;
  };

  std::vector<Type> types;
  std::vector<Class> classes;

  int class_count() const { return static_cast<int>(classes.size()); }
  const Class& cls(int i) const { return classes[i]; }

  // Class of an arbitrary subgroup of the product, via Goursat data and
  // double-coset identification in Aut(U).
  int identify(const Sub& l) const;

  // N_{G1 x G2}(L) composed from the automizer graphs through Aut(U).
  Sub normalizer_via_star(int class_id) const;

  std::vector<std::string> labels() const;

private:
  friend ProductCtx build_product_ctx(CtxPtr, CtxPtr);
  struct DCosets {
    std::vector<int> coset_of;   // aut element -> double-coset index
    std::vector<int> reps;
    std::vector<int> class_ids;  // double-coset index -> global class id
  };
  // keyed by (type, sc1, sc2)
  std::vector<std::vector<std::vector<DCosets>>> dcosets_;
  std::vector<int> type_of_sec_type1_;  // factor-1 section type -> product type (-1 if absent)
};

ProductCtx build_product_ctx(CtxPtr c1, CtxPtr c2);

// Normalizer index |N(L) : L| by the formula
// |C_N1bar(P1bar)| |C_N2bar(P2bar)| |O_theta1 cap O_theta2| / |Z(U)|.
Int normalizer_index(const ProductCtx& pc, int class_id);

// Class ids of the subgroup classes of Goursat type U.
std::vector<int> u_subgroup_classes(const ProductCtx& pc, const FiniteGroup& u);

}  // namespace marksmith
