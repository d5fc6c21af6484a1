#pragma once

#include <string>
#include <vector>

#include "marksmith/context.hpp"
#include "marksmith/matrix.hpp"

namespace marksmith {

// A surjective homomorphism P -> U with kernel exactly K, i.e. an
// isomorphism theta: P/K -> U stored as a total element table on P.
struct UMorphism {
  Section sec;
  GroupPtr target;
  std::vector<int> map;  // aligned with sec.top.elems -> U element index

  int apply(int parent_elem) const;
  bool operator==(const UMorphism& o) const {
    return sec == o.sec && target == o.target && map == o.map;
  }
};

// theta^a, with domain (P^a, K^a): p -> theta(a p a^-1).
UMorphism conjugate_morphism(const UMorphism& m, int a);
// theta followed by the automorphism alpha of U (an index into aut.group).
UMorphism compose_aut(const UMorphism& m, const AutGroup& aut, int alpha);
// theta' <= theta: same target, (P',K') <=_{P/K} (P,K) and the tables agree
// on P'. Equivalent to inclusion of graphs.
bool morphism_leq(const UMorphism& lo, const UMorphism& hi);

// The U-morphisms of G for one isomorphism type U, organized by G-class.
// Classes are parametrized by (section class, A_theta-coset representative),
// in canonical order.
struct MorphismSet {
  const SectionData* sd = nullptr;
  GroupPtr U;
  AutGroup aut;          // Aut(U), shared with any other set over the same U
  DirectProduct dp_gu;   // G x U, home of morphism graphs

  struct SecInfo {
    int sec_class;                 // section class id in sd
    UMorphism theta0;              // canonical first morphism of the class
    std::vector<int> rep_of_u;     // u -> element of P with theta0(p) = u
    Sub a_theta0;                  // A_{theta0} <= Aut(U)
    std::vector<int> coset_of;     // aut element -> right-coset position
    std::vector<int> coset_reps;   // right-coset representatives, ascending
    int first_class;               // index of this section's first class
  };
  struct MClass {
    int sec_pos;                   // position into sec_infos
    int alpha;                     // coset representative (aut element)
    UMorphism rep;
    Sub a_theta;                   // A_{rep}
    int o_theta_size;
    std::vector<UMorphism> orbit;  // the distinct G-conjugates of rep
  };

  std::vector<SecInfo> sec_infos;
  std::vector<MClass> classes;

  int class_count() const { return static_cast<int>(classes.size()); }
  int identify(const UMorphism& m) const;
  std::string class_label(int i) const;
  // Action of the Out(U) transversal on class indices.
  std::vector<std::vector<int>> out_action() const;
  Sub graph(const UMorphism& m) const;
};

MorphismSet build_morphisms(const SectionData& sd, GroupPtr u, const AutGroup& aut);

// Class incidence matrix A^G_U(<=): entry (x, y) = #{theta_x^a >= theta_y}.
LabeledMatrix cim_mor(const MorphismSet& ms);

}  // namespace marksmith
