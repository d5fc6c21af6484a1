#pragma once

#include <vector>

#include "marksmith/lattice.hpp"
#include "marksmith/matrix.hpp"

namespace marksmith {

// A pair (P, K) with K normal in P.
struct Section {
  Sub top, bottom;

  int quotient_size() const { return top.order() / bottom.order(); }
  bool operator==(const Section& o) const { return top == o.top && bottom == o.bottom; }
};

Section make_section(Sub top, Sub bottom);  // checks normality
Section conjugate(const Section& s, int g);

enum class SecOrder { Full, P, K, PK, Prime, GeqP };

// The five order relations on sections (GeqP is the opposite of P, used for
// the size-compatible order). Throws on mixed parent groups.
bool section_leq(const Section& lo, const Section& hi, SecOrder mode);

Section section_meet(const Section& a, const Section& b);
Section section_join(const Section& a, const Section& b);

// For lo <= hi: the unique pair (P', K cap P') and (P'K, K) with
// lo <=_P mid_low <=_{P/K} mid_high <=_K hi.
std::pair<Section, Section> section_decompose(const Section& lo, const Section& hi);
// For lo <=' hi: the pair (s2, s1) = ((P', K cap P'), (P'K, K)) with
// s1 <=_K hi, lo >=_P s2 and s2 <=_{P/K} s1.
std::pair<Section, Section> section_decompose_prime(const Section& lo, const Section& hi);

// Butterfly meet of two sections with the two canonical isomorphisms onto
// P_i'/K_i', realized as coset tables on the meet's quotient.
struct ButterflyMeet {
  Section meet;          // (P1 cap P2, K1' cap K2')
  Section side1, side2;  // (P_i', K_i')
  // phi[i]: cosets of meet -> cosets of side i, as element tables on coset
  // representatives (aligned with the meet quotient's projection).
  Quotient meet_q, side1_q, side2_q;
  std::vector<int> phi1, phi2;  // meet quotient element -> side quotient element
};
ButterflyMeet butterfly_meet(const Section& s1, const Section& s2);

// N = N_G(P) cap N_G(K); C = elements of N inducing the identity on P/K;
// the induced automorphisms of P/K as a subgroup of Aut(P/K).
struct SectionAutomizer {
  Sub n, c;
  Quotient quotient;
  AutGroup aut;      // Aut(P/K)
  Sub induced;       // Aut_G(P,K) as a subgroup of aut.group
};
SectionAutomizer section_automizer(const Section& s);

struct SectionClass {
  Section rep;
  int size = 0;          // |G| / |stabilizer|
  Sub stabilizer;        // N_G(P, K)
  int type = -1;         // isomorphism type id within SectionData
  std::vector<int> members;  // section ids
};

struct SectionType {
  GroupPtr model;              // quotient of the first class of this type
  std::string name;            // catalogue display name
  std::vector<int> classes;    // section class ids, ascending
};

// The G-poset of sections: full enumeration, conjugacy classes in canonical
// order (quotient size, then top-group order, then keys), and isomorphism
// types of the quotients.
struct SectionData {
  const Lattice* lattice = nullptr;
  std::vector<Section> sections;
  std::vector<SectionClass> classes;
  std::vector<SectionType> types;
  std::vector<int> class_of;  // section id -> class id
  std::vector<int> to_rep;    // section id -> g with section^g = rep
  std::vector<Quotient> class_quotient;  // per class, quotient of the representative
  std::vector<std::string> subgroup_names;  // display names of the subgroup classes
  std::vector<std::pair<int, int>> section_keys_;  // (top id, bottom id), sorted

  int section_id(const Section& s) const;
  int class_of_section(const Section& s) const { return class_of[section_id(s)]; }
  int conjugator_to_rep(const Section& s) const { return to_rep[section_id(s)]; }
  std::string class_label(int class_id) const;
};

SectionData build_sections(const Lattice& lat);

// Class incidence matrix of (Sec(G), <=_mode) over the canonical class order:
// entry (x, y) = #{x' in [x] : y <=_mode x'}.
LabeledMatrix cim_sections(const SectionData& sd, SecOrder mode);

}  // namespace marksmith
