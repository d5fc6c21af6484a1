#pragma once

#include <string>

#include "marksmith/group.hpp"
#include "marksmith/lattice.hpp"

namespace marksmith {

GroupPtr cyclic_group(int n);
GroupPtr dihedral_group(int order);   // D<order>, order = 2n >= 4
GroupPtr symmetric_group(int n);
GroupPtr alternating_group(int n);
GroupPtr klein_four_group();

// Parse a group specification: a catalogue name (S3, S4, A4, A5, C<n>,
// D<order>, V4) or an explicit generator list of the form
//   perm:<degree>:<cycles>;<cycles>;...
// with cycles like "(1,2)(3,4)". Throws std::invalid_argument on bad input.
GroupPtr parse_group_spec(const std::string& spec);

// Short display name of the isomorphism type of g, matching the catalogue
// ("1", "2", "2^2", "S3", "D8", ...). Falls back to "G<order>" when the type
// is not a catalogue group.
std::string identify_type_name(const FiniteGroup& g);

// Display names of the conjugacy classes of subgroups, in class order, with
// a/b/c suffixes when several classes share an isomorphism type name.
std::vector<std::string> subgroup_class_names(const Lattice& lat);

}  // namespace marksmith
