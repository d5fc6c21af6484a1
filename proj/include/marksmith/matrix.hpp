#pragma once

#include <string>
#include <vector>

#include "marksmith/rational.hpp"

namespace marksmith {

using RatMat = std::vector<std::vector<Rat>>;

RatMat mat_zero(int rows, int cols);
RatMat mat_identity(int n);
RatMat mat_mul(const RatMat& a, const RatMat& b);
RatMat mat_transpose(const RatMat& a);
RatMat mat_scale(const Rat& c, const RatMat& a);
RatMat mat_inverse(const RatMat& a);       // throws std::domain_error if singular
int mat_rank(RatMat a);
std::vector<Rat> row_times_mat(const std::vector<Rat>& v, const RatMat& a);

// An exact rational matrix whose rows and columns carry class-representative
// labels. Dimensions always match the label lists.
struct LabeledMatrix {
  std::vector<std::string> row_labels, col_labels;
  RatMat entries;

  int rows() const { return static_cast<int>(row_labels.size()); }
  int cols() const { return static_cast<int>(col_labels.size()); }
  const Rat& at(int i, int j) const { return entries[i][j]; }
  Rat& at(int i, int j) { return entries[i][j]; }

  static LabeledMatrix zero(std::vector<std::string> rows, std::vector<std::string> cols);
  static LabeledMatrix identity(std::vector<std::string> labels);

  // Simultaneous row/column reordering: result row i is this row perm[i].
  LabeledMatrix reordered(const std::vector<int>& perm) const;

  bool same_entries(const LabeledMatrix& o) const { return entries == o.entries; }
};

LabeledMatrix lm_mul(const LabeledMatrix& a, const LabeledMatrix& b);

// A partition of the index set 0..n-1 into classes with a chosen transversal.
struct EquivalenceOnIndex {
  std::vector<std::vector<int>> classes;  // disjoint, covering 0..n-1
  std::vector<int> transversal;           // one member per class

  int size() const;                       // n
  int class_count() const { return static_cast<int>(classes.size()); }
  std::vector<int> class_of_index() const;
  void validate() const;                  // throws on malformed partitions
};

// Row summing matrix R (|T| x n) and column picking matrix C (n x |T|);
// R * C = I.
std::pair<LabeledMatrix, LabeledMatrix> rc_matrices(const EquivalenceOnIndex& eq,
                                                    const std::vector<std::string>& index_labels);

// A group action on index pairs, given as the full list of acting elements
// (each a bijection of row indices of A1 and of A2 respectively).
struct PairAction {
  std::vector<std::vector<int>> maps1, maps2;  // aligned lists, identity included
};

// Orbits of a PairAction on pairs, with the canonically minimal pair as
// transversal member (overridable for transversal-independence tests).
EquivalenceOnIndex pair_orbits(int n1, int n2, const PairAction& act);

// R(G) * (A1 x A2) * C(G) for the diagonal action of G on row/column label
// pairs: the Kronecker product collapsed to orbit representatives. Checks
// compatibility of A1 and A2 with the action and throws on violation.
LabeledMatrix kron_over_group(const LabeledMatrix& a1, const LabeledMatrix& a2,
                              const PairAction& act,
                              const std::vector<int>* transversal_override = nullptr,
                              std::vector<std::string> orbit_labels = {});

// Checks a_{x.g, y.g} = a_{xy} for every acting element.
bool action_compatible(const LabeledMatrix& a, const std::vector<std::vector<int>>& maps);

}  // namespace marksmith
