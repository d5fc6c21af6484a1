#pragma once

#include "marksmith/marks.hpp"

namespace marksmith {

// The double Burnside ring B(G,G) on the transitive-biset basis b_i indexed
// by the product's subgroup classes, with Mackey multiplication. The Mackey
// machinery is generic over G; the ghost-ring construction below it is
// specific to G = S3.
struct DoubleBurnside {
  const ProductCtx* pc = nullptr;  // product of a group with itself
  int n = 0;
  // struct_consts[i][j][k]: coefficient of b_k in b_i . b_j.
  std::vector<std::vector<std::vector<long long>>> struct_consts;

  std::vector<long long> mackey_mul(int i, int j) const { return struct_consts[i][j]; }
  std::vector<long long> mul_vec(const std::vector<long long>& x,
                                 const std::vector<long long>& y) const;
  int identity_index() const;  // index of [G x G / diagonal]
};

DoubleBurnside build_double_burnside(const ProductCtx& pc);

// The ghost ring data of QB(S3, S3): the base change M', the c-basis, the
// right regular representation matrices C_i, and the mark homomorphism
// beta' built from the kernel partition of the class labels.
struct GhostRing {
  const DoubleBurnside* db = nullptr;
  LabeledMatrix mprime;      // b_i = sum_j mprime[i][j] c_j
  RatMat mprime_inv;         // rows: c_i in b-coordinates
  std::vector<RatMat> c_regular;  // C_i: right regular representation in the c-basis
  EquivalenceOnIndex kernel_partition;  // classes of I by second Goursat section
  std::vector<RatMat> beta_c;     // beta'(c_i), 8x8 for S3

  int block_size() const { return kernel_partition.class_count(); }
  // beta' of an arbitrary element given in c-coordinates.
  RatMat beta_of_c(const std::vector<Rat>& coords) const;
  // beta'(b_i).
  RatMat beta_of_basis(int i) const;
  // c-coordinates of b_i (row i of M').
  std::vector<Rat> c_coords_of_basis(int i) const;
  // Coordinate placement pattern of the S3 ghost matrix; entry (r,c) holds
  // the 1-based coordinate index or 0.
  static std::vector<std::vector<int>> s3_pattern();
  RatMat pattern_matrix(const std::vector<Rat>& coords) const;
};

// D1, D2 are the order-22 diagonal scalings of the base change; the defaults
// are the S3 values. The identity-row normalization replaces the identity
// biset's expansion by the diagonal support of the placement pattern (a
// change of c-basis; the published S3 base change includes it). Throws
// unless the class count matches the diagonals.
GhostRing build_ghost_ring(const DoubleBurnside& db);
GhostRing build_ghost_ring(const DoubleBurnside& db, const std::vector<Rat>& d1,
                           const std::vector<Rat>& d2, bool normalize_identity_row = false);

std::vector<Rat> s3_d1();
std::vector<Rat> s3_d2();

struct RadicalAnalysis {
  std::vector<int> radical_basis;   // 0-based indices into the c-basis
  int radical_dim = 0;
  int quotient_dim = 0;
  int nilpotency_degree = 0;        // least m with J^m = 0
  std::vector<int> quotient_block_dims;  // {9, 1, 1, 1} for S3
};
RadicalAnalysis radical_analysis(const GhostRing& gr);

// Negative controls for the construction (documented behaviour of the
// alternatives): the b-basis regular representation is compatible but not
// injective; the table-of-marks base change is not even compatible.
bool b_basis_compatible_but_not_injective(const GhostRing& gr);
bool tom_base_change_incompatible(const GhostRing& gr);

}  // namespace marksmith
