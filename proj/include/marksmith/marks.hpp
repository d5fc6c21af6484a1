#pragma once

#include "marksmith/product.hpp"

namespace marksmith {

// Table of marks M(G) = D * A(<=) over the conjugacy classes of subgroups,
// sorted ascending by order; lower triangular with the normalizer indices on
// the diagonal.
LabeledMatrix tom_single(const GroupCtx& ctx);

// Class incidence matrix A(<=) of G acting on its subgroup lattice.
LabeledMatrix cim_subgroups(const GroupCtx& ctx);

enum class ProductOrder { K, PK, P, GeqP };

// Class incidence matrix of (Sub(G1 x G2), <=_mode) over the product's
// canonical class order, assembled blockwise from factor data: mode K and P
// from the N(K1) x N(K2) / N(P1) x N(P2) actions on exact-bottom/top
// subposets, mode PK from the Out(U)-collapsed Kronecker products of the
// factors' morphism class incidence matrices.
LabeledMatrix cim_product(const ProductCtx& pc, ProductOrder mode);

// M(G1 x G2) = D * A(<=_K) * A(<=_{P/K}) * A(<=_P).
LabeledMatrix tom_product(const ProductCtx& pc);

// Independent oracle: marks |(G/H)^K| counted directly on coset spaces.
LabeledMatrix brute_force_tom(const Lattice& lat);

// Mapping of the oracle's classes onto the product's classes (by Goursat
// identification); position i holds the pc class of brute class i.
std::vector<int> match_oracle_classes(const ProductCtx& pc, const Lattice& brute);

}  // namespace marksmith
