// Acceptance suite: runs every criterion end to end and prints one PASS/FAIL
// line per criterion. Exits nonzero if any criterion fails. All comparisons
// are exact.

#include <chrono>
#include <iostream>
#include <random>

#include "golden.hpp"
#include "marksmith/catalogue.hpp"
#include "marksmith/doubleburnside.hpp"
#include "marksmith/render.hpp"
#include "test_util.hpp"

using namespace marksmith;
using namespace marksmith::testutil;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << name << std::endl;
  if (!ok) ++g_failures;
}

template <typename F>
void criterion(int number, const std::string& name, F&& body) {
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    std::cout << "  exception: " << e.what() << std::endl;
    ok = false;
  }
  report(number, name, ok);
}

std::vector<std::string> label_order(const char* const* labels, int n) {
  return std::vector<std::string>(labels, labels + n);
}

bool tom_matches_oracle(const ProductCtx& pc) {
  LabeledMatrix factored = tom_product(pc);
  Lattice brute = build_lattice(*pc.dp.group);
  LabeledMatrix oracle = brute_force_tom(brute);
  std::vector<int> map = match_oracle_classes(pc, brute);
  for (int i = 0; i < oracle.rows(); ++i)
    for (int j = 0; j < oracle.cols(); ++j)
      if (oracle.at(i, j) != factored.at(map[i], map[j])) return false;
  return true;
}

// The JSON artifacts of one full run, concatenated.
std::string full_run_artifacts() {
  std::string out;
  auto s3 = make_ctx(symmetric_group(3));
  out += render_json(tom_single(*s3));
  for (auto mode : {SecOrder::Full, SecOrder::P, SecOrder::K, SecOrder::PK, SecOrder::Prime})
    out += render_json(cim_sections(s3->sec, mode));
  {
    auto a5 = make_ctx(alternating_group(5));
    auto u = cyclic_group(3);
    AutGroup aut = automorphism_group(u);
    MorphismSet ms = build_morphisms(a5->sec, u, aut);
    out += render_json(cim_mor(ms));
  }
  ProductCtx pc = build_product_ctx(s3, s3);
  out += render_json(cim_product(pc, ProductOrder::K));
  out += render_json(cim_product(pc, ProductOrder::PK));
  out += render_json(cim_product(pc, ProductOrder::P));
  out += render_json(tom_product(pc));
  DoubleBurnside db = build_double_burnside(pc);
  GhostRing gr = build_ghost_ring(db);
  out += render_json(gr.mprime);
  std::vector<std::string> blabels;
  for (int t : gr.kernel_partition.transversal) blabels.push_back(pc.cls(t).label);
  out += render_json(LabeledMatrix{blabels, blabels, gr.beta_of_basis(19)});
  return out;
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();

  criterion(1, "M(S3) equals the published 4x4 table", [] {
    auto ctx = make_ctx(symmetric_group(3));
    return tom_single(*ctx).entries == parse_mat(golden::kTomS3);
  });

  criterion(2, "Sec(S3): 8 classes, all five class incidence matrices, product identities", [] {
    auto ctx = make_ctx(symmetric_group(3));
    const SectionData& sd = ctx->sec;
    if (sd.classes.size() != 8) return false;
    LabeledMatrix p = cim_sections(sd, SecOrder::P);
    LabeledMatrix k = cim_sections(sd, SecOrder::K);
    LabeledMatrix pk = cim_sections(sd, SecOrder::PK);
    LabeledMatrix full = cim_sections(sd, SecOrder::Full);
    LabeledMatrix prime = cim_sections(sd, SecOrder::Prime);
    LabeledMatrix gp = cim_sections(sd, SecOrder::GeqP);
    bool golden_ok =
        in_label_order(p, label_order(golden::kSecP_order, 8)).entries == parse_mat(golden::kSecP) &&
        in_label_order(k, label_order(golden::kSecK_order, 8)).entries == parse_mat(golden::kSecK) &&
        in_label_order(pk, label_order(golden::kSecPK_order, 8)).entries == parse_mat(golden::kSecPK) &&
        in_label_order(full, label_order(golden::kSecPK_order, 8)).entries == parse_mat(golden::kSecFull) &&
        in_label_order(prime, label_order(golden::kSecPK_order, 8)).entries == parse_mat(golden::kSecPrime);
    bool identities = full.entries == lm_mul(lm_mul(k, pk), p).entries &&
                      prime.entries == lm_mul(lm_mul(k, pk), gp).entries;
    return golden_ok && identities;
  });

  criterion(3, "(Sec(2^2), <=') is not a lattice: no unique infimum for the published pair", [] {
    auto ctx = make_ctx(klein_four_group());
    const FiniteGroup& g = *ctx->group;
    Sub whole = full_sub(g);
    Sub t22 = generated_sub(g, std::vector<int>{g.index_of(Perm::parse_cycles(4, "(1,3)(2,4)"))});
    Sub t23 = generated_sub(g, std::vector<int>{g.index_of(Perm::parse_cycles(4, "(1,4)(2,3)"))});
    Section g22{whole, t22}, g23{whole, t23};
    std::vector<Section> maximal_lower;
    for (const auto& s : ctx->sec.sections) {
      if (!(section_leq(s, g22, SecOrder::Prime) && section_leq(s, g23, SecOrder::Prime))) continue;
      bool is_max = true;
      for (const auto& t : ctx->sec.sections)
        if (!(t == s) && section_leq(t, g22, SecOrder::Prime) &&
            section_leq(t, g23, SecOrder::Prime) && section_leq(s, t, SecOrder::Prime))
          is_max = false;
      if (is_max) maximal_lower.push_back(s);
    }
    return maximal_lower.size() > 1;
  });

  criterion(4, "A5, U = C3: the 3x3 morphism matrix and its 5x5 Out-collapse", [] {
    auto a5 = make_ctx(alternating_group(5));
    auto u = cyclic_group(3);
    AutGroup aut = automorphism_group(u);
    MorphismSet ms = build_morphisms(a5->sec, u, aut);
    LabeledMatrix cim = cim_mor(ms);
    if (cim.entries != parse_mat(golden::kA5C3Cim)) return false;
    PairAction act{ms.out_action(), ms.out_action()};
    LabeledMatrix collapsed = kron_over_group(cim, cim, act);
    return collapsed.entries == parse_mat(golden::kA5C3Kron);
  });

  criterion(5, "S3 x S3: 22 classes (16/4/1/1), published blocks, table of marks, oracle", [] {
    auto s3 = make_ctx(symmetric_group(3));
    ProductCtx pc = build_product_ctx(s3, s3);
    if (pc.class_count() != 22) return false;
    std::vector<int> counts;
    for (auto u : {cyclic_group(1), cyclic_group(2), cyclic_group(3), symmetric_group(3)})
      counts.push_back(static_cast<int>(u_subgroup_classes(pc, *u).size()));
    if (counts != std::vector<int>{16, 4, 1, 1}) return false;

    // Block matrices. Classes carrying each exact bottom/top pair, ordered
    // by the complementary subgroup-class pair as in the published blocks.
    auto classes_with = [&](const char* n1, const char* n2, bool bottoms) {
      std::vector<int> out;
      for (int i = 0; i < pc.class_count(); ++i) {
        const auto& gd = pc.cls(i).goursat;
        const Sub& f1 = bottoms ? gd.k1 : gd.p1;
        const Sub& f2 = bottoms ? gd.k2 : gd.p2;
        if (pc.c1->sec.subgroup_names[pc.c1->lat.class_of_sub(f1)] == n1 &&
            pc.c2->sec.subgroup_names[pc.c2->lat.class_of_sub(f2)] == n2)
          out.push_back(i);
      }
      std::stable_sort(out.begin(), out.end(), [&](int a, int b) {
        const auto& ga = pc.cls(a).goursat;
        const auto& gb = pc.cls(b).goursat;
        auto key = [&](const GoursatData& g) {
          const Sub& o1 = bottoms ? g.p1 : g.k1;
          const Sub& o2 = bottoms ? g.p2 : g.k2;
          return std::make_pair(pc.c1->lat.class_of_sub(o1), pc.c2->lat.class_of_sub(o2));
        };
        return key(ga) < key(gb);
      });
      return out;
    };
    LabeledMatrix ak = cim_product(pc, ProductOrder::K);
    for (const auto& block : golden::kCimKBlocks) {
      std::vector<int> ids = classes_with(block.key1, block.key2, true);
      if (submatrix(ak.entries, ids) != parse_mat(block.entries)) return false;
    }
    LabeledMatrix ap = cim_product(pc, ProductOrder::P);
    for (const auto& block : golden::kCimPBlocks) {
      std::vector<int> ids = classes_with(block.key1, block.key2, false);
      if (submatrix(ap.entries, ids) != parse_mat(block.entries)) return false;
    }
    LabeledMatrix apk = cim_product(pc, ProductOrder::PK);
    std::vector<int> u1(16), u2{16, 17, 18, 19};
    for (int i = 0; i < 16; ++i) u1[i] = i;
    if (submatrix(apk.entries, u1) != parse_mat(golden::kCimU1)) return false;
    if (submatrix(apk.entries, u2) != parse_mat(golden::kCimU2)) return false;
    if (apk.at(20, 20) != 1 || apk.at(21, 21) != 1) return false;

    if (tom_product(pc).entries != parse_mat(golden::kTomS3S3)) return false;
    return tom_matches_oracle(pc);
  });

  criterion(6, "oracle sweep: factored = brute force for all 49 pairs over the seven-group set", [] {
    std::vector<CtxPtr> ctxs;
    for (const char* spec : {"C2", "C3", "C4", "V4", "C6", "S3", "A4"})
      ctxs.push_back(make_ctx(parse_group_spec(spec)));
    for (auto& a : ctxs)
      for (auto& b : ctxs) {
        ProductCtx pc = build_product_ctx(a, b);
        if (!tom_matches_oracle(pc)) {
          std::cout << "  mismatch for |G1| = " << a->group->size()
                    << ", |G2| = " << b->group->size() << std::endl;
          return false;
        }
      }
    return true;
  });

  criterion(7, "normalizer-index formula equals |N(L):L| on S3 x S3 and A4 x S3", [] {
    auto s3 = make_ctx(symmetric_group(3));
    auto a4 = make_ctx(alternating_group(4));
    for (ProductCtx pc : {build_product_ctx(s3, s3), build_product_ctx(a4, s3)}) {
      for (int i = 0; i < pc.class_count(); ++i) {
        Sub n = normalizer(pc.cls(i).rep);
        if (Int(n.order() / pc.cls(i).rep.order()) != pc.cls(i).nidx) return false;
        if (!(pc.normalizer_via_star(i) == n)) return false;
      }
    }
    return true;
  });

  criterion(8, "R Out-collapse of the morphism matrix equals the section matrix, any transversal", [] {
    std::mt19937 rng(90210);
    auto check = [&](CtxPtr ctx, GroupPtr u) {
      AutGroup aut = automorphism_group(u);
      MorphismSet ms = build_morphisms(ctx->sec, u, aut);
      LabeledMatrix cim = cim_mor(ms);
      auto act = ms.out_action();
      int n = cim.rows();
      EquivalenceOnIndex eq;
      std::vector<int> orbit_of(n, -1);
      for (int i = 0; i < n; ++i) {
        if (orbit_of[i] != -1) continue;
        std::vector<int> members{i};
        orbit_of[i] = static_cast<int>(eq.classes.size());
        for (size_t k = 0; k < members.size(); ++k)
          for (const auto& a : act)
            if (orbit_of[a[members[k]]] == -1) {
              orbit_of[a[members[k]]] = orbit_of[i];
              members.push_back(a[members[k]]);
            }
        std::sort(members.begin(), members.end());
        eq.transversal.push_back(members[0]);
        eq.classes.push_back(std::move(members));
      }
      // The expected matrix: section-level <=_{P/K} incidences on the
      // classes of this type.
      std::vector<int> secs;
      for (const auto& si : ms.sec_infos) secs.push_back(si.sec_class);
      RatMat expect = mat_zero(static_cast<int>(secs.size()), static_cast<int>(secs.size()));
      for (size_t x = 0; x < secs.size(); ++x)
        for (size_t y = 0; y < secs.size(); ++y) {
          int count = 0;
          for (int sid : ctx->sec.classes[secs[x]].members)
            if (section_leq(ctx->sec.classes[secs[y]].rep, ctx->sec.sections[sid], SecOrder::PK))
              ++count;
          expect[x][y] = count;
        }
      for (int trial = 0; trial < 4; ++trial) {
        auto [r, c] = rc_matrices(eq, cim.row_labels);
        if (mat_mul(mat_mul(r.entries, cim.entries), c.entries) != expect) return false;
        for (size_t k = 0; k < eq.classes.size(); ++k)
          eq.transversal[k] = eq.classes[k][rng() % eq.classes[k].size()];
      }
      return true;
    };
    auto s3 = make_ctx(symmetric_group(3));
    for (auto u : {cyclic_group(1), cyclic_group(2), cyclic_group(3),
                   GroupPtr(symmetric_group(3))})
      if (!check(s3, u)) return false;
    return check(make_ctx(alternating_group(5)), cyclic_group(3));
  });

  criterion(9, "star product: butterfly route equals the relational oracle on 200 random pairs", [] {
    auto s3 = make_ctx(symmetric_group(3));
    ProductCtx pc = build_product_ctx(s3, s3);
    Lattice lat = build_lattice(*pc.dp.group);
    std::mt19937 rng(161803);
    int n = static_cast<int>(lat.subgroups.size());
    for (int trial = 0; trial < 200; ++trial) {
      const Sub& l = lat.subgroups[rng() % n];
      const Sub& m = lat.subgroups[rng() % n];
      if (!(star_butterfly(pc.dp, l, pc.dp, m, pc.dp) ==
            star_relational(pc.dp, l, pc.dp, m, pc.dp)))
        return false;
    }
    return true;
  });

  criterion(10, "double Burnside suite for S3", [] {
    auto s3 = make_ctx(symmetric_group(3));
    ProductCtx pc = build_product_ctx(s3, s3);
    DoubleBurnside db = build_double_burnside(pc);
    int n = db.n;
    // Associativity on all triples.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto& ij = db.struct_consts[i][j];
        for (int k = 0; k < n; ++k) {
          const auto& jk = db.struct_consts[j][k];
          std::vector<long long> lhs(n, 0), rhs(n, 0);
          for (int t = 0; t < n; ++t) {
            if (ij[t])
              for (int z = 0; z < n; ++z) lhs[z] += ij[t] * db.struct_consts[t][k][z];
            if (jk[t])
              for (int z = 0; z < n; ++z) rhs[z] += jk[t] * db.struct_consts[i][t][z];
          }
          if (lhs != rhs) return false;
        }
      }
    GhostRing gr = build_ghost_ring(db);
    if (gr.mprime.entries != parse_mat(golden::kMPrime)) return false;
    if (gr.c_coords_of_basis(19) != parse_mat(golden::kB20Coords).at(0)) return false;
    if (gr.c_coords_of_basis(21) != parse_mat(golden::kB22Coords).at(0)) return false;
    if (gr.beta_of_basis(21) != mat_identity(8)) return false;
    if (gr.beta_of_basis(19) != parse_mat(golden::kBetaB20)) return false;
    // Homomorphism on all 484 pairs, and injectivity.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto& sc = db.struct_consts[i][j];
        std::vector<Rat> prod_c(n, Rat(0));
        for (int t = 0; t < n; ++t) {
          if (!sc[t]) continue;
          for (int z = 0; z < n; ++z) prod_c[z] += Rat(sc[t]) * gr.mprime.entries[t][z];
        }
        if (gr.beta_of_c(prod_c) != mat_mul(gr.beta_of_basis(i), gr.beta_of_basis(j)))
          return false;
      }
    RatMat stacked;
    for (int i = 0; i < n; ++i) {
      std::vector<Rat> flat;
      for (const auto& row : gr.beta_of_basis(i)) flat.insert(flat.end(), row.begin(), row.end());
      stacked.push_back(std::move(flat));
    }
    if (mat_rank(stacked) != n) return false;
    RadicalAnalysis ra = radical_analysis(gr);  // throws unless nilpotent two-sided ideal
    std::vector<int> expected_radical;
    for (int i : golden::kRadicalIndices) expected_radical.push_back(i - 1);
    return ra.radical_basis == expected_radical && ra.quotient_dim == 12;
  });

  criterion(11, "determinism: two full runs produce byte-identical JSON artifacts", [] {
    return full_run_artifacts() == full_run_artifacts();
  });

  auto t1 = std::chrono::steady_clock::now();
  std::cout << "total: " << (11 - g_failures) << "/11 criteria passed in "
            << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() << " ms"
            << std::endl;
  return g_failures == 0 ? 0 : 1;
}
