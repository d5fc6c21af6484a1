#include "doctest.h"

#include <random>

#include "golden.hpp"
#include "marksmith/catalogue.hpp"
#include "marksmith/product.hpp"
#include "test_util.hpp"

using namespace marksmith;
using namespace marksmith::testutil;

namespace {

// The set keeps raw pointers into the context, so the pair travels together.
struct CtxMorphisms {
  CtxPtr ctx;
  MorphismSet ms;
};

CtxMorphisms morphisms_of(CtxPtr ctx, GroupPtr u) {
  AutGroup aut = automorphism_group(u);
  MorphismSet ms = build_morphisms(ctx->sec, u, aut);
  return {std::move(ctx), std::move(ms)};
}

}  // namespace

TEST_CASE("class counts") {
  SUBCASE("trivial group") {
    auto [ctx_, ms] = morphisms_of(make_ctx(cyclic_group(1)), cyclic_group(1));
    CHECK(ms.class_count() == 1);
    CHECK(ms.classes[0].orbit.size() == 1);
  }
  SUBCASE("A4 with U = 2^2: Aut(U) makes two orbits") {
    auto [ctx_, ms] = morphisms_of(make_ctx(alternating_group(4)), klein_four_group());
    CHECK(ms.class_count() == 2);
    for (const auto& c : ms.classes) CHECK(c.a_theta.order() == 3);
  }
  SUBCASE("A5 with U = C3: three classes") {
    auto [ctx_, ms] = morphisms_of(make_ctx(alternating_group(5)), cyclic_group(3));
    REQUIRE(ms.class_count() == 3);
    CHECK(ms.classes[0].rep.sec.top.order() == 3);
    CHECK(ms.classes[1].rep.sec.top.order() == 12);
    CHECK(ms.classes[2].rep.sec.top.order() == 12);
  }
  SUBCASE("no sections of the requested type") {
    auto [ctx_, ms] = morphisms_of(make_ctx(symmetric_group(3)), cyclic_group(5));
    CHECK(ms.class_count() == 0);
  }
}

TEST_CASE("morphism automizers") {
  SUBCASE("G/G -> 1 is rigid") {
    auto [ctx_, ms] = morphisms_of(make_ctx(symmetric_group(3)), cyclic_group(1));
    for (const auto& c : ms.classes) {
      CHECK(c.a_theta.order() == 1);
      CHECK(c.o_theta_size == 1);
    }
  }
  SUBCASE("(A4, 2^2) -> C3 in A5 has trivial A_theta, so Out permutes two classes") {
    auto [ctx_, ms] = morphisms_of(make_ctx(alternating_group(5)), cyclic_group(3));
    REQUIRE(ms.class_count() == 3);
    CHECK(ms.classes[1].a_theta.order() == 1);
    CHECK(ms.classes[2].a_theta.order() == 1);
    auto act = ms.out_action();
    REQUIRE(act.size() == 2);  // |Out(C3)| = 2
    CHECK(act[1][1] == 2);     // the nontrivial outer automorphism swaps them
    CHECK(act[1][2] == 1);
    CHECK(act[1][0] == 0);
  }
  SUBCASE("(3,1) -> C3 in S3 realizes all of Aut(C3)") {
    auto [ctx_, ms] = morphisms_of(make_ctx(symmetric_group(3)), cyclic_group(3));
    REQUIRE(ms.class_count() == 1);
    CHECK(ms.classes[0].a_theta.order() == 2);
    CHECK(ms.classes[0].o_theta_size == 2);
  }
}

TEST_CASE("graphs") {
  auto ctx = make_ctx(symmetric_group(3));
  SUBCASE("the identity morphism has the diagonal as graph") {
    auto [ctx_, ms] = morphisms_of(ctx, symmetric_group(3));
    REQUIRE(ms.class_count() == 1);
    Sub g = ms.graph(ms.classes[0].rep);
    CHECK(g.order() == 6);
  }
  SUBCASE("|graph| = |K| |U| for every morphism class of every type") {
    for (auto u : {cyclic_group(1), cyclic_group(2), cyclic_group(3), symmetric_group(3)}) {
      auto [ctx_, ms] = morphisms_of(ctx, u);
      for (const auto& c : ms.classes)
        CHECK(ms.graph(c.rep).order() == c.rep.sec.bottom.order() * u->size());
    }
  }
  SUBCASE("trivial morphism graph is trivial") {
    auto [ctx_, ms] = morphisms_of(make_ctx(cyclic_group(1)), cyclic_group(1));
    CHECK(ms.graph(ms.classes[0].rep).order() == 1);
  }
}

TEST_CASE("graph order coincides with the morphism order") {
  auto s3 = make_ctx(symmetric_group(3));
  auto a4 = make_ctx(alternating_group(4));
  auto check = [](CtxPtr ctx, GroupPtr u) {
    auto [ctx_, ms] = morphisms_of(ctx, u);
    // Every morphism of this type: all G-conjugates of all classes.
    std::vector<UMorphism> all;
    for (const auto& c : ms.classes)
      for (const auto& t : c.orbit) all.push_back(t);
    for (const auto& lo : all)
      for (const auto& hi : all) {
        bool leq = morphism_leq(lo, hi);
        bool graphs = ms.graph(hi).contains_sub(ms.graph(lo));
        CHECK(leq == graphs);
      }
  };
  for (auto u : {cyclic_group(1), cyclic_group(2), cyclic_group(3), symmetric_group(3)})
    check(s3, u);
  for (auto u : {cyclic_group(2), cyclic_group(3), klein_four_group()}) check(a4, u);
}

TEST_CASE("A5 morphisms below conjugates: ex a5-1 rows") {
  auto [ctx_, ms] = morphisms_of(make_ctx(alternating_group(5)), cyclic_group(3));
  REQUIRE(ms.class_count() == 3);
  const UMorphism& small = ms.classes[0].rep;  // over (3,1)
  // Below exactly one member of each orbit of the two (A4,2^2) classes.
  for (int big : {1, 2}) {
    int count = 0;
    for (const auto& t : ms.classes[big].orbit) {
      // Restrict to conjugates whose section lies above small's section.
      if (morphism_leq(small, t)) ++count;
      (void)t;
    }
    // a(theta_big, theta_small) entry of the golden matrix is 1.
    CHECK(count == 1);
  }
}

TEST_CASE("class incidence matrices") {
  SUBCASE("A5, U = C3") {
    auto [ctx_, ms] = morphisms_of(make_ctx(alternating_group(5)), cyclic_group(3));
    CHECK(cim_mor(ms).entries == parse_mat(golden::kA5C3Cim));
  }
  SUBCASE("S3, U = C2") {
    auto [ctx_, ms] = morphisms_of(make_ctx(symmetric_group(3)), cyclic_group(2));
    CHECK(cim_mor(ms).entries == parse_mat(golden::kS3C2Cim));
  }
  SUBCASE("G = U: single class, [1]") {
    auto [ctx_, ms] = morphisms_of(make_ctx(symmetric_group(3)), symmetric_group(3));
    CHECK(cim_mor(ms).entries == RatMat{{Rat(1)}});
  }
}

TEST_CASE("collapsing the morphism matrix recovers the section matrix") {
  // R(Out(U)) A^G_U(<=) C(Out(U)) = A_U(<=_{P/K}), with transversal
  // independence.
  std::mt19937 rng(577);
  auto check = [&](CtxPtr ctx, GroupPtr u, const char* expect) {
    auto [ctx_, ms] = morphisms_of(ctx, u);
    LabeledMatrix cim = cim_mor(ms);
    auto act = ms.out_action();
    int n = cim.rows();

    // Orbits of Out(U) on single class indices.
    EquivalenceOnIndex eq;
    std::vector<int> orbit_of(n, -1);
    for (int i = 0; i < n; ++i) {
      if (orbit_of[i] != -1) continue;
      std::vector<int> members;
      int id = static_cast<int>(eq.classes.size());
      std::vector<int> stack{i};
      orbit_of[i] = id;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        members.push_back(x);
        for (const auto& a : act)
          if (orbit_of[a[x]] == -1) { orbit_of[a[x]] = id; stack.push_back(a[x]); }
      }
      std::sort(members.begin(), members.end());
      eq.transversal.push_back(members[0]);
      eq.classes.push_back(std::move(members));
    }

    RatMat expected = parse_mat(expect);
    for (int trial = 0; trial < 5; ++trial) {
      auto [r, c] = rc_matrices(eq, cim.row_labels);
      RatMat collapsed = mat_mul(mat_mul(r.entries, cim.entries), c.entries);
      CHECK(collapsed == expected);
      for (size_t k = 0; k < eq.classes.size(); ++k)
        eq.transversal[k] = eq.classes[k][rng() % eq.classes[k].size()];
    }
  };

  check(make_ctx(alternating_group(5)), cyclic_group(3), golden::kA5C3SecPK);
  auto s3 = make_ctx(symmetric_group(3));
  check(s3, cyclic_group(2), "1 .\n1 1\n");
  check(s3, cyclic_group(1), "1 . . .\n3 1 . .\n1 . 1 .\n1 1 1 1\n");
  check(s3, cyclic_group(3), "1\n");
  check(s3, symmetric_group(3), "1\n");
}

TEST_CASE("mismatched targets are rejected") {
  auto ctx = make_ctx(symmetric_group(3));
  auto [c2ctx, ms2] = morphisms_of(ctx, cyclic_group(2));
  auto [c3ctx, ms3] = morphisms_of(ctx, cyclic_group(3));
  CHECK_THROWS_AS(morphism_leq(ms2.classes[0].rep, ms3.classes[0].rep), std::invalid_argument);
  CHECK_THROWS_AS(pi_subgroup(ms2.dp_gu, ms2.classes[0].rep, ms3.classes[0].rep),
                  std::invalid_argument);
}

TEST_CASE("regular Aut(U) action on the morphisms of a section") {
  auto ctx = make_ctx(alternating_group(4));
  for (auto u : {cyclic_group(2), cyclic_group(3), klein_four_group()}) {
    auto [ctx_, ms] = morphisms_of(ctx, u);
    size_t total = 0;
    for (const auto& c : ms.classes) total += c.orbit.size();
    size_t sections = 0;
    for (const auto& si : ms.sec_infos)
      sections += ctx->sec.classes[si.sec_class].members.size();
    CHECK(total == sections * automorphism_group(u).group->size());
  }
}
