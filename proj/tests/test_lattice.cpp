#include "doctest.h"

#include <set>

#include "marksmith/catalogue.hpp"
#include "marksmith/context.hpp"

using namespace marksmith;

namespace {

// Independent subgroup-enumeration oracle: closure of every subset of size
// at most two as bitsets over the multiplication table, then pairwise joins
// to a fixpoint. Shares no code path with the layered enumeration.
std::set<std::vector<bool>> oracle_subgroups(const FiniteGroup& g) {
  int n = g.size();
  auto close = [&](std::vector<bool> in) {
    std::vector<int> stack;
    for (int e = 0; e < n; ++e)
      if (in[e]) stack.push_back(e);
    if (!in[g.identity()]) {
      in[g.identity()] = true;
      stack.push_back(g.identity());
    }
    for (size_t i = 0; i < stack.size(); ++i) {
      int inv = g.inv(stack[i]);
      if (!in[inv]) { in[inv] = true; stack.push_back(inv); }
      for (size_t j = 0; j <= i; ++j)
        for (int p : {g.mul(stack[i], stack[j]), g.mul(stack[j], stack[i])})
          if (!in[p]) { in[p] = true; stack.push_back(p); }
    }
    return in;
  };
  std::set<std::vector<bool>> subs;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      std::vector<bool> seed(n, false);
      seed[a] = seed[b] = true;
      subs.insert(close(std::move(seed)));
    }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<bool>> current(subs.begin(), subs.end());
    for (size_t i = 0; i < current.size(); ++i)
      for (size_t j = i + 1; j < current.size(); ++j) {
        std::vector<bool> seed(n, false);
        for (int e = 0; e < n; ++e) seed[e] = current[i][e] || current[j][e];
        if (subs.insert(close(std::move(seed))).second) grew = true;
      }
  }
  return subs;
}

void check_against_oracle(GroupPtr g) {
  Lattice lat = build_lattice(*g);
  auto oracle = oracle_subgroups(*g);
  REQUIRE(lat.subgroups.size() == oracle.size());
  for (const auto& s : lat.subgroups) {
    std::vector<bool> bits(g->size(), false);
    for (int e : s.elems) bits[e] = true;
    CHECK(oracle.count(bits) == 1);
  }
}

}  // namespace

TEST_CASE("subgroup counts") {
  CHECK(build_lattice(*cyclic_group(1)).subgroups.size() == 1);
  CHECK(build_lattice(*symmetric_group(3)).subgroups.size() == 6);
  CHECK(build_lattice(*symmetric_group(3)).classes.size() == 4);
  CHECK(build_lattice(*alternating_group(5)).subgroups.size() == 59);
  CHECK(build_lattice(*alternating_group(5)).classes.size() == 9);
}

TEST_CASE("enumeration agrees with the two-generator-closure oracle") {
  check_against_oracle(symmetric_group(3));
  check_against_oracle(klein_four_group());
  check_against_oracle(alternating_group(4));
  check_against_oracle(direct_product(symmetric_group(3), cyclic_group(2)).group);
  check_against_oracle(direct_product(symmetric_group(3), symmetric_group(3)).group);
}

TEST_CASE("enumeration bound") {
  CHECK_THROWS_AS(build_lattice(*symmetric_group(5), 100), BoundExceeded);
}

TEST_CASE("classes partition the lattice") {
  for (auto g : {symmetric_group(3), alternating_group(4), cyclic_group(6)}) {
    Lattice lat = build_lattice(*g);
    size_t total = 0;
    for (const auto& c : lat.classes) {
      total += c.members.size();
      CHECK(c.size == g->size() / c.normalizer.order());
      for (int m : c.members)
        CHECK(conjugate(lat.subgroups[m], lat.to_rep[m]) == c.rep);
    }
    CHECK(total == lat.subgroups.size());
  }
  // Abelian: every class is a singleton.
  for (const auto& c : build_lattice(*cyclic_group(6)).classes) CHECK(c.size == 1);
}

TEST_CASE("lattice closed under conjugation and intersection") {
  for (auto g : {symmetric_group(3), alternating_group(4)}) {
    Lattice lat = build_lattice(*g);
    for (const auto& a : lat.subgroups) {
      for (int e = 0; e < g->size(); ++e) CHECK_NOTHROW(lat.subgroup_id(conjugate(a, e)));
      for (const auto& b : lat.subgroups) CHECK_NOTHROW(lat.subgroup_id(intersect(a, b)));
    }
  }
}

TEST_CASE("normal closure") {
  auto s3 = symmetric_group(3);
  Sub whole = full_sub(*s3);
  Sub c3 = generated_sub(*s3, std::vector<int>{s3->index_of(Perm::parse_cycles(3, "(1,2,3)"))});
  Sub c2 = generated_sub(*s3, std::vector<int>{s3->index_of(Perm::parse_cycles(3, "(1,2)"))});
  CHECK(normal_closure(c3, whole) == c3);     // already normal
  CHECK(normal_closure(c2, whole) == whole);  // conjugates of a transposition generate S3
  CHECK(normal_closure(c2, c2) == c2);
  CHECK_THROWS_AS(normal_closure(whole, c2), std::invalid_argument);
}

TEST_CASE("quotients") {
  auto s3 = symmetric_group(3);
  Sub whole = full_sub(*s3);
  Sub c3 = generated_sub(*s3, std::vector<int>{s3->index_of(Perm::parse_cycles(3, "(1,2,3)"))});
  Sub triv = trivial_sub(*s3);

  CHECK(make_quotient(whole, whole).group->size() == 1);
  CHECK(make_quotient(whole, c3).group->size() == 2);
  Quotient q = make_quotient(whole, triv);
  CHECK(q.group->size() == 6);
  CHECK(find_isomorphism(*q.group, *s3).has_value());

  Sub c2 = generated_sub(*s3, std::vector<int>{s3->index_of(Perm::parse_cycles(3, "(1,2)"))});
  CHECK_THROWS_AS(make_quotient(whole, c2), std::invalid_argument);

  SUBCASE("projection is a homomorphism, exhaustively") {
    Quotient qc3 = make_quotient(whole, c3);
    for (size_t i = 0; i < whole.elems.size(); ++i)
      for (size_t j = 0; j < whole.elems.size(); ++j) {
        int ab = s3->mul(whole.elems[i], whole.elems[j]);
        CHECK(qc3.image_of(ab) == qc3.group->mul(qc3.project[i], qc3.project[j]));
      }
    int kernel = 0;
    for (size_t i = 0; i < whole.elems.size(); ++i)
      if (qc3.project[i] == qc3.group->identity()) ++kernel;
    CHECK(kernel == c3.order());
  }
}

TEST_CASE("isomorphism search") {
  auto s3 = symmetric_group(3);
  SUBCASE("identity case") {
    auto iso = find_isomorphism(*s3, *s3);
    REQUIRE(iso);
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) CHECK((*iso)(s3->mul(a, b)) == s3->mul((*iso)(a), (*iso)(b)));
  }
  SUBCASE("order profile separates C4 from V4") {
    CHECK_FALSE(find_isomorphism(*klein_four_group(), *cyclic_group(4)));
    CHECK_FALSE(find_isomorphism(*cyclic_group(6), *s3));
  }
  SUBCASE("A4 / V4 is cyclic of order 3") {
    auto a4 = alternating_group(4);
    Sub v4 = generated_sub(*a4, std::vector<int>{a4->index_of(Perm::parse_cycles(4, "(1,2)(3,4)")),
                                                 a4->index_of(Perm::parse_cycles(4, "(1,3)(2,4)"))});
    Quotient q = make_quotient(full_sub(*a4), v4);
    CHECK(find_isomorphism(*q.group, *cyclic_group(3)).has_value());
  }
  SUBCASE("symmetric in its arguments") {
    for (auto a : {cyclic_group(4), klein_four_group()})
      for (auto b : {cyclic_group(4), klein_four_group()})
        CHECK(find_isomorphism(*a, *b).has_value() == find_isomorphism(*b, *a).has_value());
  }
}

TEST_CASE("automorphism groups") {
  SUBCASE("C3") {
    AutGroup ag = automorphism_group(cyclic_group(3));
    CHECK(ag.group->size() == 2);
    CHECK(ag.inner.order() == 1);
    CHECK(ag.out_size() == 2);
  }
  SUBCASE("V4 has Aut isomorphic to S3") {
    AutGroup ag = automorphism_group(klein_four_group());
    CHECK(ag.group->size() == 6);
    CHECK(find_isomorphism(*ag.group, *symmetric_group(3)).has_value());
  }
  SUBCASE("S3 is complete") {
    AutGroup ag = automorphism_group(symmetric_group(3));
    CHECK(ag.group->size() == 6);
    CHECK(ag.inner.order() == 6);
    CHECK(ag.out_size() == 1);
  }
  SUBCASE("Inn is normal and the transversal covers Aut") {
    for (auto u : {cyclic_group(3), klein_four_group(), symmetric_group(3), alternating_group(4)}) {
      AutGroup ag = automorphism_group(u);
      CHECK(is_normal_in(ag.inner, full_sub(*ag.group)));
      CHECK(ag.group->size() == ag.inner.order() * ag.out_size());
      CHECK(ag.out_transversal[0] == ag.group->identity());
    }
  }
}

TEST_CASE("subgroup class names") {
  auto ctx = make_ctx(symmetric_group(3));
  CHECK(ctx->sec.subgroup_names == std::vector<std::string>{"1", "2", "3", "S3"});
  auto v4 = make_ctx(klein_four_group());
  CHECK(v4->sec.subgroup_names == std::vector<std::string>{"1", "2a", "2b", "2c", "2^2"});
}
