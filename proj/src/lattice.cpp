#include "marksmith/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace marksmith {

Sub normal_closure(const Sub& a, const Sub& b) {
  if (!b.contains_sub(a)) throw std::invalid_argument("normal_closure: A not contained in B");
  std::vector<int> seeds;
  for (int x : a.elems)
    for (int g : b.elems) seeds.push_back(a.parent->conj(x, g));
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  return generated_sub(*a.parent, seeds);
}

int Lattice::subgroup_id(const Sub& s) const {
  auto it = std::lower_bound(subgroups.begin(), subgroups.end(), s, sub_less);
  if (it == subgroups.end() || !(*it == s))
    throw std::invalid_argument("Lattice: unknown subgroup");
  return static_cast<int>(it - subgroups.begin());
}

Lattice build_lattice(const FiniteGroup& g, int max_order) {
  if (g.size() > max_order)
    throw BoundExceeded("subgroup enumeration bound exceeded: |G| = " + std::to_string(g.size()) +
                        " > " + std::to_string(max_order));

  std::set<std::vector<int>> keys;
  std::vector<Sub> all;
  auto add = [&](Sub s) {
    if (keys.insert(s.elems).second) all.push_back(std::move(s));
  };
  for (int e = 0; e < g.size(); ++e) add(generated_sub(g, std::vector<int>{e}));

  size_t frontier_begin = 0;
  while (frontier_begin < all.size()) {
    size_t frontier_end = all.size();
    for (size_t i = frontier_begin; i < frontier_end; ++i)
      for (size_t j = 0; j < frontier_end; ++j) {
        const Sub& a = all[i];
        const Sub& b = all[j];
        if (a.contains_sub(b) || b.contains_sub(a)) continue;
        add(join(a, b));
      }
    frontier_begin = frontier_end;
  }

  Lattice lat;
  lat.group = &g;
  lat.subgroups = std::move(all);
  std::sort(lat.subgroups.begin(), lat.subgroups.end(), sub_less);

  int n = static_cast<int>(lat.subgroups.size());
  lat.class_of.assign(n, -1);
  lat.to_rep.assign(n, g.identity());
  const auto& gens = g.generator_indices();
  for (int i = 0; i < n; ++i) {
    if (lat.class_of[i] != -1) continue;
    // Subgroups are sorted, so the first unvisited member is the canonical
    // minimum of its class.
    int cid = static_cast<int>(lat.classes.size());
    std::vector<int> members{i};
    std::vector<int> from_rep{g.identity()};  // member = rep^{from_rep}
    lat.class_of[i] = cid;
    for (size_t k = 0; k < members.size(); ++k)
      for (int ge : gens) {
        Sub c = conjugate(lat.subgroups[members[k]], ge);
        int id = lat.subgroup_id(c);
        if (lat.class_of[id] == -1) {
          lat.class_of[id] = cid;
          members.push_back(id);
          from_rep.push_back(g.mul(from_rep[k], ge));
        }
      }
    for (size_t k = 0; k < members.size(); ++k) lat.to_rep[members[k]] = g.inv(from_rep[k]);
    std::sort(members.begin(), members.end());
    SubgroupClass cls;
    cls.rep = lat.subgroups[i];
    cls.normalizer = normalizer(cls.rep);
    cls.size = g.size() / cls.normalizer.order();
    cls.members = std::move(members);
    if (cls.size != static_cast<int>(cls.members.size()))
      throw std::logic_error("build_lattice: orbit size disagrees with normalizer index");
    lat.classes.push_back(std::move(cls));
  }
  return lat;
}

int Quotient::image_of(int parent_elem) const {
  auto it = std::lower_bound(top.elems.begin(), top.elems.end(), parent_elem);
  if (it == top.elems.end() || *it != parent_elem)
    throw std::invalid_argument("Quotient: element outside the top group");
  return project[it - top.elems.begin()];
}

Quotient make_quotient(const Sub& p, const Sub& k) {
  if (!p.contains_sub(k) || !is_normal_in(k, p))
    throw std::invalid_argument("make_quotient: K is not normal in P");
  const FiniteGroup& g = *p.parent;
  Cosets cos = right_cosets(p, k);
  int nc = static_cast<int>(cos.reps.size());

  // Right multiplication permutes the cosets of K; the image of P is the
  // quotient acting faithfully on them.
  std::vector<Perm> images;
  std::vector<Perm> per_elem(p.elems.size(), Perm(nc));
  for (size_t i = 0; i < p.elems.size(); ++i) {
    std::vector<int> img(nc);
    for (int c = 0; c < nc; ++c) img[c] = cos.coset_of_element(g.mul(cos.reps[c], p.elems[i]));
    per_elem[i] = Perm(std::move(img));
  }
  std::vector<Perm> gens;
  for (int ge : find_generators(p)) gens.push_back(per_elem[cos.index_in_top(ge)]);
  if (gens.empty()) gens.push_back(Perm(nc));
  auto q = std::make_shared<const FiniteGroup>(nc, std::move(gens));
  if (q->size() != p.order() / k.order())
    throw std::logic_error("make_quotient: wrong quotient order");

  Quotient quo;
  quo.top = p;
  quo.bottom = k;
  quo.group = q;
  quo.project.resize(p.elems.size());
  for (size_t i = 0; i < p.elems.size(); ++i) quo.project[i] = q->index_of(per_elem[i]);
  return quo;
}

Isomorphism Isomorphism::inverse() const {
  Isomorphism out{target, source, std::vector<int>(map.size())};
  for (size_t i = 0; i < map.size(); ++i) out.map[map[i]] = static_cast<int>(i);
  return out;
}

Isomorphism Isomorphism::then(const Isomorphism& next) const {
  assert(target == next.source);
  Isomorphism out{source, next.target, std::vector<int>(map.size())};
  for (size_t i = 0; i < map.size(); ++i) out.map[i] = next.map[map[i]];
  return out;
}

namespace {

// (element order, conjugacy class size) fingerprint per element.
std::vector<std::pair<int, int>> element_fingerprints(const FiniteGroup& g) {
  std::vector<int> class_size(g.size(), 0);
  std::vector<int> cls(g.size(), -1);
  int nc = 0;
  for (int e = 0; e < g.size(); ++e) {
    if (cls[e] != -1) continue;
    std::vector<int> orbit{e};
    cls[e] = nc;
    for (size_t i = 0; i < orbit.size(); ++i)
      for (int ge : g.generator_indices()) {
        int c = g.conj(orbit[i], ge);
        if (cls[c] == -1) { cls[c] = nc; orbit.push_back(c); }
      }
    for (int x : orbit) class_size[x] = static_cast<int>(orbit.size());
    ++nc;
  }
  std::vector<std::pair<int, int>> fp(g.size());
  for (int e = 0; e < g.size(); ++e) fp[e] = {g.element_order(e), class_size[e]};
  return fp;
}

// Backtracking over generator images; collects isomorphisms until `limit`.
void iso_search(const FiniteGroup& a, const FiniteGroup& b, std::vector<Isomorphism>& out,
                size_t limit) {
  if (a.size() != b.size()) return;
  auto fpa = element_fingerprints(a);
  auto fpb = element_fingerprints(b);
  {
    auto sa = fpa, sb = fpb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return;
  }
  std::vector<int> gens = find_generators(full_sub(a));

  // Partial map as an element table, extended by closure; -1 = unassigned.
  struct State {
    std::vector<int> fwd, bwd;
    std::vector<int> assigned;  // chronological list of a-elements mapped
  };
  State st{std::vector<int>(a.size(), -1), std::vector<int>(b.size(), -1), {}};
  st.fwd[a.identity()] = b.identity();
  st.bwd[b.identity()] = a.identity();
  st.assigned.push_back(a.identity());

  // Extends the partial map with x -> y and all forced products; returns the
  // number of assignments made, or -1 on contradiction (after rollback).
  auto extend = [&](int x, int y) -> int {
    size_t mark = st.assigned.size();
    auto undo = [&] {
      while (st.assigned.size() > mark) {
        int e = st.assigned.back();
        st.assigned.pop_back();
        st.bwd[st.fwd[e]] = -1;
        st.fwd[e] = -1;
      }
    };
    if (st.fwd[x] != -1) return st.fwd[x] == y ? 0 : -1;
    if (st.bwd[y] != -1) return -1;
    if (fpa[x] != fpb[y]) return -1;
    st.fwd[x] = y;
    st.bwd[y] = x;
    st.assigned.push_back(x);
    // Close under products with everything already assigned.
    for (size_t i = 0; i < st.assigned.size(); ++i) {
      int u = st.assigned[i];
      for (size_t j = 0; j < st.assigned.size(); ++j) {
        int v = st.assigned[j];
        int p = a.mul(u, v);
        int q = b.mul(st.fwd[u], st.fwd[v]);
        if (st.fwd[p] == -1) {
          if (st.bwd[q] != -1 || fpa[p] != fpb[q]) { undo(); return -1; }
          st.fwd[p] = q;
          st.bwd[q] = p;
          st.assigned.push_back(p);
        } else if (st.fwd[p] != q) {
          undo();
          return -1;
        }
      }
    }
    return static_cast<int>(st.assigned.size() - mark);
  };

  std::vector<int> images;
  auto rec = [&](auto&& self, size_t gi) -> bool {
    if (out.size() >= limit) return true;
    if (gi == gens.size()) {
      if (st.assigned.size() != static_cast<size_t>(a.size())) return false;
      Isomorphism iso{&a, &b, st.fwd};
      out.push_back(std::move(iso));
      return out.size() >= limit;
    }
    int x = gens[gi];
    for (int y = 0; y < b.size(); ++y) {
      if (fpb[y] != fpa[x]) continue;
      size_t mark = st.assigned.size();
      if (extend(x, y) >= 0) {
        if (self(self, gi + 1)) return true;
      }
      while (st.assigned.size() > mark) {
        int e = st.assigned.back();
        st.assigned.pop_back();
        st.bwd[st.fwd[e]] = -1;
        st.fwd[e] = -1;
      }
    }
    return false;
  };
  rec(rec, 0);
}

}  // namespace

std::optional<Isomorphism> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  std::vector<Isomorphism> out;
  iso_search(a, b, out, 1);
  if (out.empty()) return std::nullopt;
  return out.front();
}

std::vector<Isomorphism> all_isomorphisms(const FiniteGroup& a, const FiniteGroup& b) {
  std::vector<Isomorphism> out;
  iso_search(a, b, out, static_cast<size_t>(-1));
  return out;
}

AutGroup automorphism_group(GroupPtr u) {
  std::vector<Isomorphism> autos = all_isomorphisms(*u, *u);
  std::vector<Perm> perms;
  perms.reserve(autos.size());
  for (const auto& iso : autos) perms.push_back(Perm(iso.map));

  // Aut(U) as a permutation group on U's element indices. Composition of
  // automorphism tables is exactly Perm multiplication.
  auto grp = std::make_shared<const FiniteGroup>(u->size(), perms);
  if (grp->size() != static_cast<int>(perms.size()))
    throw std::logic_error("automorphism_group: automorphisms not closed");

  AutGroup ag;
  ag.base = u;
  ag.group = grp;

  std::vector<int> inner;
  for (int e = 0; e < u->size(); ++e) {
    std::vector<int> img(u->size());
    for (int x = 0; x < u->size(); ++x) img[x] = u->conj(x, e);
    inner.push_back(grp->index_of(Perm(std::move(img))));
  }
  std::sort(inner.begin(), inner.end());
  inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
  ag.inner = Sub{grp.get(), std::move(inner)};

  ag.out_coset_of.assign(grp->size(), -1);
  for (int e = 0; e < grp->size(); ++e) {
    if (ag.out_coset_of[e] != -1) continue;
    int id = static_cast<int>(ag.out_transversal.size());
    ag.out_transversal.push_back(e);
    for (int i : ag.inner.elems) ag.out_coset_of[grp->mul(i, e)] = id;
  }
  return ag;
}

}  // namespace marksmith
