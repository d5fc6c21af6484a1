#include "marksmith/product.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace marksmith {

GoursatData goursat_decompose(const DirectProduct& dp, const Sub& l) {
  if (l.parent != dp.group.get())
    throw std::invalid_argument("goursat_decompose: subgroup not in this product");
  GoursatData gd;
  gd.l = l;
  gd.p1 = dp.project_left(l);
  gd.p2 = dp.project_right(l);
  std::vector<int> k1, k2;
  int id1 = dp.left->identity(), id2 = dp.right->identity();
  for (int e : l.elems) {
    if (dp.right_of(e) == id2) k1.push_back(dp.left_of(e));
    if (dp.left_of(e) == id1) k2.push_back(dp.right_of(e));
  }
  gd.k1 = Sub{dp.left.get(), std::move(k1)};
  gd.k2 = Sub{dp.right.get(), std::move(k2)};

  gd.theta.assign(gd.p1.elems.size(), -1);
  for (int e : l.elems) {
    int a = dp.left_of(e);
    auto it = std::lower_bound(gd.p1.elems.begin(), gd.p1.elems.end(), a);
    size_t i = it - gd.p1.elems.begin();
    if (gd.theta[i] == -1) gd.theta[i] = dp.right_of(e);  // elems sorted: first hit is minimal
  }
  int u = gd.p1.order() / gd.k1.order();
  if (u != gd.p2.order() / gd.k2.order() ||
      l.order() != gd.k1.order() * gd.k2.order() * u)
    throw std::logic_error("goursat_decompose: inconsistent section data");
  return gd;
}

Sub pi_subgroup(const DirectProduct& dp, const UMorphism& m1, const UMorphism& m2) {
  if (m1.target != m2.target) throw std::invalid_argument("pi_subgroup: target mismatch");
  std::vector<int> elems;
  for (size_t i = 0; i < m1.sec.top.elems.size(); ++i)
    for (size_t j = 0; j < m2.sec.top.elems.size(); ++j)
      if (m1.map[i] == m2.map[j])
        elems.push_back(dp.pair(m1.sec.top.elems[i], m2.sec.top.elems[j]));
  std::sort(elems.begin(), elems.end());
  Sub l{dp.group.get(), std::move(elems)};
  if (l.order() != m1.sec.bottom.order() * m2.sec.bottom.order() * m1.target->size())
    throw std::logic_error("pi_subgroup: |L| != |K1||K2||U|");
  return l;
}

namespace {

void check_star_products(const DirectProduct& d12, const DirectProduct& d23,
                         const DirectProduct& d13) {
  if (d12.right != d23.left) throw std::invalid_argument("star: middle groups differ");
  if (d13.left != d12.left || d13.right != d23.right)
    throw std::invalid_argument("star: result product has wrong factors");
}

}  // namespace

Sub star_relational(const DirectProduct& d12, const Sub& l, const DirectProduct& d23,
                    const Sub& m, const DirectProduct& d13) {
  check_star_products(d12, d23, d13);
  std::vector<int> elems;
  for (int e : l.elems)
    for (int f : m.elems)
      if (d12.right_of(e) == d23.left_of(f))
        elems.push_back(d13.pair(d12.left_of(e), d23.right_of(f)));
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return Sub{d13.group.get(), std::move(elems)};
}

Sub star_butterfly(const DirectProduct& d12, const Sub& l, const DirectProduct& d23,
                   const Sub& m, const DirectProduct& d13) {
  check_star_products(d12, d23, d13);
  const FiniteGroup& g2 = *d12.right;
  GoursatData gl = goursat_decompose(d12, l);
  GoursatData gm = goursat_decompose(d23, m);

  // Butterfly data of the middle sections (P1, K1) = (p2(L), k2(L)) and
  // (P2, K2) = (p1(M), k1(M)) inside G2.
  Section s1 = make_section(gl.p2, gl.k2);
  Section s2 = make_section(gm.p1, gm.k1);
  Sub meet_top = intersect(s1.top, s2.top);
  Sub k1p = set_product(intersect(s1.top, s2.bottom), s1.bottom);   // (P1 cap K2) K1
  Sub k2p = set_product(intersect(s2.top, s1.bottom), s2.bottom);   // (P2 cap K1) K2

  // Domain P0'/K0': preimage of P1'/K1' under theta_L; note P1' = (P1 cap P2) K1.
  Sub p1p = set_product(meet_top, s1.bottom);
  std::vector<int> p0p, p3p, k3p;
  for (int e : l.elems)
    if (p1p.contains(d12.right_of(e))) p0p.push_back(d12.left_of(e));
  Sub p2p = set_product(meet_top, s2.bottom);
  for (int f : m.elems) {
    if (p2p.contains(d23.left_of(f))) p3p.push_back(d23.right_of(f));
    if (k2p.contains(d23.left_of(f))) k3p.push_back(d23.right_of(f));
  }
  auto dedupe = [](std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedupe(p0p); dedupe(p3p); dedupe(k3p);
  Sub source{d13.left.get(), std::move(p0p)};
  Sub target_k{d13.right.get(), std::move(k3p)};

  auto image_of = [&](int p1_elem) -> int {  // lookup in theta table of L
    auto it = std::lower_bound(gl.p1.elems.begin(), gl.p1.elems.end(), p1_elem);
    return gl.theta[it - gl.p1.elems.begin()];
  };
  auto image_of_m = [&](int p2_elem) -> int {
    auto it = std::lower_bound(gm.p1.elems.begin(), gm.p1.elems.end(), p2_elem);
    return gm.theta[it - gm.p1.elems.begin()];
  };

  // Composite isomorphism: x in P0' -> (restrict theta_L, phi1^-1, phi2,
  // co-restrict theta_M) -> coset of K3'. The graph is the union of
  // {x} x (image coset).
  std::vector<int> elems;
  for (int x : source.elems) {
    int p1 = image_of(x);  // theta_L(x K0) as a K1-coset member inside P1'
    int q = -1;
    for (int c : meet_top.elems)
      if (k1p.contains(g2.mul(g2.inv(p1), c))) { q = c; break; }  // q in p1 K1' cap (P1 cap P2)
    if (q < 0) throw std::logic_error("star_butterfly: phi1 preimage not found");
    int p3 = image_of_m(q);
    for (int k : target_k.elems) elems.push_back(d13.pair(x, d13.right->mul(p3, k)));
  }
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  // |L*M| = |P0'| |K3'|: each element of P0' pairs with a full K3'-coset.
  if (elems.size() != source.elems.size() * target_k.elems.size())
    throw std::logic_error("star_butterfly: composite graph has wrong size");
  return Sub{d13.group.get(), std::move(elems)};
}

Sub star(const DirectProduct& d12, const Sub& l, const DirectProduct& d23, const Sub& m,
         const DirectProduct& d13) {
  Sub butterfly = star_butterfly(d12, l, d23, m, d13);
  Sub sweep = star_relational(d12, l, d23, m, d13);
  if (!(butterfly == sweep))
    throw std::logic_error("star: butterfly route disagrees with relational sweep");
  return butterfly;
}

ProductCtx build_product_ctx(CtxPtr c1, CtxPtr c2) {
  ProductCtx pc;
  pc.c1 = c1;
  pc.c2 = c2;
  pc.dp = direct_product(c1->group, c2->group);

  pc.type_of_sec_type1_.assign(c1->sec.types.size(), -1);
  for (size_t t1 = 0; t1 < c1->sec.types.size(); ++t1) {
    int t2 = -1;
    for (size_t j = 0; j < c2->sec.types.size(); ++j)
      if (find_isomorphism(*c1->sec.types[t1].model, *c2->sec.types[j].model)) {
        t2 = static_cast<int>(j);
        break;
      }
    if (t2 < 0) continue;
    ProductCtx::Type ty;
    ty.model = c1->sec.types[t1].model;
    ty.name = c1->sec.types[t1].name;
    ty.aut = automorphism_group(ty.model);
    ty.mor1 = build_morphisms(c1->sec, ty.model, ty.aut);
    ty.mor2 = build_morphisms(c2->sec, ty.model, ty.aut);
    ty.sec_type1 = static_cast<int>(t1);
    ty.sec_type2 = t2;
    pc.type_of_sec_type1_[t1] = static_cast<int>(pc.types.size());
    pc.types.push_back(std::move(ty));
  }

  pc.dcosets_.resize(pc.types.size());
  for (size_t t = 0; t < pc.types.size(); ++t) {
    ProductCtx::Type& ty = pc.types[t];
    const FiniteGroup& autg = *ty.aut.group;
    pc.dcosets_[t].resize(ty.mor1.sec_infos.size());
    for (size_t s1 = 0; s1 < ty.mor1.sec_infos.size(); ++s1) {
      pc.dcosets_[t][s1].resize(ty.mor2.sec_infos.size());
      for (size_t s2 = 0; s2 < ty.mor2.sec_infos.size(); ++s2) {
        const auto& si1 = ty.mor1.sec_infos[s1];
        const auto& si2 = ty.mor2.sec_infos[s2];
        ProductCtx::DCosets dc;
        dc.coset_of.assign(autg.size(), -1);
        for (int d = 0; d < autg.size(); ++d) {
          if (dc.coset_of[d] != -1) continue;
          int id = static_cast<int>(dc.reps.size());
          dc.reps.push_back(d);
          for (int a : si1.a_theta0.elems)
            for (int b : si2.a_theta0.elems) dc.coset_of[autg.mul(autg.mul(a, d), b)] = id;
        }
        for (int d : dc.reps) {
          ProductCtx::Class cls;
          cls.type = static_cast<int>(t);
          cls.sc1 = si1.sec_class;
          cls.sc2 = si2.sec_class;
          cls.dcoset = static_cast<int>(dc.class_ids.size());
          cls.dcoset_rep = d;
          cls.m1 = compose_aut(si1.theta0, ty.aut, d);
          cls.m2 = si2.theta0;
          cls.rep = pi_subgroup(pc.dp, cls.m1, cls.m2);
          cls.goursat = goursat_decompose(pc.dp, cls.rep);
          cls.label = c1->sec.subgroup_names[c1->lat.class_of_sub(cls.m1.sec.top)] + "/" +
                      c1->sec.subgroup_names[c1->lat.class_of_sub(cls.m1.sec.bottom)] + "->" +
                      c2->sec.subgroup_names[c2->lat.class_of_sub(cls.m2.sec.top)] + "/" +
                      c2->sec.subgroup_names[c2->lat.class_of_sub(cls.m2.sec.bottom)];
          if (cls.dcoset > 0) cls.label += "#" + std::to_string(cls.dcoset + 1);
          dc.class_ids.push_back(static_cast<int>(pc.classes.size()));
          pc.classes.push_back(std::move(cls));
        }
        pc.dcosets_[t][s1][s2] = std::move(dc);
      }
    }
  }
  for (size_t i = 0; i < pc.classes.size(); ++i)
    pc.classes[i].nidx = normalizer_index(pc, static_cast<int>(i));
  return pc;
}

int ProductCtx::identify(const Sub& l) const {
  GoursatData gd = goursat_decompose(dp, l);
  int sc1 = c1->sec.class_of_section(Section{gd.p1, gd.k1});
  int sc2 = c2->sec.class_of_section(Section{gd.p2, gd.k2});
  int t = type_of_sec_type1_[c1->sec.classes[sc1].type];
  if (t < 0) throw std::logic_error("ProductCtx::identify: type missing");
  const Type& ty = types[t];

  int g1 = c1->sec.conjugator_to_rep(Section{gd.p1, gd.k1});
  int g2 = c2->sec.conjugator_to_rep(Section{gd.p2, gd.k2});
  Sub lc = conjugate(l, dp.pair(g1, g2));
  GoursatData gc = goursat_decompose(dp, lc);

  int s1 = -1, s2 = -1;
  for (size_t i = 0; i < ty.mor1.sec_infos.size(); ++i)
    if (ty.mor1.sec_infos[i].sec_class == sc1) s1 = static_cast<int>(i);
  for (size_t i = 0; i < ty.mor2.sec_infos.size(); ++i)
    if (ty.mor2.sec_infos[i].sec_class == sc2) s2 = static_cast<int>(i);
  assert(s1 >= 0 && s2 >= 0);
  const auto& si1 = ty.mor1.sec_infos[s1];
  const auto& si2 = ty.mor2.sec_infos[s2];

  // delta = theta10^-1 . theta' . theta20 in Aut(U).
  std::vector<int> img(ty.model->size());
  for (int u = 0; u < ty.model->size(); ++u) {
    int p1 = si1.rep_of_u[u];
    auto it = std::lower_bound(gc.p1.elems.begin(), gc.p1.elems.end(), p1);
    int p2 = gc.theta[it - gc.p1.elems.begin()];
    img[u] = si2.theta0.apply(p2);
  }
  int delta = ty.aut.group->index_of(Perm(std::move(img)));
  const DCosets& dc = dcosets_[t][s1][s2];
  return dc.class_ids[dc.coset_of[delta]];
}

Int normalizer_index(const ProductCtx& pc, int class_id) {
  const ProductCtx::Class& cls = pc.classes[class_id];
  const ProductCtx::Type& ty = pc.types[cls.type];
  const FiniteGroup& g1 = *pc.c1->group;
  const FiniteGroup& g2 = *pc.c2->group;

  // |C_Nbar(Pbar)| = |C_G(P,K)| / |K|, computed from the section automizer.
  auto c_bar = [](const FiniteGroup& g, const Section& s) {
    Sub n = intersect(normalizer(s.top), normalizer(s.bottom));
    Quotient q = make_quotient(s.top, s.bottom);
    std::vector<int> rep_of(q.group->size(), -1);
    for (size_t i = 0; i < s.top.elems.size(); ++i)
      if (rep_of[q.project[i]] == -1) rep_of[q.project[i]] = s.top.elems[i];
    int count = 0;
    for (int ne : n.elems) {
      bool ident = true;
      for (int x = 0; x < q.group->size() && ident; ++x)
        ident = q.image_of(g.conj(rep_of[x], ne)) == x;
      if (ident) ++count;
    }
    return count / s.bottom.order();
  };

  Int cn1 = c_bar(g1, cls.m1.sec);
  Int cn2 = c_bar(g2, cls.m2.sec);

  // A_theta for the representative morphisms; their intersection covers Inn.
  int s1 = -1, s2 = -1;
  for (size_t i = 0; i < ty.mor1.sec_infos.size(); ++i)
    if (ty.mor1.sec_infos[i].sec_class == cls.sc1) s1 = static_cast<int>(i);
  for (size_t i = 0; i < ty.mor2.sec_infos.size(); ++i)
    if (ty.mor2.sec_infos[i].sec_class == cls.sc2) s2 = static_cast<int>(i);
  const auto& si1 = ty.mor1.sec_infos[s1];
  const auto& si2 = ty.mor2.sec_infos[s2];
  Sub a1 = conjugate(si1.a_theta0, cls.dcoset_rep);
  Sub a2 = si2.a_theta0;
  Sub both = intersect(a1, a2);
  if (!both.contains_sub(ty.aut.inner))
    throw std::logic_error("normalizer_index: Inn(U) missing from A_theta1 cap A_theta2");
  Int o_both = Int(both.order()) / ty.aut.inner.order();
  Int zu = center(*ty.model).order();

  Int num = cn1 * cn2 * o_both;
  if (num % zu != 0) throw std::logic_error("normalizer_index: formula not integral");
  return num / zu;
}

Sub ProductCtx::normalizer_via_star(int class_id) const {
  const Class& cls = classes[class_id];
  const Type& ty = types[cls.type];
  const FiniteGroup& g1 = *c1->group;
  const FiniteGroup& g2 = *c2->group;

  // Automizer graph of a morphism: {(n, alpha_n)} <= G_i x Aut(U).
  auto automizer_graph = [&](const FiniteGroup& g, const UMorphism& m,
                             const DirectProduct& d, bool swapped) {
    Sub n = intersect(normalizer(m.sec.top), normalizer(m.sec.bottom));
    std::vector<int> rep_of(ty.model->size(), -1);
    for (size_t i = 0; i < m.sec.top.elems.size(); ++i)
      if (rep_of[m.map[i]] == -1) rep_of[m.map[i]] = m.sec.top.elems[i];
    std::vector<int> elems;
    for (int ne : n.elems) {
      std::vector<int> img(ty.model->size());
      for (int u = 0; u < ty.model->size(); ++u) img[u] = m.apply(g.conj(rep_of[u], ne));
      int a = ty.aut.group->index_of(Perm(std::move(img)));
      elems.push_back(swapped ? d.pair(a, ne) : d.pair(ne, a));
    }
    std::sort(elems.begin(), elems.end());
    return Sub{d.group.get(), std::move(elems)};
  };

  DirectProduct d1a = direct_product(c1->group, ty.aut.group);
  DirectProduct da2 = direct_product(ty.aut.group, c2->group);
  Sub graph1 = automizer_graph(g1, cls.m1, d1a, false);
  Sub graph2 = automizer_graph(g2, cls.m2, da2, true);  // opposite graph
  return star(d1a, graph1, da2, graph2, dp);
}

std::vector<std::string> ProductCtx::labels() const {
  std::vector<std::string> out;
  for (const auto& c : classes) out.push_back(c.label);
  return out;
}

std::vector<int> u_subgroup_classes(const ProductCtx& pc, const FiniteGroup& u) {
  int type = -1;
  for (size_t t = 0; t < pc.types.size(); ++t)
    if (pc.types[t].model->size() == u.size() && find_isomorphism(*pc.types[t].model, u)) {
      type = static_cast<int>(t);
      break;
    }
  std::vector<int> out;
  if (type < 0) return out;
  for (int i = 0; i < pc.class_count(); ++i)
    if (pc.cls(i).type == type) out.push_back(i);
  return out;
}

}  // namespace marksmith
