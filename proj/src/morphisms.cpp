#include "marksmith/morphisms.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace marksmith {

int UMorphism::apply(int parent_elem) const {
  auto it = std::lower_bound(sec.top.elems.begin(), sec.top.elems.end(), parent_elem);
  if (it == sec.top.elems.end() || *it != parent_elem)
    throw std::invalid_argument("UMorphism: element outside the domain");
  return map[it - sec.top.elems.begin()];
}

UMorphism conjugate_morphism(const UMorphism& m, int a) {
  const FiniteGroup& g = *m.sec.top.parent;
  Section sec = conjugate(m.sec, a);
  int ainv = g.inv(a);
  std::vector<int> map(sec.top.elems.size());
  for (size_t i = 0; i < sec.top.elems.size(); ++i)
    map[i] = m.apply(g.conj(sec.top.elems[i], ainv));  // a p a^-1
  return UMorphism{std::move(sec), m.target, std::move(map)};
}

UMorphism compose_aut(const UMorphism& m, const AutGroup& aut, int alpha) {
  UMorphism out = m;
  for (auto& u : out.map) u = aut.apply(alpha, u);
  return out;
}

bool morphism_leq(const UMorphism& lo, const UMorphism& hi) {
  if (lo.target != hi.target)
    throw std::invalid_argument("morphism_leq: target groups differ");
  if (!section_leq(lo.sec, hi.sec, SecOrder::PK)) return false;
  for (size_t i = 0; i < lo.sec.top.elems.size(); ++i)
    if (lo.map[i] != hi.apply(lo.sec.top.elems[i])) return false;
  return true;
}

int MorphismSet::identify(const UMorphism& m) const {
  int sc = sd->class_of_section(m.sec);
  int pos = -1;
  for (size_t s = 0; s < sec_infos.size(); ++s)
    if (sec_infos[s].sec_class == sc) { pos = static_cast<int>(s); break; }
  if (pos < 0) throw std::invalid_argument("MorphismSet: section class not of this type");
  const SecInfo& si = sec_infos[pos];
  UMorphism conj = conjugate_morphism(m, sd->conjugator_to_rep(m.sec));
  assert(conj.sec == si.theta0.sec);
  // beta = theta0^-1 . conj as an automorphism of U.
  std::vector<int> img(U->size());
  for (int u = 0; u < U->size(); ++u) img[u] = conj.apply(si.rep_of_u[u]);
  int beta = aut.group->index_of(Perm(std::move(img)));
  return si.first_class + si.coset_of[beta];
}

std::string MorphismSet::class_label(int i) const {
  const MClass& c = classes[i];
  const SecInfo& si = sec_infos[c.sec_pos];
  std::string label = sd->class_label(si.sec_class);
  int j = i - si.first_class;
  if (j > 0) label += "#" + std::to_string(j + 1);
  return label;
}

std::vector<std::vector<int>> MorphismSet::out_action() const {
  std::vector<std::vector<int>> act;
  for (int o : aut.out_transversal) {
    std::vector<int> row(classes.size());
    for (size_t c = 0; c < classes.size(); ++c)
      row[c] = identify(compose_aut(classes[c].rep, aut, o));
    act.push_back(std::move(row));
  }
  return act;
}

Sub MorphismSet::graph(const UMorphism& m) const {
  std::vector<int> elems;
  for (size_t i = 0; i < m.sec.top.elems.size(); ++i)
    elems.push_back(dp_gu.pair(m.sec.top.elems[i], m.map[i]));
  std::sort(elems.begin(), elems.end());
  return Sub{dp_gu.group.get(), std::move(elems)};
}

MorphismSet build_morphisms(const SectionData& sd, GroupPtr u, const AutGroup& aut) {
  MorphismSet ms;
  ms.sd = &sd;
  ms.U = u;
  ms.aut = aut;
  const FiniteGroup& g = *sd.lattice->group;
  GroupPtr gp;
  // Recover the shared_ptr-less group: graphs need a GroupPtr, so wrap the
  // parent non-owning. The context owning sd keeps it alive.
  gp = GroupPtr(std::shared_ptr<void>(), sd.lattice->group);
  ms.dp_gu = direct_product(gp, u);

  // Section classes of this isomorphism type, ascending.
  int type = -1;
  for (size_t t = 0; t < sd.types.size(); ++t)
    if (find_isomorphism(*sd.types[t].model, *u)) { type = static_cast<int>(t); break; }
  if (type < 0) return ms;  // no sections of type U

  for (int sc : sd.types[type].classes) {
    const Quotient& q = sd.class_quotient[sc];
    auto iso = find_isomorphism(*q.group, *u);
    assert(iso);
    MorphismSet::SecInfo si;
    si.sec_class = sc;
    const Section& rep_sec = sd.classes[sc].rep;
    std::vector<int> map(rep_sec.top.elems.size());
    for (size_t i = 0; i < map.size(); ++i) map[i] = (*iso)(q.project[i]);
    si.theta0 = UMorphism{rep_sec, u, std::move(map)};
    si.rep_of_u.assign(u->size(), -1);
    for (size_t i = 0; i < rep_sec.top.elems.size(); ++i)
      if (si.rep_of_u[si.theta0.map[i]] == -1) si.rep_of_u[si.theta0.map[i]] = rep_sec.top.elems[i];

    // A_theta0: automorphisms of U induced by the section normalizer.
    Sub n = sd.classes[sc].stabilizer;
    std::set<int> a_elems;
    for (int ne : n.elems) {
      std::vector<int> img(u->size());
      for (int x = 0; x < u->size(); ++x) img[x] = si.theta0.apply(g.conj(si.rep_of_u[x], ne));
      a_elems.insert(aut.group->index_of(Perm(std::move(img))));
    }
    si.a_theta0 = Sub{aut.group.get(), std::vector<int>(a_elems.begin(), a_elems.end())};
    if (!si.a_theta0.contains_sub(aut.inner))
      throw std::logic_error("build_morphisms: Inn(U) not contained in A_theta");

    // Right cosets A_theta0 . alpha, canonical representatives.
    si.coset_of.assign(aut.group->size(), -1);
    for (int a = 0; a < aut.group->size(); ++a) {
      if (si.coset_of[a] != -1) continue;
      int id = static_cast<int>(si.coset_reps.size());
      si.coset_reps.push_back(a);
      for (int x : si.a_theta0.elems) si.coset_of[aut.group->mul(x, a)] = id;
    }
    si.first_class = static_cast<int>(ms.classes.size());

    for (int alpha : si.coset_reps) {
      MorphismSet::MClass mc;
      mc.sec_pos = static_cast<int>(ms.sec_infos.size());
      mc.alpha = alpha;
      mc.rep = compose_aut(si.theta0, ms.aut, alpha);
      mc.a_theta = conjugate(si.a_theta0, alpha);
      mc.o_theta_size = mc.a_theta.order() / ms.aut.inner.order();
      // Distinct G-conjugates of the representative.
      std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
      for (int a = 0; a < g.size(); ++a) {
        UMorphism t = conjugate_morphism(mc.rep, a);
        if (seen.insert({t.sec.top.elems, t.map}).second) mc.orbit.push_back(std::move(t));
      }
      ms.classes.push_back(std::move(mc));
    }
    ms.sec_infos.push_back(std::move(si));
  }

  // Regular Aut(U)-action: |Mor^{P,K}(U)| = |Aut(U)| per section of type U.
  size_t total = 0;
  for (const auto& c : ms.classes) total += c.orbit.size();
  size_t sections_of_type = 0;
  for (const auto& si : ms.sec_infos) sections_of_type += sd.classes[si.sec_class].members.size();
  if (total != sections_of_type * static_cast<size_t>(aut.group->size()))
    throw std::logic_error("build_morphisms: morphism count disagrees with regular action");
  return ms;
}

LabeledMatrix cim_mor(const MorphismSet& ms) {
  int n = ms.class_count();
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(ms.class_label(i));
  LabeledMatrix m = LabeledMatrix::zero(labels, labels);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int count = 0;
      for (const auto& t : ms.classes[x].orbit)
        if (morphism_leq(ms.classes[y].rep, t)) ++count;
      m.at(x, y) = count;
    }
  return m;
}

}  // namespace marksmith
