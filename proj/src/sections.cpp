#include "marksmith/sections.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "marksmith/catalogue.hpp"

namespace marksmith {

Section make_section(Sub top, Sub bottom) {
  if (!top.contains_sub(bottom) || !is_normal_in(bottom, top))
    throw std::invalid_argument("make_section: bottom is not normal in top");
  return Section{std::move(top), std::move(bottom)};
}

Section conjugate(const Section& s, int g) {
  return Section{conjugate(s.top, g), conjugate(s.bottom, g)};
}

bool section_leq(const Section& lo, const Section& hi, SecOrder mode) {
  if (lo.top.parent != hi.top.parent)
    throw std::invalid_argument("section_leq: sections of different groups");
  if (mode == SecOrder::GeqP) return section_leq(hi, lo, SecOrder::P);
  if (mode == SecOrder::Prime)
    return hi.top.contains_sub(lo.top) &&
           lo.bottom.contains_sub(intersect(hi.bottom, lo.top));
  bool full = hi.top.contains_sub(lo.top) && hi.bottom.contains_sub(lo.bottom);
  if (!full) return false;
  switch (mode) {
    case SecOrder::Full: return true;
    case SecOrder::P: return lo.top == hi.top;
    case SecOrder::K: return lo.bottom == hi.bottom;
    case SecOrder::PK:
      // The canonical map P'/K' -> P/K is injective iff K cap P' = K' and
      // surjective iff P'K = P.
      return intersect(hi.bottom, lo.top) == lo.bottom &&
             set_product(lo.top, hi.bottom) == hi.top;
    default: return false;
  }
}

Section section_meet(const Section& a, const Section& b) {
  return make_section(intersect(a.top, b.top), intersect(a.bottom, b.bottom));
}

Section section_join(const Section& a, const Section& b) {
  Sub top = join(a.top, b.top);
  Sub k = join(a.bottom, b.bottom);
  return make_section(top, normal_closure(k, top));
}

std::pair<Section, Section> section_decompose(const Section& lo, const Section& hi) {
  if (!section_leq(lo, hi, SecOrder::Full))
    throw std::invalid_argument("section_decompose: sections not comparable");
  Section mid_low = make_section(lo.top, intersect(hi.bottom, lo.top));
  Section mid_high = make_section(set_product(lo.top, hi.bottom), hi.bottom);
  return {mid_low, mid_high};
}

std::pair<Section, Section> section_decompose_prime(const Section& lo, const Section& hi) {
  if (!section_leq(lo, hi, SecOrder::Prime))
    throw std::invalid_argument("section_decompose_prime: sections not <='-comparable");
  Section s2 = make_section(lo.top, intersect(hi.bottom, lo.top));
  Section s1 = make_section(set_product(lo.top, hi.bottom), hi.bottom);
  return {s2, s1};
}

ButterflyMeet butterfly_meet(const Section& s1, const Section& s2) {
  if (s1.top.parent != s2.top.parent)
    throw std::invalid_argument("butterfly_meet: sections of different groups");
  Sub p1p2 = intersect(s1.top, s2.top);
  Sub side1_top = set_product(p1p2, s1.bottom);
  Sub side2_top = set_product(p1p2, s2.bottom);
  Sub side1_bot = set_product(intersect(s1.top, s2.bottom), s1.bottom);
  Sub side2_bot = set_product(intersect(s2.top, s1.bottom), s2.bottom);

  ButterflyMeet bm;
  bm.side1 = make_section(side1_top, side1_bot);
  bm.side2 = make_section(side2_top, side2_bot);
  Sub meet_top = intersect(side1_top, side2_top);
  assert(meet_top == p1p2);
  bm.meet = make_section(meet_top, intersect(side1_bot, side2_bot));
  bm.meet_q = make_quotient(bm.meet.top, bm.meet.bottom);
  bm.side1_q = make_quotient(bm.side1.top, bm.side1.bottom);
  bm.side2_q = make_quotient(bm.side2.top, bm.side2.bottom);

  auto canonical_map = [&](const Quotient& side_q) {
    std::vector<int> phi(bm.meet_q.group->size(), -1);
    for (size_t i = 0; i < bm.meet.top.elems.size(); ++i) {
      int from = bm.meet_q.project[i];
      int to = side_q.image_of(bm.meet.top.elems[i]);
      if (phi[from] == -1) phi[from] = to;
      else if (phi[from] != to) throw std::logic_error("butterfly_meet: canonical map ill-defined");
    }
    std::vector<char> hit(phi.size(), 0);
    for (int t : phi) {
      if (t < 0 || hit[t]) throw std::logic_error("butterfly_meet: canonical map not bijective");
      hit[t] = 1;
    }
    return phi;
  };
  bm.phi1 = canonical_map(bm.side1_q);
  bm.phi2 = canonical_map(bm.side2_q);
  return bm;
}

SectionAutomizer section_automizer(const Section& s) {
  SectionAutomizer sa;
  sa.n = intersect(normalizer(s.top), normalizer(s.bottom));
  sa.quotient = make_quotient(s.top, s.bottom);
  const FiniteGroup& g = *s.top.parent;
  const FiniteGroup& q = *sa.quotient.group;

  // Representative in P of each quotient element.
  std::vector<int> rep_of(q.size(), -1);
  for (size_t i = 0; i < s.top.elems.size(); ++i)
    if (rep_of[sa.quotient.project[i]] == -1) rep_of[sa.quotient.project[i]] = s.top.elems[i];

  sa.aut = automorphism_group(sa.quotient.group);
  std::vector<int> c_elems, induced;
  for (int n : sa.n.elems) {
    std::vector<int> img(q.size());
    for (int x = 0; x < q.size(); ++x) img[x] = sa.quotient.image_of(g.conj(rep_of[x], n));
    Perm a(std::move(img));
    if (a.is_identity()) c_elems.push_back(n);
    induced.push_back(sa.aut.group->index_of(a));
  }
  sa.c = Sub{&g, std::move(c_elems)};
  std::sort(induced.begin(), induced.end());
  induced.erase(std::unique(induced.begin(), induced.end()), induced.end());
  sa.induced = Sub{sa.aut.group.get(), std::move(induced)};
  if (sa.induced.order() * sa.c.order() != sa.n.order())
    throw std::logic_error("section_automizer: |Aut_G(P,K)| != |N|/|C|");
  if (!sa.induced.contains_sub(sa.aut.inner))
    throw std::logic_error("section_automizer: Inn(P/K) not contained in Aut_G(P,K)");
  return sa;
}

int SectionData::section_id(const Section& s) const {
  int pid = lattice->subgroup_id(s.top);
  int kid = lattice->subgroup_id(s.bottom);
  auto key = std::make_pair(pid, kid);
  auto it = std::lower_bound(section_keys_.begin(), section_keys_.end(), key);
  if (it == section_keys_.end() || *it != key)
    throw std::invalid_argument("SectionData: unknown section");
  return static_cast<int>(it - section_keys_.begin());
}

std::string SectionData::class_label(int class_id) const {
  const Section& s = classes[class_id].rep;
  return "(" + subgroup_names[lattice->class_of_sub(s.top)] + "," +
         subgroup_names[lattice->class_of_sub(s.bottom)] + ")";
}

SectionData build_sections(const Lattice& lat) {
  SectionData sd;
  sd.lattice = &lat;
  sd.subgroup_names = subgroup_class_names(lat);
  const FiniteGroup& g = *lat.group;

  for (size_t pid = 0; pid < lat.subgroups.size(); ++pid) {
    const Sub& p = lat.subgroups[pid];
    for (size_t kid = 0; kid < lat.subgroups.size(); ++kid) {
      const Sub& k = lat.subgroups[kid];
      if (k.order() > p.order() || !p.contains_sub(k)) continue;
      if (!is_normal_in(k, p)) continue;
      sd.sections.push_back(Section{p, k});
      sd.section_keys_.push_back({static_cast<int>(pid), static_cast<int>(kid)});
    }
  }

  int n = static_cast<int>(sd.sections.size());
  sd.class_of.assign(n, -1);
  sd.to_rep.assign(n, g.identity());
  std::vector<int> class_ids_in_discovery;
  std::vector<SectionClass> raw_classes;
  for (int i = 0; i < n; ++i) {
    if (sd.class_of[i] != -1) continue;
    int cid = static_cast<int>(raw_classes.size());
    std::vector<int> members{i};
    std::vector<int> from_rep{g.identity()};
    sd.class_of[i] = cid;
    for (size_t k = 0; k < members.size(); ++k)
      for (int ge : g.generator_indices()) {
        Section c = conjugate(sd.sections[members[k]], ge);
        int id = sd.section_id(c);
        if (sd.class_of[id] == -1) {
          sd.class_of[id] = cid;
          members.push_back(id);
          from_rep.push_back(g.mul(from_rep[k], ge));
        }
      }
    for (size_t k = 0; k < members.size(); ++k) sd.to_rep[members[k]] = g.inv(from_rep[k]);
    std::sort(members.begin(), members.end());
    SectionClass cls;
    cls.rep = sd.sections[i];
    cls.stabilizer = intersect(normalizer(cls.rep.top), normalizer(cls.rep.bottom));
    cls.size = g.size() / cls.stabilizer.order();
    if (cls.size != static_cast<int>(members.size()))
      throw std::logic_error("build_sections: class size disagrees with stabilizer index");
    cls.members = std::move(members);
    raw_classes.push_back(std::move(cls));
  }

  // Canonical class order: quotient size, then top-group order, then keys.
  std::vector<int> order(raw_classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Section& x = raw_classes[a].rep;
    const Section& y = raw_classes[b].rep;
    auto kx = std::make_tuple(x.quotient_size(), x.top.order(), std::cref(x.top.elems),
                              std::cref(x.bottom.elems));
    auto ky = std::make_tuple(y.quotient_size(), y.top.order(), std::cref(y.top.elems),
                              std::cref(y.bottom.elems));
    return kx < ky;
  });
  std::vector<int> new_id(raw_classes.size());
  for (size_t i = 0; i < order.size(); ++i) {
    new_id[order[i]] = static_cast<int>(i);
    sd.classes.push_back(std::move(raw_classes[order[i]]));
  }
  for (int i = 0; i < n; ++i) sd.class_of[i] = new_id[sd.class_of[i]];

  // Isomorphism types of the class quotients.
  for (size_t c = 0; c < sd.classes.size(); ++c) {
    sd.class_quotient.push_back(make_quotient(sd.classes[c].rep.top, sd.classes[c].rep.bottom));
    int type = -1;
    for (size_t t = 0; t < sd.types.size(); ++t)
      if (find_isomorphism(*sd.class_quotient.back().group, *sd.types[t].model)) {
        type = static_cast<int>(t);
        break;
      }
    if (type == -1) {
      type = static_cast<int>(sd.types.size());
      SectionType st;
      st.model = sd.class_quotient.back().group;
      st.name = identify_type_name(*st.model);
      sd.types.push_back(std::move(st));
    }
    sd.classes[c].type = type;
    sd.types[type].classes.push_back(static_cast<int>(c));
  }
  return sd;
}

LabeledMatrix cim_sections(const SectionData& sd, SecOrder mode) {
  int nc = static_cast<int>(sd.classes.size());
  std::vector<std::string> labels;
  for (int c = 0; c < nc; ++c) labels.push_back(sd.class_label(c));
  LabeledMatrix m = LabeledMatrix::zero(labels, labels);
  for (int x = 0; x < nc; ++x)
    for (int y = 0; y < nc; ++y) {
      int count = 0;
      for (int sid : sd.classes[x].members)
        if (section_leq(sd.classes[y].rep, sd.sections[sid], mode)) ++count;
      m.at(x, y) = count;
    }
  return m;
}

}  // namespace marksmith
