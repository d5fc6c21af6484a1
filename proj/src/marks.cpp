#include "marksmith/marks.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "marksmith/catalogue.hpp"

namespace marksmith {

LabeledMatrix cim_subgroups(const GroupCtx& ctx) {
  const Lattice& lat = ctx.lat;
  int n = static_cast<int>(lat.classes.size());
  LabeledMatrix m = LabeledMatrix::zero(ctx.sec.subgroup_names, ctx.sec.subgroup_names);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int count = 0;
      for (int sid : lat.classes[x].members)
        if (lat.subgroups[sid].contains_sub(lat.classes[y].rep)) ++count;
      m.at(x, y) = count;
    }
  return m;
}

LabeledMatrix tom_single(const GroupCtx& ctx) {
  LabeledMatrix a = cim_subgroups(ctx);
  for (int i = 0; i < a.rows(); ++i) {
    Rat d(ctx.lat.classes[i].normalizer.order() / ctx.lat.classes[i].rep.order());
    for (int j = 0; j < a.cols(); ++j) a.at(i, j) *= d;
  }
  return a;
}

namespace {

// Subgroups of the product whose Goursat bottoms (mode K/GeqP) or tops
// (mode P) are exactly the given pair, enumerated as graphs of isomorphisms
// between section quotients.
std::vector<Sub> exact_poset(const ProductCtx& pc, const Sub& f1, const Sub& f2, bool bottoms) {
  std::vector<Sub> out;
  const SectionData& sd1 = pc.c1->sec;
  const SectionData& sd2 = pc.c2->sec;
  auto matching_sections = [&](const SectionData& sd, const Sub& f) {
    std::vector<const Section*> secs;
    for (const auto& s : sd.sections)
      if ((bottoms ? s.bottom : s.top) == f) secs.push_back(&s);
    return secs;
  };
  for (const Section* s1 : matching_sections(sd1, f1)) {
    Quotient q1 = make_quotient(s1->top, s1->bottom);
    for (const Section* s2 : matching_sections(sd2, f2)) {
      if (s1->quotient_size() != s2->quotient_size()) continue;
      Quotient q2 = make_quotient(s2->top, s2->bottom);
      for (const auto& iso : all_isomorphisms(*q1.group, *q2.group)) {
        std::vector<int> elems;
        for (size_t i = 0; i < s1->top.elems.size(); ++i)
          for (size_t j = 0; j < s2->top.elems.size(); ++j)
            if (iso(q1.project[i]) == q2.project[j])
              elems.push_back(pc.dp.pair(s1->top.elems[i], s2->top.elems[j]));
        std::sort(elems.begin(), elems.end());
        out.push_back(Sub{pc.dp.group.get(), std::move(elems)});
      }
    }
  }
  std::sort(out.begin(), out.end(), sub_less);
  return out;
}

}  // namespace

LabeledMatrix cim_product(const ProductCtx& pc, ProductOrder mode) {
  int n = pc.class_count();
  LabeledMatrix m = LabeledMatrix::zero(pc.labels(), pc.labels());
  std::vector<char> covered(n, 0);

  if (mode == ProductOrder::PK) {
    for (const auto& ty : pc.types) {
      LabeledMatrix a1 = cim_mor(ty.mor1);
      LabeledMatrix a2 = cim_mor(ty.mor2);
      PairAction act{ty.mor1.out_action(), ty.mor2.out_action()};
      EquivalenceOnIndex orbits = pair_orbits(a1.rows(), a2.rows(), act);
      LabeledMatrix collapsed = kron_over_group(a1, a2, act);
      // Identify each pair orbit with a global class.
      std::vector<int> gid(orbits.class_count());
      for (int o = 0; o < orbits.class_count(); ++o) {
        int i = orbits.transversal[o] / a2.rows();
        int j = orbits.transversal[o] % a2.rows();
        Sub l = pi_subgroup(pc.dp, ty.mor1.classes[i].rep, ty.mor2.classes[j].rep);
        gid[o] = pc.identify(l);
        if (covered[gid[o]]) throw std::logic_error("cim_product: class hit twice (PK)");
        covered[gid[o]] = 1;
      }
      for (int r = 0; r < orbits.class_count(); ++r)
        for (int c = 0; c < orbits.class_count(); ++c) m.at(gid[r], gid[c]) = collapsed.at(r, c);
    }
  } else {
    bool bottoms = mode == ProductOrder::K;
    const Lattice& lat1 = pc.c1->lat;
    const Lattice& lat2 = pc.c2->lat;
    for (const auto& cls1 : lat1.classes)
      for (const auto& cls2 : lat2.classes) {
        std::vector<Sub> poset = exact_poset(pc, cls1.rep, cls2.rep, bottoms);
        if (poset.empty()) continue;
        // Orbits under N_{G1}(F1) x N_{G2}(F2).
        std::vector<int> gens;
        for (int e : find_generators(cls1.normalizer)) gens.push_back(pc.dp.pair(e, pc.c2->group->identity()));
        for (int e : find_generators(cls2.normalizer)) gens.push_back(pc.dp.pair(pc.c1->group->identity(), e));
        auto find_id = [&](const Sub& s) {
          auto it = std::lower_bound(poset.begin(), poset.end(), s, sub_less);
          if (it == poset.end() || !(*it == s))
            throw std::logic_error("cim_product: exact poset not closed under the action");
          return static_cast<int>(it - poset.begin());
        };
        std::vector<int> orbit_of(poset.size(), -1);
        std::vector<std::vector<int>> orbits;
        for (size_t i = 0; i < poset.size(); ++i) {
          if (orbit_of[i] != -1) continue;
          int id = static_cast<int>(orbits.size());
          std::vector<int> members{static_cast<int>(i)};
          orbit_of[i] = id;
          for (size_t k = 0; k < members.size(); ++k)
            for (int ge : gens) {
              int c = find_id(conjugate(poset[members[k]], ge));
              if (orbit_of[c] == -1) { orbit_of[c] = id; members.push_back(c); }
            }
          orbits.push_back(std::move(members));
        }
        std::vector<int> gid(orbits.size());
        for (size_t o = 0; o < orbits.size(); ++o) {
          gid[o] = pc.identify(poset[orbits[o][0]]);
          if (covered[gid[o]]) throw std::logic_error("cim_product: class hit twice");
          covered[gid[o]] = 1;
        }
        for (size_t r = 0; r < orbits.size(); ++r)
          for (size_t c = 0; c < orbits.size(); ++c) {
            const Sub& y = poset[orbits[c][0]];
            int count = 0;
            for (int xi : orbits[r]) {
              const Sub& x = poset[xi];
              bool inc = mode == ProductOrder::GeqP ? y.contains_sub(x) : x.contains_sub(y);
              if (inc) ++count;
            }
            m.at(gid[r], gid[c]) = count;
          }
      }
  }
  for (int i = 0; i < n; ++i)
    if (!covered[i]) throw std::logic_error("cim_product: class missing from all blocks");
  return m;
}

LabeledMatrix tom_product(const ProductCtx& pc) {
  LabeledMatrix ak = cim_product(pc, ProductOrder::K);
  LabeledMatrix apk = cim_product(pc, ProductOrder::PK);
  LabeledMatrix ap = cim_product(pc, ProductOrder::P);
  LabeledMatrix m = lm_mul(lm_mul(ak, apk), ap);
  for (int i = 0; i < m.rows(); ++i) {
    Rat d(pc.cls(i).nidx);
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) *= d;
  }
  return m;
}

LabeledMatrix brute_force_tom(const Lattice& lat) {
  const FiniteGroup& g = *lat.group;
  int n = static_cast<int>(lat.classes.size());
  std::vector<std::string> names = subgroup_class_names(lat);
  LabeledMatrix m = LabeledMatrix::zero(names, names);
  Sub whole = full_sub(g);
  for (int x = 0; x < n; ++x) {
    const Sub& h = lat.classes[x].rep;
    Cosets cos = right_cosets(whole, h);
    for (int y = 0; y < n; ++y) {
      std::vector<int> kgens = find_generators(lat.classes[y].rep);
      int fixed = 0;
      for (int rep : cos.reps) {
        bool fix = true;
        for (int k : kgens)
          if (!h.contains(g.mul(g.mul(rep, k), g.inv(rep)))) { fix = false; break; }
        if (fix) ++fixed;
      }
      m.at(x, y) = fixed;
    }
  }
  return m;
}

std::vector<int> match_oracle_classes(const ProductCtx& pc, const Lattice& brute) {
  if (brute.group != pc.dp.group.get())
    throw std::invalid_argument("match_oracle_classes: lattice is not over the product group");
  std::vector<int> map(brute.classes.size());
  std::vector<char> hit(pc.class_count(), 0);
  for (size_t i = 0; i < brute.classes.size(); ++i) {
    map[i] = pc.identify(brute.classes[i].rep);
    if (hit[map[i]]) throw std::logic_error("match_oracle_classes: class matched twice");
    hit[map[i]] = 1;
  }
  if (static_cast<int>(brute.classes.size()) != pc.class_count())
    throw std::logic_error("match_oracle_classes: class counts differ");
  return map;
}

}  // namespace marksmith
