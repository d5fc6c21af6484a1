#include "marksmith/group.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace marksmith {

std::vector<Perm> closure(const std::vector<Perm>& generators) {
  if (generators.empty()) throw std::invalid_argument("closure: empty generating set");
  int degree = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != degree) throw std::invalid_argument("closure: degree mismatch");

  std::set<Perm> seen;
  std::vector<Perm> todo;
  seen.insert(Perm(degree));
  todo.push_back(Perm(degree));
  for (const auto& g : generators)
    if (seen.insert(g).second) todo.push_back(g);
  for (size_t i = 0; i < todo.size(); ++i) {
    Perm cur = todo[i];
    for (const auto& g : generators) {
      Perm p = cur * g;
      if (seen.insert(p).second) todo.push_back(std::move(p));
    }
  }
  return std::vector<Perm>(seen.begin(), seen.end());
}

FiniteGroup::FiniteGroup(int degree, std::vector<Perm> generators) : degree_(degree) {
  if (generators.empty()) generators.push_back(Perm(degree));
  for (auto& g : generators)
    if (g.degree() != degree) throw std::invalid_argument("FiniteGroup: generator degree mismatch");
  generators_ = std::move(generators);
  elements_ = closure(generators_);

  int n = size();
  inv_.resize(n);
  order_.resize(n);
  mul_.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) mul_[a * n + b] = index_of(elements_[a] * elements_[b]);
    inv_[a] = index_of(elements_[a].inverse());
    if (elements_[a].is_identity()) identity_ = a;
  }
  for (int a = 0; a < n; ++a) {
    int e = a, k = 1;
    while (e != identity_) { e = mul(e, a); ++k; }
    order_[a] = k;
  }
  for (const auto& g : generators_) gen_indices_.push_back(index_of(g));
}

int FiniteGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p))
    throw std::invalid_argument("FiniteGroup: element not in group");
  return static_cast<int>(it - elements_.begin());
}

std::optional<int> FiniteGroup::find(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) return std::nullopt;
  return static_cast<int>(it - elements_.begin());
}

bool Sub::contains(int e) const {
  return std::binary_search(elems.begin(), elems.end(), e);
}

bool Sub::contains_sub(const Sub& other) const {
  return std::includes(elems.begin(), elems.end(), other.elems.begin(), other.elems.end());
}

bool sub_less(const Sub& a, const Sub& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elems < b.elems;
}

Sub trivial_sub(const FiniteGroup& g) { return Sub{&g, {g.identity()}}; }

Sub full_sub(const FiniteGroup& g) {
  std::vector<int> all(g.size());
  for (int i = 0; i < g.size(); ++i) all[i] = i;
  return Sub{&g, std::move(all)};
}

Sub sub_from_indices(const FiniteGroup& g, std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  Sub h{&g, std::move(indices)};
  if (!h.contains(g.identity())) throw std::invalid_argument("sub_from_indices: missing identity");
  for (int a : h.elems) {
    if (!h.contains(g.inv(a))) throw std::invalid_argument("sub_from_indices: not closed under inverse");
    for (int b : h.elems)
      if (!h.contains(g.mul(a, b))) throw std::invalid_argument("sub_from_indices: not closed under product");
  }
  return h;
}

Sub generated_sub(const FiniteGroup& g, std::span<const int> seeds) {
  std::vector<char> in(g.size(), 0);
  std::vector<int> todo;
  in[g.identity()] = 1;
  todo.push_back(g.identity());
  for (int s : seeds)
    if (!in[s]) { in[s] = 1; todo.push_back(s); }
  for (size_t i = 0; i < todo.size(); ++i)
    for (int s : seeds) {
      int p = g.mul(todo[i], s);
      if (!in[p]) { in[p] = 1; todo.push_back(p); }
    }
  std::vector<int> elems;
  elems.reserve(todo.size());
  for (int e = 0; e < g.size(); ++e)
    if (in[e]) elems.push_back(e);
  return Sub{&g, std::move(elems)};
}

Sub conjugate(const Sub& h, int g) {
  std::vector<int> elems;
  elems.reserve(h.elems.size());
  for (int e : h.elems) elems.push_back(h.parent->conj(e, g));
  std::sort(elems.begin(), elems.end());
  return Sub{h.parent, std::move(elems)};
}

Sub intersect(const Sub& a, const Sub& b) {
  assert(a.parent == b.parent);
  std::vector<int> elems;
  std::set_intersection(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end(),
                        std::back_inserter(elems));
  return Sub{a.parent, std::move(elems)};
}

Sub join(const Sub& a, const Sub& b) {
  assert(a.parent == b.parent);
  if (a.contains_sub(b)) return a;
  if (b.contains_sub(a)) return b;
  std::vector<int> seeds(a.elems);
  seeds.insert(seeds.end(), b.elems.begin(), b.elems.end());
  return generated_sub(*a.parent, seeds);
}

Sub set_product(const Sub& a, const Sub& b) {
  assert(a.parent == b.parent);
  const FiniteGroup& g = *a.parent;
  std::vector<char> in(g.size(), 0);
  for (int x : a.elems)
    for (int y : b.elems) in[g.mul(x, y)] = 1;
  std::vector<int> elems;
  for (int e = 0; e < g.size(); ++e)
    if (in[e]) elems.push_back(e);
  Sub h{&g, std::move(elems)};
  if (h.order() != a.order() * b.order() / intersect(a, b).order())
    throw std::invalid_argument("set_product: AB is not a subgroup");
  return h;
}

bool is_normal_in(const Sub& k, const Sub& p) {
  for (int g : p.elems)
    for (int x : k.elems)
      if (!k.contains(k.parent->conj(x, g))) return false;
  return true;
}

Sub normalizer(const Sub& h) {
  const FiniteGroup& g = *h.parent;
  if (!full_sub(g).contains_sub(h)) throw std::invalid_argument("normalizer: H not in G");
  std::vector<int> elems;
  for (int a = 0; a < g.size(); ++a) {
    bool ok = true;
    for (int x : h.elems)
      if (!h.contains(g.conj(x, a))) { ok = false; break; }
    if (ok) elems.push_back(a);
  }
  return Sub{&g, std::move(elems)};
}

Sub centralizer(const Sub& h) {
  const FiniteGroup& g = *h.parent;
  std::vector<int> elems;
  for (int a = 0; a < g.size(); ++a) {
    bool ok = true;
    for (int x : h.elems)
      if (g.mul(a, x) != g.mul(x, a)) { ok = false; break; }
    if (ok) elems.push_back(a);
  }
  return Sub{&g, std::move(elems)};
}

Sub center(const FiniteGroup& g) { return centralizer(full_sub(g)); }

std::vector<int> find_generators(const Sub& h) {
  std::vector<int> gens;
  Sub cur = trivial_sub(*h.parent);
  for (int e : h.elems) {
    if (cur.contains(e)) continue;
    gens.push_back(e);
    cur = generated_sub(*h.parent, gens);
    if (cur.order() == h.order()) break;
  }
  return gens;
}

GroupPtr as_group(const Sub& h) {
  std::vector<Perm> gens;
  for (int e : find_generators(h)) gens.push_back(h.parent->element(e));
  if (gens.empty()) gens.push_back(Perm(h.parent->degree()));
  return std::make_shared<const FiniteGroup>(h.parent->degree(), std::move(gens));
}

int Cosets::index_in_top(int e) const {
  auto it = std::lower_bound(top.elems.begin(), top.elems.end(), e);
  if (it == top.elems.end() || *it != e)
    throw std::invalid_argument("Cosets: element outside the top group");
  return static_cast<int>(it - top.elems.begin());
}

Cosets right_cosets(const Sub& p, const Sub& k) {
  if (!p.contains_sub(k)) throw std::invalid_argument("right_cosets: K not contained in P");
  const FiniteGroup& g = *p.parent;
  Cosets c{p, k, {}, std::vector<int>(p.elems.size(), -1)};
  for (size_t i = 0; i < p.elems.size(); ++i) {
    if (c.coset_of[i] != -1) continue;
    int rep = p.elems[i];
    int id = static_cast<int>(c.reps.size());
    c.reps.push_back(rep);
    for (int x : k.elems) c.coset_of[c.index_in_top(g.mul(x, rep))] = id;
  }
  return c;
}

std::vector<int> double_coset_reps(const Sub& a, const Sub& b) {
  assert(a.parent == b.parent);
  const FiniteGroup& g = *a.parent;
  std::vector<char> covered(g.size(), 0);
  std::vector<int> reps;
  for (int e = 0; e < g.size(); ++e) {
    if (covered[e]) continue;
    reps.push_back(e);
    for (int x : a.elems)
      for (int y : b.elems) covered[g.mul(g.mul(x, e), y)] = 1;
  }
  return reps;
}

Sub Embedding::image(const Sub& h) const {
  std::vector<int> elems;
  elems.reserve(h.elems.size());
  for (int e : h.elems) elems.push_back(map[e]);
  std::sort(elems.begin(), elems.end());
  return Sub{target, std::move(elems)};
}

Sub DirectProduct::project_left(const Sub& l) const {
  std::vector<int> elems;
  for (int e : l.elems) elems.push_back(left_of(e));
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return Sub{left.get(), std::move(elems)};
}

Sub DirectProduct::project_right(const Sub& l) const {
  std::vector<int> elems;
  for (int e : l.elems) elems.push_back(right_of(e));
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return Sub{right.get(), std::move(elems)};
}

Sub DirectProduct::product_sub(const Sub& h1, const Sub& h2) const {
  std::vector<int> elems;
  elems.reserve(static_cast<size_t>(h1.order()) * h2.order());
  for (int a : h1.elems)
    for (int b : h2.elems) elems.push_back(pair(a, b));
  std::sort(elems.begin(), elems.end());
  return Sub{group.get(), std::move(elems)};
}

DirectProduct direct_product(GroupPtr g1, GroupPtr g2) {
  int d1 = g1->degree(), d2 = g2->degree();
  int d = d1 + d2;
  std::vector<Perm> gens;
  for (const auto& g : g1->generators()) gens.push_back(g.extended(d));
  for (const auto& g : g2->generators()) gens.push_back(g.shifted(d, d1));
  auto prod = std::make_shared<const FiniteGroup>(d, std::move(gens));
  if (prod->size() != g1->size() * g2->size())
    throw std::logic_error("direct_product: unexpected order");

  DirectProduct dp;
  dp.left = g1;
  dp.right = g2;
  dp.group = prod;
  dp.embed_left = Embedding{g1.get(), prod.get(), std::vector<int>(g1->size())};
  dp.embed_right = Embedding{g2.get(), prod.get(), std::vector<int>(g2->size())};
  for (int i = 0; i < g1->size(); ++i)
    dp.embed_left.map[i] = prod->index_of(g1->element(i).extended(d));
  for (int i = 0; i < g2->size(); ++i)
    dp.embed_right.map[i] = prod->index_of(g2->element(i).shifted(d, d1));

  // The concatenated image arrays sort pair-lexicographically, so element
  // indices factor as i1 * |G2| + i2. Verified here once.
  for (int i1 = 0; i1 < g1->size(); ++i1)
    for (int i2 = 0; i2 < g2->size(); ++i2) {
      int e = prod->mul(dp.embed_left.map[i1], dp.embed_right.map[i2]);
      if (e != dp.pair(i1, i2)) throw std::logic_error("direct_product: index factorization failed");
    }
  return dp;
}

}  // namespace marksmith
