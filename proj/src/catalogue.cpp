#include "marksmith/catalogue.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace marksmith {

namespace {

Perm n_cycle(int degree, int n) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return Perm(std::move(img));
}

}  // namespace

GroupPtr cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_group: order must be positive");
  if (n == 1) return std::make_shared<const FiniteGroup>(1, std::vector<Perm>{Perm(1)});
  return std::make_shared<const FiniteGroup>(n, std::vector<Perm>{n_cycle(n, n)});
}

GroupPtr dihedral_group(int order) {
  if (order < 4 || order % 2 != 0)
    throw std::invalid_argument("dihedral_group: order must be an even number >= 4");
  int n = order / 2;
  std::vector<int> flip(n);
  for (int i = 0; i < n; ++i) flip[i] = (n - i) % n;
  return std::make_shared<const FiniteGroup>(
      n, std::vector<Perm>{n_cycle(n, n), Perm(std::move(flip))});
}

GroupPtr symmetric_group(int n) {
  if (n < 1) throw std::invalid_argument("symmetric_group: degree must be positive");
  if (n == 1) return cyclic_group(1);
  std::vector<Perm> gens{Perm::parse_cycles(n, "(1,2)")};
  if (n > 2) gens.push_back(n_cycle(n, n));
  return std::make_shared<const FiniteGroup>(n, std::move(gens));
}

GroupPtr alternating_group(int n) {
  if (n < 3) return cyclic_group(1);
  std::vector<Perm> gens{Perm::parse_cycles(n, "(1,2,3)")};
  if (n > 3) {
    if (n % 2 == 1) gens.push_back(n_cycle(n, n));
    else {
      std::vector<int> img(n);
      std::iota(img.begin(), img.end(), 0);
      for (int i = 1; i < n; ++i) img[i] = i % (n - 1) + 1;
      gens.push_back(Perm(std::move(img)));  // (2,3,...,n)
    }
  }
  return std::make_shared<const FiniteGroup>(n, std::move(gens));
}

GroupPtr klein_four_group() {
  return std::make_shared<const FiniteGroup>(
      4, std::vector<Perm>{Perm::parse_cycles(4, "(1,2)(3,4)"), Perm::parse_cycles(4, "(1,3)(2,4)")});
}

GroupPtr parse_group_spec(const std::string& spec) {
  if (spec == "V4" || spec == "v4") return klein_four_group();
  if ((spec[0] == 'S' || spec[0] == 's') && spec.size() > 1) {
    int n = std::stoi(spec.substr(1));
    return symmetric_group(n);
  }
  if ((spec[0] == 'A' || spec[0] == 'a') && spec.size() > 1) {
    int n = std::stoi(spec.substr(1));
    return alternating_group(n);
  }
  if ((spec[0] == 'C' || spec[0] == 'c') && spec.size() > 1) return cyclic_group(std::stoi(spec.substr(1)));
  if ((spec[0] == 'D' || spec[0] == 'd') && spec.size() > 1) return dihedral_group(std::stoi(spec.substr(1)));
  if (spec.rfind("perm:", 0) == 0) {
    auto second = spec.find(':', 5);
    if (second == std::string::npos)
      throw std::invalid_argument("group spec: expected perm:<degree>:<cycles>;...");
    int degree = std::stoi(spec.substr(5, second - 5));
    if (degree < 1) throw std::invalid_argument("group spec: degree must be positive");
    std::vector<Perm> gens;
    std::string rest = spec.substr(second + 1);
    size_t pos = 0;
    while (pos <= rest.size()) {
      auto semi = rest.find(';', pos);
      std::string part = rest.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
      if (!part.empty()) gens.push_back(Perm::parse_cycles(degree, part));
      if (semi == std::string::npos) break;
      pos = semi + 1;
    }
    if (gens.empty()) throw std::invalid_argument("group spec: no generators given");
    return std::make_shared<const FiniteGroup>(degree, std::move(gens));
  }
  throw std::invalid_argument("unrecognized group spec: " + spec);
}

std::string identify_type_name(const FiniteGroup& g) {
  int n = g.size();
  if (n == 1) return "1";
  bool cyclic = false, all_inv = true, abelian = true;
  for (int e = 0; e < n; ++e) {
    if (g.element_order(e) == n) cyclic = true;
    if (e != g.identity() && g.element_order(e) != 2) all_inv = false;
  }
  for (int a = 0; a < n && abelian; ++a)
    for (int b = a + 1; b < n; ++b)
      if (g.mul(a, b) != g.mul(b, a)) { abelian = false; break; }
  if (cyclic) return std::to_string(n);
  if (all_inv) {
    int k = 0;
    for (int m = n; m > 1; m /= 2) ++k;
    return "2^" + std::to_string(k);
  }
  auto is = [&](const GroupPtr& h) { return h->size() == n && find_isomorphism(g, *h).has_value(); };
  if (n == 6 && is(symmetric_group(3))) return "S3";
  if (n == 12 && is(alternating_group(4))) return "A4";
  if (n == 24 && is(symmetric_group(4))) return "S4";
  if (n == 60 && is(alternating_group(5))) return "A5";
  if (n % 2 == 0 && n >= 6 && is(dihedral_group(n))) return "D" + std::to_string(n);
  if (abelian) return "Ab" + std::to_string(n);
  return "G" + std::to_string(n);
}

std::vector<std::string> subgroup_class_names(const Lattice& lat) {
  std::vector<std::string> names;
  for (const auto& cls : lat.classes) names.push_back(identify_type_name(*as_group(cls.rep)));
  std::map<std::string, int> total, seen;
  for (const auto& n : names) ++total[n];
  for (auto& n : names)
    if (total[n] > 1) {
      int k = seen[n]++;
      n += static_cast<char>('a' + k);
    }
  return names;
}

}  // namespace marksmith
