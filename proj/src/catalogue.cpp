#include "gsk/catalogue.hpp"

#include <algorithm>
#include <numeric>

namespace gsk::catalogue {

namespace {

std::vector<int> cycle_perm(int degree, int length) {
  std::vector<int> p(degree);
  std::iota(p.begin(), p.end(), 0);
  for (int i = 0; i < length; ++i) p[i] = (i + 1) % length;
  return p;
}

GroupPtr from_rule(int n, auto&& mul) {
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = mul(a, b);
  return FiniteGroup::from_table(t);
}

}  // namespace

GroupPtr cyclic(int n) {
  if (n < 1) throw InvalidArgument("cyclic group order must be positive");
  return from_rule(n, [n](int a, int b) { return (a + b) % n; });
}

GroupPtr dihedral(int n) {
  if (n < 1) throw InvalidArgument("dihedral parameter must be positive");
  // (r^i s^j): index i + n*j
  return from_rule(2 * n, [n](int a, int b) {
    int i1 = a % n, j1 = a / n, i2 = b % n, j2 = b / n;
    int i = j1 ? (i1 - i2 + n) % n : (i1 + i2) % n;
    return i + n * ((j1 + j2) % 2);
  });
}

GroupPtr symmetric(int n) {
  if (n < 1) throw InvalidArgument("symmetric degree must be positive");
  if (n == 1) return cyclic(1);
  std::vector<int> swap01(n);
  std::iota(swap01.begin(), swap01.end(), 0);
  std::swap(swap01[0], swap01[1]);
  return FiniteGroup::from_permutations(n, {swap01, cycle_perm(n, n)});
}

GroupPtr alternating(int n) {
  if (n < 3) return cyclic(1);
  std::vector<std::vector<int>> gens;
  for (int k = 2; k < n; ++k) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    p[0] = 1;
    p[1] = k;
    p[k] = 0;
    gens.push_back(p);
  }
  return FiniteGroup::from_permutations(n, gens);
}

GroupPtr quaternion8() {
  // Units ±1, ±i, ±j, ±k as (sign, unit) with unit 0..3 = 1,i,j,k; index = unit + 4*neg.
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int neg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  return from_rule(8, [](int a, int b) {
    int ua = a % 4, ub = b % 4;
    int s = (a / 4 + b / 4 + neg[ua][ub]) % 2;
    return unit[ua][ub] + 4 * s;
  });
}

GroupPtr dicyclic12() {
  // (x, y) in C3 x C4, (x1,y1)(x2,y2) = (x1 + (-1)^y1 x2, y1 + y2); index x + 3y.
  return from_rule(12, [](int a, int b) {
    int x1 = a % 3, y1 = a / 3, x2 = b % 3, y2 = b / 3;
    int x = (y1 % 2 ? x1 - x2 + 3 : x1 + x2) % 3;
    return x + 3 * ((y1 + y2) % 4);
  });
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  const int nb = b->order();
  return from_rule(a->order() * nb, [&](int x, int y) {
    return a->mul(x / nb, y / nb) * nb + b->mul(x % nb, y % nb);
  });
}

GroupPtr by_name(const std::string& name) {
  for (const auto& [n, g] : groups_up_to_order_12())
    if (n == name) return g;
  auto suffix = [&](const std::string& prefix) -> int {
    if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return -1;
    auto rest = name.substr(prefix.size());
    if (!std::all_of(rest.begin(), rest.end(), ::isdigit)) return -1;
    return std::stoi(rest);
  };
  if (int n = suffix("C"); n > 0) return cyclic(n);
  if (int n = suffix("D"); n > 0) return dihedral(n);
  if (int n = suffix("S"); n > 0) return symmetric(n);
  if (int n = suffix("A"); n > 0) return alternating(n);
  throw InvalidArgument("unknown group name '" + name + "'");
}

std::vector<std::pair<std::string, GroupPtr>> groups_up_to_order_12() {
  static const std::vector<std::pair<std::string, GroupPtr>> all = [] {
    std::vector<std::pair<std::string, GroupPtr>> v;
    auto c = [](int n) { return cyclic(n); };
    v.emplace_back("C1", c(1));
    v.emplace_back("C2", c(2));
    v.emplace_back("C3", c(3));
    v.emplace_back("C4", c(4));
    v.emplace_back("C2xC2", direct_product(c(2), c(2)));
    v.emplace_back("C5", c(5));
    v.emplace_back("C6", c(6));
    v.emplace_back("S3", symmetric(3));
    v.emplace_back("C7", c(7));
    v.emplace_back("C8", c(8));
    v.emplace_back("C4xC2", direct_product(c(4), c(2)));
    v.emplace_back("C2xC2xC2", direct_product(direct_product(c(2), c(2)), c(2)));
    v.emplace_back("D4", dihedral(4));
    v.emplace_back("Q8", quaternion8());
    v.emplace_back("C9", c(9));
    v.emplace_back("C3xC3", direct_product(c(3), c(3)));
    v.emplace_back("C10", c(10));
    v.emplace_back("D5", dihedral(5));
    v.emplace_back("C11", c(11));
    v.emplace_back("C12", c(12));
    v.emplace_back("C6xC2", direct_product(c(6), c(2)));
    v.emplace_back("A4", alternating(4));
    v.emplace_back("D6", dihedral(6));
    v.emplace_back("Dic3", dicyclic12());
    return v;
  }();
  return all;
}

}  // namespace gsk::catalogue
