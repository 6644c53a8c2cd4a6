#include "gsk/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <string>

namespace gsk {

namespace {

std::string key_of(std::span<const Element> sorted) {
  return std::string(reinterpret_cast<const char*>(sorted.data()), sorted.size() * sizeof(Element));
}

// Closure of `generators` under multiplication, as a sorted list.
std::vector<Element> closure(const FiniteGroup& G, std::span<const Element> generators) {
  std::vector<char> seen(G.order(), 0);
  std::vector<Element> out{G.identity()};
  seen[G.identity()] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Element s : generators) {
      Element y = G.mul(out[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool sorted_subset(std::span<const Element> a, std::span<const Element> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Element> conjugate_sorted(const FiniteGroup& G, std::span<const Element> H, Element g) {
  std::vector<Element> out;
  out.reserve(H.size());
  for (Element h : H) out.push_back(G.conjugate(g, h));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_cyclic(const FiniteGroup& G, std::span<const Element> H) {
  for (Element h : H)
    if (static_cast<std::size_t>(G.element_order(h)) == H.size()) return true;
  return false;
}

std::unique_ptr<SubgroupLattice> build_lattice(const FiniteGroup& G) {
  auto lat = std::make_unique<SubgroupLattice>();
  const int n = G.order();

  // Cyclic subgroups, each with a one-element generating set.
  std::vector<std::vector<Element>> subs;
  std::vector<std::vector<Element>> gens;
  std::unordered_map<std::string, int> index;
  auto add = [&](std::vector<Element> elems, std::vector<Element> generators) {
    auto key = key_of(elems);
    if (index.count(key)) return false;
    index.emplace(std::move(key), static_cast<int>(subs.size()));
    subs.push_back(std::move(elems));
    gens.push_back(std::move(generators));
    return true;
  };
  std::vector<std::size_t> cyclic;
  for (Element g = 0; g < n; ++g) {
    Element gen[1] = {g};
    if (add(closure(G, gen), {g})) cyclic.push_back(subs.size() - 1);
  }
  std::vector<Element> cyclic_gen;
  for (auto c : cyclic) cyclic_gen.push_back(gens[c][0]);

  // Every subgroup is a join of cyclic subgroups.
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t c = 0; c < cyclic.size(); ++c) {
      if (std::binary_search(subs[i].begin(), subs[i].end(), cyclic_gen[c])) continue;
      std::vector<Element> g = gens[i];
      g.push_back(cyclic_gen[c]);
      add(closure(G, g), g);
    }
  }

  std::vector<int> order(subs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (subs[a].size() != subs[b].size()) return subs[a].size() < subs[b].size();
    return subs[a] < subs[b];
  });
  lat->subgroups.reserve(subs.size());
  for (int i : order) lat->subgroups.push_back(std::move(subs[i]));
  for (std::size_t i = 0; i < lat->subgroups.size(); ++i)
    lat->index_.emplace(key_of(lat->subgroups[i]), static_cast<int>(i));

  // Conjugacy classes; scanning in lattice order makes the first member the representative.
  const std::size_t count = lat->subgroups.size();
  lat->class_of.assign(count, -1);
  for (std::size_t s = 0; s < count; ++s) {
    if (lat->class_of[s] >= 0) continue;
    const int cls = static_cast<int>(lat->classes.size());
    std::set<int> members;
    for (Element g = 0; g < n; ++g) {
      auto c = conjugate_sorted(G, lat->subgroups[s], g);
      members.insert(lat->index_of(c));
    }
    lat->classes.emplace_back(members.begin(), members.end());
    lat->representative.push_back(static_cast<int>(s));
    for (int m : members) lat->class_of[m] = cls;
  }

  const std::size_t k = lat->classes.size();
  lat->subconjugate.assign(k, std::vector<char>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const auto& rep_j = lat->subgroups[lat->representative[j]];
      for (int m : lat->classes[i])
        if (sorted_subset(lat->subgroups[m], rep_j)) {
          lat->subconjugate[i][j] = 1;
          break;
        }
    }

  // |(G/H_i)^{K}| = #{g : g^-1 K g <= H_i} / |H_i|
  lat->marks = Matrix<std::int64_t>(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& Hi = lat->subgroups[lat->representative[i]];
    for (std::size_t j = 0; j < k; ++j) {
      if (!lat->subconjugate[j][i]) continue;
      const auto& Kj = lat->subgroups[lat->representative[j]];
      std::int64_t hits = 0;
      for (Element g = 0; g < n; ++g) {
        Element ginv = G.inverse(g);
        bool inside = std::all_of(Kj.begin(), Kj.end(), [&](Element x) {
          return std::binary_search(Hi.begin(), Hi.end(), G.conjugate(ginv, x));
        });
        hits += inside;
      }
      lat->marks(i, j) = hits / static_cast<std::int64_t>(Hi.size());
    }
  }

  // Labels: e, C<n> for cyclic, G for a noncyclic whole group, H<n> otherwise.
  std::vector<std::string> base(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& H = lat->subgroups[lat->representative[i]];
    if (H.size() == 1)
      base[i] = "e";
    else if (is_cyclic(G, H))
      base[i] = "C" + std::to_string(H.size());
    else if (static_cast<int>(H.size()) == n)
      base[i] = "G";
    else
      base[i] = "H" + std::to_string(H.size());
  }
  lat->names = base;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t dup = std::count(base.begin(), base.end(), base[i]);
    if (dup < 2) continue;
    std::size_t rank = std::count(base.begin(), base.begin() + i, base[i]);
    lat->names[i] = base[i] + static_cast<char>('a' + rank % 26);
  }
  return lat;
}

}  // namespace

std::size_t group_cap() {
  if (const char* env = std::getenv("GSK_GROUP_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return 512;
}

bool Subgroup::contains(Element g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return sorted_subset(elements, other.elements);
}

int SubgroupLattice::index_of(std::span<const Element> sorted_elements) const {
  auto it = index_.find(key_of(sorted_elements));
  return it == index_.end() ? -1 : it->second;
}

FiniteGroup::FiniteGroup(Private, int order, std::vector<Element> table)
    : order_(order), table_(std::move(table)), inverse_(order, -1) {
  for (Element e = 0; e < order_; ++e) {
    bool ok = true;
    for (Element x = 0; x < order_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b)
      if (mul(a, b) == identity_) inverse_[a] = b;
}

GroupPtr FiniteGroup::from_table(const std::vector<std::vector<Element>>& table) {
  const std::size_t n = table.size();
  if (n == 0) throw NotAGroup("empty table");
  if (n > group_cap()) throw GroupTooLarge("order " + std::to_string(n) + " exceeds cap " + std::to_string(group_cap()));
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw NotAGroup("table is not square");
    for (Element x : table[i]) {
      if (x < 0 || static_cast<std::size_t>(x) >= n) throw NotAGroup("entry out of range");
      flat.push_back(x);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<char> row(n, 0), col(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      row[flat[i * n + j]] = 1;
      col[flat[j * n + i]] = 1;
    }
    if (std::count(row.begin(), row.end(), 1) != static_cast<long>(n))
      throw NotAGroup("row " + std::to_string(i) + " is not a permutation");
    if (std::count(col.begin(), col.end(), 1) != static_cast<long>(n))
      throw NotAGroup("column " + std::to_string(i) + " is not a permutation");
  }
  auto at = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(flat[a * n + b]); };
  std::size_t identity = n;
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
    if (ok) identity = e;
  }
  if (identity == n) throw NotAGroup("no identity element");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = at(a, b);
      for (std::size_t c = 0; c < n; ++c)
        if (at(ab, c) != at(a, at(b, c)))
          throw NotAGroup("associativity fails at (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                          std::to_string(c) + ")");
    }
  return std::make_shared<const FiniteGroup>(Private{}, static_cast<int>(n), std::move(flat));
}

GroupPtr FiniteGroup::from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                                        std::size_t cap) {
  if (degree < 0) throw InvalidArgument("negative degree");
  for (const auto& p : generators) {
    if (p.size() != static_cast<std::size_t>(degree)) throw InvalidArgument("generator has wrong degree");
    std::vector<char> hit(degree, 0);
    for (int x : p) {
      if (x < 0 || x >= degree || hit[x]) throw InvalidArgument("generator is not a permutation");
      hit[x] = 1;
    }
  }
  using Perm = std::vector<int>;
  // (a*b)(i) = a(b(i))
  auto compose = [](const Perm& a, const Perm& b) {
    Perm c(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
    return c;
  };
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elems{id};
  std::map<Perm, int> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : generators) {
      Perm y = compose(s, elems[i]);
      if (index.emplace(y, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(y));
        if (elems.size() > cap)
          throw GroupTooLarge("closure exceeds cap " + std::to_string(cap));
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<Element> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) flat[static_cast<std::size_t>(a) * n + b] = index.at(compose(elems[a], elems[b]));
  return std::make_shared<const FiniteGroup>(Private{}, n, std::move(flat));
}

Element FiniteGroup::element_order(Element g) const {
  Element x = g;
  int k = 1;
  while (x != identity_) {
    x = mul(x, g);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<Element>> FiniteGroup::table() const {
  std::vector<std::vector<Element>> out(order_);
  for (int i = 0; i < order_; ++i)
    out[i].assign(table_.begin() + static_cast<std::ptrdiff_t>(i) * order_,
                  table_.begin() + static_cast<std::ptrdiff_t>(i + 1) * order_);
  return out;
}

bool FiniteGroup::same_table(const FiniteGroup& other) const {
  return order_ == other.order_ && table_ == other.table_;
}

const SubgroupLattice& FiniteGroup::lattice() const {
  std::call_once(lattice_once_, [this] { lattice_ = build_lattice(*this); });
  return *lattice_;
}

GroupPtr FiniteGroup::subgroup_group(const std::vector<Element>& sorted_elements) const {
  std::lock_guard lock(subgroup_cache_mutex_);
  auto it = subgroup_cache_.find(sorted_elements);
  if (it != subgroup_cache_.end()) return it->second;
  const int m = static_cast<int>(sorted_elements.size());
  std::vector<Element> flat(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Element p = mul(sorted_elements[a], sorted_elements[b]);
      auto pos = std::lower_bound(sorted_elements.begin(), sorted_elements.end(), p);
      if (pos == sorted_elements.end() || *pos != p) throw InvalidArgument("element set is not a subgroup");
      flat[static_cast<std::size_t>(a) * m + b] = static_cast<Element>(pos - sorted_elements.begin());
    }
  auto G = std::make_shared<const FiniteGroup>(Private{}, m, std::move(flat));
  subgroup_cache_.emplace(sorted_elements, G);
  return G;
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  return a == b || (a && b && a->same_table(*b));
}

GroupPtr subgroup_as_group(const Subgroup& H) { return H.parent->subgroup_group(H.elements); }

int local_index(const Subgroup& H, Element g) {
  auto it = std::lower_bound(H.elements.begin(), H.elements.end(), g);
  return (it != H.elements.end() && *it == g) ? static_cast<int>(it - H.elements.begin()) : -1;
}

Subgroup whole_group(const GroupPtr& G) {
  std::vector<Element> all(G->order());
  std::iota(all.begin(), all.end(), 0);
  return {G, std::move(all)};
}

Subgroup trivial_subgroup(const GroupPtr& G) { return {G, {G->identity()}}; }

Subgroup generated_subgroup(const GroupPtr& G, std::span<const Element> generators) {
  for (Element g : generators)
    if (g < 0 || g >= G->order()) throw InvalidArgument("generator out of range");
  return {G, closure(*G, generators)};
}

Subgroup make_subgroup(const GroupPtr& G, std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (Element g : elements)
    if (g < 0 || g >= G->order()) throw InvalidArgument("subgroup element out of range");
  if (!std::binary_search(elements.begin(), elements.end(), G->identity()))
    throw InvalidArgument("subgroup lacks the identity");
  for (Element a : elements) {
    if (!std::binary_search(elements.begin(), elements.end(), G->inverse(a)))
      throw InvalidArgument("subgroup not closed under inverses");
    for (Element b : elements)
      if (!std::binary_search(elements.begin(), elements.end(), G->mul(a, b)))
        throw InvalidArgument("subgroup not closed under multiplication");
  }
  return {G, std::move(elements)};
}

Subgroup conjugate(const Subgroup& H, Element g) {
  return {H.parent, conjugate_sorted(*H.parent, H.elements, g)};
}

std::vector<Subgroup> all_subgroups(const GroupPtr& G) {
  const auto& lat = G->lattice();
  std::vector<Subgroup> out;
  out.reserve(lat.subgroups.size());
  for (const auto& s : lat.subgroups) out.push_back({G, s});
  return out;
}

int SubgroupClassTable::class_of(const Subgroup& H) const { return class_index(H); }

bool SubgroupClassTable::subconjugate(int i, int j) const {
  return group->lattice().subconjugate[i][j] != 0;
}

SubgroupClassTable subgroup_classes(const GroupPtr& G) {
  const auto& lat = G->lattice();
  SubgroupClassTable t{G, {}, {}, lat.names};
  for (std::size_t c = 0; c < lat.classes.size(); ++c) {
    std::vector<Subgroup> members;
    for (int m : lat.classes[c]) members.push_back({G, lat.subgroups[m]});
    t.classes.push_back(std::move(members));
    t.representatives.push_back({G, lat.subgroups[lat.representative[c]]});
  }
  return t;
}

int class_index(const Subgroup& H) {
  const auto& lat = H.parent->lattice();
  int idx = lat.index_of(H.elements);
  if (idx < 0) throw InvalidArgument("element set is not a subgroup");
  return lat.class_of[idx];
}

Subgroup class_representative(const GroupPtr& G, int class_index) {
  const auto& lat = G->lattice();
  if (class_index < 0 || static_cast<std::size_t>(class_index) >= lat.class_count())
    throw InvalidArgument("subgroup class index out of range");
  return {G, lat.subgroups[lat.representative[class_index]]};
}

Subgroup normalizer(const Subgroup& H) {
  const auto& G = *H.parent;
  std::vector<Element> out;
  for (Element g = 0; g < G.order(); ++g) {
    bool keeps = std::all_of(H.elements.begin(), H.elements.end(),
                             [&](Element h) { return H.contains(G.conjugate(g, h)); });
    if (keeps) out.push_back(g);
  }
  return {H.parent, std::move(out)};
}

QuotientGroup quotient(const Subgroup& source, const Subgroup& kernel) {
  const auto& G = *source.parent;
  if (!kernel.is_subset_of(source)) throw InvalidArgument("kernel is not contained in source");
  for (Element s : source.elements)
    for (Element k : kernel.elements)
      if (!kernel.contains(G.conjugate(s, k))) throw InvalidArgument("kernel is not normal in source");

  QuotientGroup q{nullptr, source, kernel, {}, std::vector<int>(G.order(), -1)};
  for (Element s : source.elements) {
    if (q.projection[s] >= 0) continue;
    // s is minimal in its coset because source is scanned in ascending order.
    const int idx = static_cast<int>(q.representatives.size());
    q.representatives.push_back(s);
    for (Element k : kernel.elements) q.projection[G.mul(s, k)] = idx;
  }
  const std::size_t m = q.representatives.size();
  std::vector<std::vector<Element>> table(m, std::vector<Element>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      table[a][b] = q.projection[G.mul(q.representatives[a], q.representatives[b])];
  q.group = FiniteGroup::from_table(table);
  return q;
}

QuotientGroup weyl_group(const Subgroup& H) { return quotient(normalizer(H), H); }

std::vector<Element> double_coset(const Subgroup& K, Element g, const Subgroup& H) {
  const auto& G = *K.parent;
  std::vector<Element> out;
  out.reserve(K.order() * H.order());
  for (Element k : K.elements) {
    Element kg = G.mul(k, g);
    for (Element h : H.elements) out.push_back(G.mul(kg, h));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Element> double_cosets(const Subgroup& K, const Subgroup& H) {
  const auto& G = *K.parent;
  std::vector<char> covered(G.order(), 0);
  std::vector<Element> reps;
  for (Element g = 0; g < G.order(); ++g) {
    if (covered[g]) continue;
    reps.push_back(g);
    for (Element x : double_coset(K, g, H)) covered[x] = 1;
  }
  return reps;
}

}  // namespace gsk
