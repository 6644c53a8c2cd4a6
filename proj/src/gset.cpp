#include "gsk/gset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gsk {

namespace {

struct Cosets {
  std::vector<Element> reps;  // minimal member of each coset, ascending
  std::vector<int> coset_of;  // element -> coset index
};

Cosets left_cosets(const Subgroup& H) {
  const auto& G = *H.parent;
  Cosets c{{}, std::vector<int>(G.order(), -1)};
  for (Element g = 0; g < G.order(); ++g) {
    if (c.coset_of[g] >= 0) continue;
    const int idx = static_cast<int>(c.reps.size());
    c.reps.push_back(g);
    for (Element h : H.elements) c.coset_of[G.mul(g, h)] = idx;
  }
  return c;
}

void require_same_group(const GroupPtr& a, const GroupPtr& b, const char* what) {
  if (!same_group(a, b)) throw GroupMismatch(what);
}

}  // namespace

GSet make_unchecked(GroupPtr group, int size, std::vector<int> action) {
  return GSet(GSet::Unchecked{}, std::move(group), size, std::move(action));
}

GSet::GSet(GroupPtr group, int size, std::vector<int> action)
    : group_(std::move(group)), size_(size), action_(std::move(action)) {
  if (!group_) throw NotAnAction("missing group");
  if (size_ < 0) throw NotAnAction("negative size");
  const auto& G = *group_;
  if (action_.size() != static_cast<std::size_t>(G.order()) * size_)
    throw NotAnAction("action table has wrong dimensions");
  for (int v : action_)
    if (v < 0 || v >= size_) throw NotAnAction("action entry out of range");
  for (int x = 0; x < size_; ++x)
    if (act(G.identity(), x) != x) throw NotAnAction("identity moves point " + std::to_string(x));
  for (Element g = 0; g < G.order(); ++g)
    for (Element h = 0; h < G.order(); ++h) {
      const Element gh = G.mul(g, h);
      for (int x = 0; x < size_; ++x)
        if (act(gh, x) != act(g, act(h, x)))
          throw NotAnAction("compatibility fails for g=" + std::to_string(g) + ", h=" + std::to_string(h) +
                            ", x=" + std::to_string(x));
    }
}

GSet GSet::from_table(GroupPtr group, const std::vector<std::vector<int>>& action) {
  if (!group) throw NotAnAction("missing group");
  if (action.size() != static_cast<std::size_t>(group->order()))
    throw NotAnAction("action table needs one row per group element");
  const int n = action.empty() ? 0 : static_cast<int>(action.front().size());
  std::vector<int> flat;
  flat.reserve(action.size() * n);
  for (const auto& row : action) {
    if (static_cast<int>(row.size()) != n) throw NotAnAction("ragged action table");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return GSet(std::move(group), n, std::move(flat));
}

GSet GSet::empty(GroupPtr group) { return trivial(std::move(group), 0); }

GSet GSet::point(GroupPtr group) { return trivial(std::move(group), 1); }

GSet GSet::trivial(GroupPtr group, int n) {
  std::vector<int> action;
  action.reserve(static_cast<std::size_t>(group->order()) * n);
  for (int g = 0; g < group->order(); ++g)
    for (int x = 0; x < n; ++x) action.push_back(x);
  return make_unchecked(std::move(group), n, std::move(action));
}

GSet GSet::regular(GroupPtr group) {
  const int n = group->order();
  std::vector<int> action(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x) action[static_cast<std::size_t>(g) * n + x] = group->mul(g, x);
  return make_unchecked(std::move(group), n, std::move(action));
}

std::vector<std::vector<int>> GSet::table() const {
  std::vector<std::vector<int>> out(group_->order());
  for (int g = 0; g < group_->order(); ++g)
    out[g].assign(action_.begin() + static_cast<std::ptrdiff_t>(g) * size_,
                  action_.begin() + static_cast<std::ptrdiff_t>(g + 1) * size_);
  return out;
}

GMap::GMap(GSet source_, GSet target_, std::vector<int> map_)
    : source(std::move(source_)), target(std::move(target_)), map(std::move(map_)) {
  require_same_group(source.group(), target.group(), "map between G-sets over different groups");
  if (map.size() != static_cast<std::size_t>(source.size())) throw NotEquivariant("map has wrong length");
  for (int y : map)
    if (y < 0 || y >= target.size()) throw NotEquivariant("map value out of range");
  const auto& G = *source.group();
  for (Element g = 0; g < G.order(); ++g)
    for (int x = 0; x < source.size(); ++x)
      if (map[source.act(g, x)] != target.act(g, map[x]))
        throw NotEquivariant("fails at g=" + std::to_string(g) + ", x=" + std::to_string(x));
}

GMap identity_map(const GSet& X) {
  std::vector<int> m(X.size());
  std::iota(m.begin(), m.end(), 0);
  return GMap(X, X, std::move(m));
}

GMap compose(const GMap& outer, const GMap& inner) {
  if (!(inner.target == outer.source)) throw InvalidArgument("composing maps with mismatched ends");
  std::vector<int> m(inner.source.size());
  for (int x = 0; x < inner.source.size(); ++x) m[x] = outer.map[inner.map[x]];
  return GMap(inner.source, outer.target, std::move(m));
}

GMap terminal_map(const GSet& X) {
  return GMap(X, GSet::point(X.group()), std::vector<int>(X.size(), 0));
}

std::vector<int> orbit_of(const GSet& X, int x) {
  if (x < 0 || x >= X.size()) throw InvalidArgument("point out of range");
  std::vector<char> seen(X.size(), 0);
  std::vector<int> out;
  for (Element g = 0; g < X.group()->order(); ++g) {
    int y = X.act(g, x);
    if (!seen[y]) {
      seen[y] = 1;
      out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup stabilizer(const GSet& X, int x) {
  if (x < 0 || x >= X.size()) throw InvalidArgument("point out of range");
  std::vector<Element> out;
  for (Element g = 0; g < X.group()->order(); ++g)
    if (X.act(g, x) == x) out.push_back(g);
  return {X.group(), std::move(out)};
}

std::vector<int> fixed_points(const GSet& X, const Subgroup& H) {
  require_same_group(X.group(), H.parent, "fixed points under a subgroup of another group");
  std::vector<int> out;
  for (int x = 0; x < X.size(); ++x) {
    bool fixed = std::all_of(H.elements.begin(), H.elements.end(), [&](Element h) { return X.act(h, x) == x; });
    if (fixed) out.push_back(x);
  }
  return out;
}

std::vector<int> orbit_ids(const GSet& X) {
  std::vector<int> id(X.size(), -1);
  int next = 0;
  for (int x = 0; x < X.size(); ++x) {
    if (id[x] >= 0) continue;
    for (Element g = 0; g < X.group()->order(); ++g) id[X.act(g, x)] = next;
    ++next;
  }
  return id;
}

std::vector<std::vector<int>> orbits(const GSet& X) {
  auto id = orbit_ids(X);
  const int count = id.empty() ? 0 : *std::max_element(id.begin(), id.end()) + 1;
  std::vector<std::vector<int>> out(count);
  for (int x = 0; x < X.size(); ++x) out[id[x]].push_back(x);
  return out;
}

GSet coset_gset(const Subgroup& H) {
  const auto& G = *H.parent;
  auto c = left_cosets(H);
  const int m = static_cast<int>(c.reps.size());
  std::vector<int> action(static_cast<std::size_t>(G.order()) * m);
  for (Element g = 0; g < G.order(); ++g)
    for (int r = 0; r < m; ++r) action[static_cast<std::size_t>(g) * m + r] = c.coset_of[G.mul(g, c.reps[r])];
  return make_unchecked(H.parent, m, std::move(action));
}

int identity_coset(const Subgroup& H) { return left_cosets(H).coset_of[H.parent->identity()]; }

int coset_index(const Subgroup& H, Element g) { return left_cosets(H).coset_of.at(g); }

GMap coset_projection(const Subgroup& K, const Subgroup& H) {
  if (!K.is_subset_of(H)) throw InvalidArgument("coset projection needs K <= H");
  auto ck = left_cosets(K);
  auto ch = left_cosets(H);
  std::vector<int> m(ck.reps.size());
  for (std::size_t r = 0; r < ck.reps.size(); ++r) m[r] = ch.coset_of[ck.reps[r]];
  return GMap(coset_gset(K), coset_gset(H), std::move(m));
}

GMap orbit_map(const Subgroup& H, const GSet& X, int x) {
  require_same_group(H.parent, X.group(), "orbit map into a G-set over another group");
  auto c = left_cosets(H);
  std::vector<int> m(c.reps.size());
  for (std::size_t r = 0; r < c.reps.size(); ++r) m[r] = X.act(c.reps[r], x);
  return GMap(coset_gset(H), X, std::move(m));
}

IsoType iso_type(const GSet& X) {
  IsoType t;
  for (const auto& orb : orbits(X)) t.classes.push_back(class_index(stabilizer(X, orb.front())));
  std::sort(t.classes.begin(), t.classes.end());
  return t;
}

bool gsets_isomorphic(const GSet& X, const GSet& Y) {
  require_same_group(X.group(), Y.group(), "comparing G-sets over different groups");
  return X.size() == Y.size() && iso_type(X) == iso_type(Y);
}

GSet disjoint_union(const GSet& X, const GSet& Y) {
  require_same_group(X.group(), Y.group(), "disjoint union over different groups");
  const int n = X.size() + Y.size();
  std::vector<int> action;
  action.reserve(static_cast<std::size_t>(X.group()->order()) * n);
  for (Element g = 0; g < X.group()->order(); ++g) {
    for (int x = 0; x < X.size(); ++x) action.push_back(X.act(g, x));
    for (int y = 0; y < Y.size(); ++y) action.push_back(X.size() + Y.act(g, y));
  }
  return make_unchecked(X.group(), n, std::move(action));
}

GSet product(const GSet& X, const GSet& Y) {
  require_same_group(X.group(), Y.group(), "product over different groups");
  const int n = X.size() * Y.size();
  std::vector<int> action;
  action.reserve(static_cast<std::size_t>(X.group()->order()) * n);
  for (Element g = 0; g < X.group()->order(); ++g)
    for (int x = 0; x < X.size(); ++x)
      for (int y = 0; y < Y.size(); ++y) action.push_back(X.act(g, x) * Y.size() + Y.act(g, y));
  return make_unchecked(X.group(), n, std::move(action));
}

GSet sub_gset(const GSet& X, std::span<const int> subset) {
  std::vector<int> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> pos(X.size(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) pos[sorted[i]] = static_cast<int>(i);
  const int n = static_cast<int>(sorted.size());
  std::vector<int> action;
  action.reserve(static_cast<std::size_t>(X.group()->order()) * n);
  for (Element g = 0; g < X.group()->order(); ++g)
    for (int x : sorted) {
      int y = pos[X.act(g, x)];
      if (y < 0) throw InvalidArgument("subset is not invariant");
      action.push_back(y);
    }
  return make_unchecked(X.group(), n, std::move(action));
}

GSet relabel(const GSet& X, std::span<const int> perm) {
  if (perm.size() != static_cast<std::size_t>(X.size())) throw InvalidArgument("relabeling has wrong length");
  std::vector<int> inv(X.size(), -1);
  for (int x = 0; x < X.size(); ++x) {
    if (perm[x] < 0 || perm[x] >= X.size() || inv[perm[x]] >= 0) throw InvalidArgument("relabeling is not a bijection");
    inv[perm[x]] = x;
  }
  std::vector<int> action(X.raw().size());
  for (Element g = 0; g < X.group()->order(); ++g)
    for (int y = 0; y < X.size(); ++y)
      action[static_cast<std::size_t>(g) * X.size() + y] = perm[X.act(g, inv[y])];
  return make_unchecked(X.group(), X.size(), std::move(action));
}

Pullback pullback(const GMap& f, const GMap& g) {
  if (!(f.target == g.target)) throw InvalidArgument("pullback of maps with different targets");
  std::vector<std::pair<int, int>> pts;
  for (int x = 0; x < f.source.size(); ++x)
    for (int y = 0; y < g.source.size(); ++y)
      if (f(x) == g(y)) pts.emplace_back(x, y);
  const int n = static_cast<int>(pts.size());
  // Index lookup on the product grid.
  std::vector<int> index(static_cast<std::size_t>(f.source.size()) * g.source.size(), -1);
  for (int i = 0; i < n; ++i) index[static_cast<std::size_t>(pts[i].first) * g.source.size() + pts[i].second] = i;
  const auto& G = *f.source.group();
  std::vector<int> action;
  action.reserve(static_cast<std::size_t>(G.order()) * n);
  for (Element e = 0; e < G.order(); ++e)
    for (const auto& [x, y] : pts)
      action.push_back(index[static_cast<std::size_t>(f.source.act(e, x)) * g.source.size() + g.source.act(e, y)]);
  GSet apex = make_unchecked(f.source.group(), n, std::move(action));
  std::vector<int> left(n), right(n);
  for (int i = 0; i < n; ++i) {
    left[i] = pts[i].first;
    right[i] = pts[i].second;
  }
  return {apex, GMap(apex, f.source, std::move(left)), GMap(apex, g.source, std::move(right))};
}

GSet restrict_action(const GSet& X, const Subgroup& H) {
  require_same_group(X.group(), H.parent, "restriction to a subgroup of another group");
  const int n = X.size();
  std::vector<int> action;
  action.reserve(H.order() * n);
  for (Element h : H.elements)
    for (int x = 0; x < n; ++x) action.push_back(X.act(h, x));
  return make_unchecked(subgroup_as_group(H), n, std::move(action));
}

GSet induce(const Subgroup& K, const GSet& X) {
  if (!same_group(X.group(), subgroup_as_group(K))) throw GroupMismatch("induction needs a K-set");
  const auto& G = *K.parent;
  auto c = left_cosets(K);
  const int m = static_cast<int>(c.reps.size());
  const int n = m * X.size();
  std::vector<int> action(static_cast<std::size_t>(G.order()) * n);
  for (Element g = 0; g < G.order(); ++g)
    for (int r = 0; r < m; ++r) {
      Element gc = G.mul(g, c.reps[r]);
      int s = c.coset_of[gc];
      // g c_r = c_s k with k in K
      Element k = G.mul(G.inverse(c.reps[s]), gc);
      int kl = local_index(K, k);
      for (int x = 0; x < X.size(); ++x)
        action[static_cast<std::size_t>(g) * n + r * X.size() + x] = s * X.size() + X.act(kl, x);
    }
  return make_unchecked(K.parent, n, std::move(action));
}

GSet conjugate_action(const Subgroup& H, const GSet& X, Element g) {
  if (!same_group(X.group(), subgroup_as_group(H))) throw GroupMismatch("conjugation needs an H-set");
  Subgroup gH = conjugate(H, g);
  const auto& G = *H.parent;
  const int n = X.size();
  std::vector<int> action(gH.order() * static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < H.order(); ++i) {
    int target = local_index(gH, G.conjugate(g, H.elements[i]));
    for (int x = 0; x < n; ++x) action[static_cast<std::size_t>(target) * n + x] = X.act(static_cast<Element>(i), x);
  }
  return make_unchecked(subgroup_as_group(gH), n, std::move(action));
}

namespace {

OrbitSpace orbits_under(const GSet& X, std::span<const Element> acting, std::span<const int> subset) {
  OrbitSpace os;
  os.point_of.assign(X.size(), -1);
  std::vector<char> in(X.size(), 0);
  for (int x : subset) in[x] = 1;
  for (int x = 0; x < X.size(); ++x) {
    if (!in[x] || os.point_of[x] >= 0) continue;
    for (Element n : acting) {
      int y = X.act(n, x);
      if (!in[y]) throw InvalidArgument("subset is not stable under the acting subgroup");
      os.point_of[y] = os.size;
    }
    os.representatives.push_back(x);
    ++os.size;
  }
  return os;
}

std::vector<int> everything(const GSet& X) {
  std::vector<int> all(X.size());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

}  // namespace

OrbitSpace orbit_space(const GSet& X, const Subgroup& N, std::span<const int> subset) {
  require_same_group(X.group(), N.parent, "orbit space under a subgroup of another group");
  return orbits_under(X, N.elements, subset);
}

OrbitSpace orbit_space(const GSet& X, const Subgroup& N) { return orbit_space(X, N, everything(X)); }

OrbitSpace orbit_space(const GSet& X, const QuotientGroup& Q, std::span<const int> subset) {
  require_same_group(X.group(), Q.kernel.parent, "orbit space under a subgroup of another group");
  OrbitSpace os = orbits_under(X, Q.kernel.elements, subset);
  const int qn = Q.group->order();
  std::vector<int> action(static_cast<std::size_t>(qn) * os.size);
  for (int q = 0; q < qn; ++q)
    for (int p = 0; p < os.size; ++p) {
      int y = X.act(Q.representatives[q], os.representatives[p]);
      int target = os.point_of[y];
      if (target < 0) throw InvalidArgument("subset is not stable under the quotient's source");
      action[static_cast<std::size_t>(q) * os.size + p] = target;
    }
  os.residual = GSet(Q.group, os.size, std::move(action));
  return os;
}

OrbitSpace orbit_space(const GSet& X, const QuotientGroup& Q) { return orbit_space(X, Q, everything(X)); }

}  // namespace gsk
