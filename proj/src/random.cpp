#include "gsk/random.hpp"

#include <string>

namespace gsk {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Subgroup random_subgroup(const GroupPtr& G, Rng& rng) {
  const auto& subs = G->lattice().subgroups;
  const auto& pick = subs[uniform_int(rng, 0, static_cast<int>(subs.size()) - 1)];
  return Subgroup{G, pick};
}

GSet random_gset(const GroupPtr& G, Rng& rng, int max_orbits) {
  GSet X = GSet::empty(G);
  const int k = uniform_int(rng, 0, max_orbits);
  for (int i = 0; i < k; ++i) X = disjoint_union(X, coset_gset(random_subgroup(G, rng)));
  return X;
}

GCWComplex random_complex(const GroupPtr& G, Rng& rng, int max_dim, int max_orbits) {
  const int levels = uniform_int(rng, 1, max_dim + 1);
  std::vector<GSet> cells(levels, GSet::empty(G));
  const int total = uniform_int(rng, 0, max_orbits);
  for (int i = 0; i < total; ++i) {
    int k = uniform_int(rng, 0, levels - 1);
    cells[k] = disjoint_union(cells[k], coset_gset(random_subgroup(G, rng)));
  }
  return GCWComplex(G, std::move(cells));
}

LabeledGCW random_labeled_complex(const Subgroup& H, Rng& rng, int max_dim, int max_orbits) {
  return induce_labeled(H, random_complex(subgroup_as_group(H), rng, max_dim, max_orbits));
}

Span random_span(const GSet& X, const GSet& Y, Rng& rng, int max_orbits, int max_apex) {
  const GroupPtr& G = X.group();
  GSet apex = GSet::empty(G);
  std::vector<int> left, right;
  const int k = (X.size() && Y.size()) ? uniform_int(rng, 0, max_orbits) : 0;
  for (int i = 0; i < k; ++i) {
    int x = uniform_int(rng, 0, X.size() - 1);
    int y = uniform_int(rng, 0, Y.size() - 1);
    Subgroup sx = stabilizer(X, x), sy = stabilizer(Y, y);
    std::vector<Subgroup> options;
    for (const auto& elems : G->lattice().subgroups) {
      Subgroup L{G, elems};
      if (L.is_subset_of(sx) && L.is_subset_of(sy)) options.push_back(L);
    }
    const Subgroup& L = options[uniform_int(rng, 0, static_cast<int>(options.size()) - 1)];
    GMap fx = orbit_map(L, X, x), fy = orbit_map(L, Y, y);
    if (apex.size() + fx.source.size() > max_apex) break;
    apex = disjoint_union(apex, fx.source);
    left.insert(left.end(), fx.map.begin(), fx.map.end());
    right.insert(right.end(), fy.map.begin(), fy.map.end());
  }
  return make_span(GMap(apex, X, std::move(left)), GMap(apex, Y, std::move(right)));
}

BurnsideElement random_burnside(const GroupPtr& G, Rng& rng, int bound) {
  std::vector<std::int64_t> c(G->lattice().class_count());
  for (auto& x : c) x = uniform_int(rng, -bound, bound);
  return BurnsideElement(G, std::move(c));
}

SquaresPresentation random_presentation(Rng& rng, int max_objects, int max_squares) {
  SquaresPresentation P;
  P.basepoint = "O";
  P.objects.push_back("O");
  const int n = uniform_int(rng, 1, max_objects);
  for (int i = 1; i < n; ++i) P.objects.push_back("X" + std::to_string(i));
  const int s = uniform_int(rng, 0, max_squares);
  for (int i = 0; i < s; ++i) {
    std::array<std::string, 4> sq;
    for (auto& c : sq) c = P.objects[uniform_int(rng, 0, n - 1)];
    P.squares.push_back(std::move(sq));
  }
  return P;
}

}  // namespace gsk
