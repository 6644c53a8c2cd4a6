#include "gsk/gcw.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace gsk {

GCWComplex::GCWComplex(GroupPtr group, std::vector<GSet> cells, std::string name)
    : group_(std::move(group)), cells_(std::move(cells)), name_(std::move(name)) {
  if (!group_) throw InvalidArgument("complex without a group");
  for (const auto& c : cells_)
    if (!same_group(c.group(), group_)) throw GroupMismatch("cell set over a different group");
}

LabeledGCW::LabeledGCW(GCWComplex complex_, GSet base_, std::vector<GMap> labels_)
    : complex(std::move(complex_)), base(std::move(base_)), labels(std::move(labels_)) {
  if (labels.size() != complex.levels()) throw InvalidArgument("need one label map per dimension");
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (!(labels[k].source == complex.cells(k)) || !(labels[k].target == base))
      throw InvalidArgument("label map " + std::to_string(k) + " has the wrong ends");
}

BurnsideElement euler_char(const GCWComplex& X) {
  auto chi = BurnsideElement::zero(X.group());
  for (std::size_t k = 0; k < X.levels(); ++k) {
    auto c = burnside_class(X.cells(k));
    chi += (k % 2 ? -c : c);
  }
  return chi;
}

std::int64_t fixed_euler(const GCWComplex& X, const Subgroup& H) {
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < X.levels(); ++k) {
    auto n = static_cast<std::int64_t>(fixed_points(X.cells(k), H).size());
    chi += (k % 2 ? -n : n);
  }
  return chi;
}

BurnsideElement euler_via_strata(const GCWComplex& X) {
  const auto& G = X.group();
  const auto table = subgroup_classes(G);
  const auto subgroups = all_subgroups(G);
  std::vector<std::int64_t> coeff(table.size(), 0);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Subgroup& H = table.representatives[i];
    const QuotientGroup W = weyl_group(H);
    std::vector<const Subgroup*> larger;
    for (const auto& K : subgroups)
      if (K.order() > H.order() && H.is_subset_of(K)) larger.push_back(&K);

    for (std::size_t k = 0; k < X.levels(); ++k) {
      const GSet& cells = X.cells(k);
      const auto fixed = fixed_points(cells, H);
      std::set<int> singular;
      for (const Subgroup* K : larger)
        for (int x : fixed_points(cells, *K)) singular.insert(x);
      const std::vector<int> singular_cells(singular.begin(), singular.end());

      // chi(X^H/WH) - chi(singular part/WH), one dimension at a time.
      auto whole = orbit_space(cells, W, fixed);
      auto part = orbit_space(cells, W, singular_cells);
      auto relative = static_cast<std::int64_t>(orbits(*whole.residual).size()) -
                      static_cast<std::int64_t>(orbits(*part.residual).size());
      coeff[i] += (k % 2 ? -relative : relative);
    }
  }
  return BurnsideElement(G, std::move(coeff));
}

GCWComplex disjoint_union(const GCWComplex& X, const GCWComplex& Y) {
  if (!same_group(X.group(), Y.group())) throw GroupMismatch("disjoint union of complexes over different groups");
  const std::size_t levels = std::max(X.levels(), Y.levels());
  std::vector<GSet> cells;
  for (std::size_t k = 0; k < levels; ++k) {
    GSet a = k < X.levels() ? X.cells(k) : GSet::empty(X.group());
    GSet b = k < Y.levels() ? Y.cells(k) : GSet::empty(X.group());
    cells.push_back(disjoint_union(a, b));
  }
  return GCWComplex(X.group(), std::move(cells));
}

namespace {

struct CheckedIdentification {
  std::vector<std::vector<int>> x_shared;  // per dimension, sorted
  std::vector<std::vector<char>> y_shared;
};

CheckedIdentification check_identification(const GCWComplex& X, const GCWComplex& Y, const CellIdentification& id) {
  if (!same_group(X.group(), Y.group())) throw GroupMismatch("gluing complexes over different groups");
  const auto& G = *X.group();
  CheckedIdentification out;
  for (std::size_t k = 0; k < id.pairs.size(); ++k) {
    const auto& pairs = id.pairs[k];
    if (pairs.empty()) {
      out.x_shared.emplace_back();
      out.y_shared.emplace_back(k < Y.levels() ? Y.cells(k).size() : 0, 0);
      continue;
    }
    if (k >= X.levels() || k >= Y.levels())
      throw BadIdentification("dimension " + std::to_string(k) + " is missing from one side");
    const GSet& A = X.cells(k);
    const GSet& B = Y.cells(k);
    std::vector<int> to_y(A.size(), -1), to_x(B.size(), -1);
    for (auto [x, y] : pairs) {
      if (x < 0 || x >= A.size() || y < 0 || y >= B.size())
        throw BadIdentification("cell index out of range in dimension " + std::to_string(k));
      if (to_y[x] >= 0 || to_x[y] >= 0)
        throw BadIdentification("cell identified twice in dimension " + std::to_string(k));
      to_y[x] = y;
      to_x[y] = x;
    }
    for (Element g = 0; g < G.order(); ++g)
      for (auto [x, y] : pairs) {
        int gx = A.act(g, x), gy = B.act(g, y);
        if (to_y[gx] < 0 || to_x[gy] < 0)
          throw BadIdentification("identified cells are not a union of orbits in dimension " + std::to_string(k));
        if (to_y[gx] != gy) throw BadIdentification("identification is not equivariant in dimension " + std::to_string(k));
      }
    std::vector<int> xs;
    for (auto [x, y] : pairs) xs.push_back(x);
    std::sort(xs.begin(), xs.end());
    std::vector<char> ys(B.size(), 0);
    for (auto [x, y] : pairs) ys[y] = 1;
    out.x_shared.push_back(std::move(xs));
    out.y_shared.push_back(std::move(ys));
  }
  return out;
}

}  // namespace

GCWComplex union_with_shared_subcomplex(const GCWComplex& X, const GCWComplex& Y, const CellIdentification& id) {
  auto chk = check_identification(X, Y, id);
  const auto& G = *X.group();
  const std::size_t levels = std::max(X.levels(), Y.levels());
  std::vector<GSet> cells;
  for (std::size_t k = 0; k < levels; ++k) {
    GSet A = k < X.levels() ? X.cells(k) : GSet::empty(X.group());
    GSet B = k < Y.levels() ? Y.cells(k) : GSet::empty(X.group());
    std::vector<int> to_x(B.size(), -1);
    if (k < id.pairs.size())
      for (auto [x, y] : id.pairs[k]) to_x[y] = x;
    std::vector<int> new_index(B.size(), -1);
    int next = A.size();
    for (int y = 0; y < B.size(); ++y)
      new_index[y] = to_x[y] >= 0 ? to_x[y] : next++;
    const int n = next;
    std::vector<int> action;
    action.reserve(static_cast<std::size_t>(G.order()) * n);
    for (Element g = 0; g < G.order(); ++g) {
      for (int x = 0; x < A.size(); ++x) action.push_back(A.act(g, x));
      for (int y = 0; y < B.size(); ++y)
        if (to_x[y] < 0) action.push_back(new_index[B.act(g, y)]);
    }
    cells.push_back(make_unchecked(X.group(), n, std::move(action)));
  }
  return GCWComplex(X.group(), std::move(cells));
}

GCWComplex shared_subcomplex(const GCWComplex& X, const GCWComplex& Y, const CellIdentification& id) {
  auto chk = check_identification(X, Y, id);
  std::vector<GSet> cells;
  for (std::size_t k = 0; k < chk.x_shared.size(); ++k) {
    if (k < X.levels())
      cells.push_back(sub_gset(X.cells(k), chk.x_shared[k]));
    else
      cells.push_back(GSet::empty(X.group()));
  }
  return GCWComplex(X.group(), std::move(cells));
}

GCWComplex fiber_over(const LabeledGCW& M, int base_point) {
  if (base_point < 0 || base_point >= M.base.size()) throw InvalidArgument("base point out of range");
  std::vector<GSet> cells;
  for (const auto& label : M.labels) cells.push_back(fiber_gset(label, base_point));
  GroupPtr H = subgroup_as_group(stabilizer(M.base, base_point));
  return GCWComplex(H, std::move(cells));
}

GCWComplex fiber_over_identity(const LabeledGCW& M, const Subgroup& H) {
  if (!(M.base == coset_gset(H))) throw InvalidArgument("base is not the coset set G/H");
  return fiber_over(M, identity_coset(H));
}

LabeledGCW transport(const LabeledGCW& M, const Span& s) {
  std::vector<GSet> cells;
  std::vector<GMap> labels;
  for (const auto& label : M.labels) {
    GMap moved = transport_over(label, s);
    cells.push_back(moved.source);
    labels.push_back(std::move(moved));
  }
  return LabeledGCW(GCWComplex(M.complex.group(), std::move(cells), M.complex.name()), s.target(), std::move(labels));
}

LabeledGCW induce_labeled(const Subgroup& H, const GCWComplex& N) {
  GSet base = coset_gset(H);
  std::vector<GSet> cells;
  std::vector<GMap> labels;
  for (const auto& fiber : N.cells()) {
    GSet induced = induce(H, fiber);
    std::vector<int> m(induced.size());
    for (int p = 0; p < induced.size(); ++p) m[p] = p / std::max(fiber.size(), 1);
    cells.push_back(induced);
    labels.emplace_back(induced, base, std::move(m));
  }
  return LabeledGCW(GCWComplex(H.parent, std::move(cells), N.name()), base, std::move(labels));
}

LabeledGCW over_point(const GCWComplex& X) {
  GSet pt = GSet::point(X.group());
  std::vector<GMap> labels;
  for (const auto& c : X.cells()) labels.push_back(terminal_map(c));
  return LabeledGCW(X, pt, std::move(labels));
}

GCWComplex conjugate_complex(const Subgroup& H, const GCWComplex& N, Element g) {
  std::vector<GSet> cells;
  for (const auto& c : N.cells()) cells.push_back(conjugate_action(H, c, g));
  return GCWComplex(subgroup_as_group(conjugate(H, g)), std::move(cells), N.name());
}

GCWComplex restrict_complex(const GCWComplex& X, const Subgroup& K) {
  std::vector<GSet> cells;
  for (const auto& c : X.cells()) cells.push_back(restrict_action(c, K));
  return GCWComplex(subgroup_as_group(K), std::move(cells), X.name());
}

}  // namespace gsk
