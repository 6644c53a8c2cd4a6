#include "gsk/mackey.hpp"

#include <sstream>

namespace gsk {

namespace {

// K <= H seen inside the standalone group of H.
Subgroup localize(const Subgroup& H, const Subgroup& K) {
  Subgroup out{subgroup_as_group(H), {}};
  for (Element k : K.elements) {
    int i = local_index(H, k);
    if (i < 0) throw InvalidArgument("subgroup is not contained in the ambient subgroup");
    out.elements.push_back(i);
  }
  return out;
}

Subgroup intersect(const Subgroup& A, const Subgroup& B) {
  Subgroup out{A.parent, {}};
  for (Element a : A.elements)
    if (B.contains(a)) out.elements.push_back(a);
  return out;
}

// Orbit basis of Burn(H): the H-sets H/L_i.
std::vector<GSet> orbit_basis(const Subgroup& H) {
  GroupPtr Hg = subgroup_as_group(H);
  std::vector<GSet> out;
  for (std::size_t i = 0; i < Hg->lattice().class_count(); ++i)
    out.push_back(coset_gset(class_representative(Hg, static_cast<int>(i))));
  return out;
}

void set_column(IntMatrix& m, std::size_t j, const BurnsideElement& value) {
  for (std::size_t i = 0; i < value.coords().size(); ++i) m(i, j) = value[i];
}

// The G-set G x_H X over G/H.
GMap induced_over(const Subgroup& H, const GSet& X) {
  GSet total = induce(H, X);
  std::vector<int> m(total.size());
  for (int p = 0; p < total.size(); ++p) m[p] = p / X.size();
  return GMap(total, coset_gset(H), std::move(m));
}

// Matrix of X -> fiber over eT of transport along s, where X runs over the
// orbit basis of Burn(H) and s is a span from G/H to G/T.
IntMatrix span_matrix(const Subgroup& H, const Subgroup& T, const Span& s) {
  const auto basis = orbit_basis(H);
  const int target_rank = static_cast<int>(subgroup_as_group(T)->lattice().class_count());
  IntMatrix m(target_rank, basis.size());
  const int eT = identity_coset(T);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    GMap moved = transport_over(induced_over(H, basis[j]), s);
    set_column(m, j, burnside_class(fiber_gset(moved, eT)));
  }
  return m;
}

template <typename F>
IntMatrix linearize(const Subgroup& source, const Subgroup& target, F&& f) {
  const auto basis = orbit_basis(source);
  const int target_rank = static_cast<int>(subgroup_as_group(target)->lattice().class_count());
  IntMatrix m(target_rank, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) set_column(m, j, burnside_class(f(basis[j])));
  return m;
}

MackeyData skeleton(const GroupPtr& G) {
  MackeyData M;
  M.group = G;
  M.subgroups = all_subgroups(G);
  for (const auto& H : M.subgroups)
    M.rank.push_back(static_cast<int>(subgroup_as_group(H)->lattice().class_count()));
  M.conj.resize(G->order());
  return M;
}

std::string describe(const MackeyData& M, int i) {
  const auto& lat = M.group->lattice();
  return "H" + std::to_string(i) + "(" + lat.names[lat.class_of[i]] + ")";
}

template <typename T>
std::string show(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

int MackeyData::index_of(const Subgroup& H) const {
  int i = group->lattice().index_of(H.elements);
  if (i < 0) throw InvalidArgument("not a subgroup of the Mackey group");
  return i;
}

const IntMatrix& MackeyData::restriction(const Subgroup& H, const Subgroup& K) const {
  return res.at({index_of(H), index_of(K)});
}

const IntMatrix& MackeyData::transfer(const Subgroup& K, const Subgroup& H) const {
  return tr.at({index_of(H), index_of(K)});
}

const IntMatrix& MackeyData::conjugation(Element g, const Subgroup& H) const { return conj.at(g).at(index_of(H)); }

MackeyData burnside_mackey(const GroupPtr& G) {
  MackeyData M = skeleton(G);
  const int n = static_cast<int>(M.subgroups.size());
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k) {
      const Subgroup& H = M.subgroups[h];
      const Subgroup& K = M.subgroups[k];
      if (!K.is_subset_of(H)) continue;
      M.res[{h, k}] = span_matrix(H, K, restriction_span(H, K));
      M.tr[{h, k}] = span_matrix(K, H, transfer_span(K, H));
    }
  for (Element g = 0; g < G->order(); ++g)
    for (int h = 0; h < n; ++h) {
      const Subgroup& H = M.subgroups[h];
      M.conj[g].push_back(span_matrix(H, conjugate(H, g), conjugation_span(H, g)));
    }
  return M;
}

MackeyData burnside_mackey_direct(const GroupPtr& G) {
  MackeyData M = skeleton(G);
  const int n = static_cast<int>(M.subgroups.size());
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k) {
      const Subgroup& H = M.subgroups[h];
      const Subgroup& K = M.subgroups[k];
      if (!K.is_subset_of(H)) continue;
      const Subgroup local = localize(H, K);
      M.res[{h, k}] = linearize(H, K, [&](const GSet& X) { return restrict_action(X, local); });
      M.tr[{h, k}] = linearize(K, H, [&](const GSet& X) { return induce(local, X); });
    }
  for (Element g = 0; g < G->order(); ++g)
    for (int h = 0; h < n; ++h) {
      const Subgroup& H = M.subgroups[h];
      M.conj[g].push_back(linearize(H, conjugate(H, g), [&](const GSet& X) { return conjugate_action(H, X, g); }));
    }
  return M;
}

DoubleCosetReport verify_double_coset(const MackeyData& M, const Subgroup& K, const Subgroup& H) {
  const GroupPtr& G = M.group;
  const Subgroup whole = whole_group(G);
  DoubleCosetReport r;
  r.k = M.index_of(K);
  r.h = M.index_of(H);
  r.lhs = M.restriction(whole, K) * M.transfer(H, whole);
  r.rhs = IntMatrix(M.rank[r.k], M.rank[r.h]);
  for (Element g : double_cosets(K, H)) {
    const Element ginv = G->inverse(g);
    const Subgroup low = intersect(H, conjugate(K, ginv));   // H and g^-1 K g
    const Subgroup high = intersect(K, conjugate(H, g));     // K and g H g^-1
    r.rhs += M.transfer(high, K) * M.conjugation(g, low) * M.restriction(H, low);
  }
  r.pass = r.lhs == r.rhs;
  return r;
}

std::vector<MackeyCheck> verify_mackey_axioms(const MackeyData& M) {
  const GroupPtr& G = M.group;
  const int n = static_cast<int>(M.subgroups.size());
  std::vector<MackeyCheck> out;

  auto fail = [](MackeyCheck& c, std::string why) {
    if (c.pass) c.witness = std::move(why);
    c.pass = false;
  };

  MackeyCheck unit{"unit: res^H_H = tr^H_H = id", true, {}};
  for (int h = 0; h < n; ++h) {
    const auto id = IntMatrix::identity(M.rank[h]);
    if (!(M.res.at({h, h}) == id) || !(M.tr.at({h, h}) == id)) fail(unit, describe(M, h));
  }
  out.push_back(unit);

  MackeyCheck inner{"inner conjugation: c_h = id on A(H) for h in H", true, {}};
  for (int h = 0; h < n; ++h)
    for (Element x : M.subgroups[h].elements)
      if (!(M.conj[x][h] == IntMatrix::identity(M.rank[h])))
        fail(inner, describe(M, h) + " g=" + std::to_string(x));
  out.push_back(inner);

  MackeyCheck trans{"transitivity of res and tr", true, {}};
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k) {
      if (!M.res.count({h, k})) continue;
      for (int l = 0; l < n; ++l) {
        if (!M.res.count({k, l})) continue;
        if (!(M.res.at({k, l}) * M.res.at({h, k}) == M.res.at({h, l})))
          fail(trans, "res " + describe(M, h) + " > " + describe(M, k) + " > " + describe(M, l));
        if (!(M.tr.at({h, k}) * M.tr.at({k, l}) == M.tr.at({h, l})))
          fail(trans, "tr " + describe(M, l) + " < " + describe(M, k) + " < " + describe(M, h));
      }
    }
  out.push_back(trans);

  MackeyCheck comp{"conjugation composes: c_g c_g' = c_gg'", true, {}};
  for (Element g = 0; g < G->order(); ++g)
    for (Element g2 = 0; g2 < G->order(); ++g2)
      for (int h = 0; h < n; ++h) {
        const Subgroup& H = M.subgroups[h];
        const IntMatrix lhs = M.conjugation(g, conjugate(H, g2)) * M.conj[g2][h];
        if (!(lhs == M.conj[G->mul(g, g2)][h]))
          fail(comp, describe(M, h) + " g=" + std::to_string(g) + " g'=" + std::to_string(g2));
      }
  out.push_back(comp);

  MackeyCheck natural{"conjugation commutes with res and tr", true, {}};
  for (Element g = 0; g < G->order(); ++g)
    for (const auto& [key, R] : M.res) {
      const Subgroup& H = M.subgroups[key.first];
      const Subgroup& K = M.subgroups[key.second];
      const Subgroup gH = conjugate(H, g), gK = conjugate(K, g);
      if (!(M.conjugation(g, K) * R == M.restriction(gH, gK) * M.conjugation(g, H)))
        fail(natural, "res " + describe(M, key.first) + " > " + describe(M, key.second) + " g=" + std::to_string(g));
      if (!(M.conjugation(g, H) * M.tr.at(key) == M.transfer(gK, gH) * M.conjugation(g, K)))
        fail(natural, "tr " + describe(M, key.second) + " < " + describe(M, key.first) + " g=" + std::to_string(g));
    }
  out.push_back(natural);

  MackeyCheck dc{"double coset formula on class representatives", true, {}};
  const auto table = subgroup_classes(G);
  for (const auto& K : table.representatives)
    for (const auto& H : table.representatives) {
      auto r = verify_double_coset(M, K, H);
      if (!r.pass)
        fail(dc, "K=" + describe(M, r.k) + " H=" + describe(M, r.h) + " lhs=" + show(r.lhs) + " rhs=" + show(r.rhs));
    }
  out.push_back(dc);
  return out;
}

std::vector<FiberChi> fiber_chis(const LabeledGCW& M) {
  std::vector<FiberChi> out;
  for (const auto& orb : orbits(M.base)) out.push_back({orb.front(), euler_char(fiber_over(M, orb.front()))});
  return out;
}

ChiTransportReport sk_transport(const MackeyData& data, const Span& s, const LabeledGCW& M) {
  if (!same_group(data.group, M.complex.group())) throw GroupMismatch("Mackey data over a different group");
  ChiTransportReport r;
  r.before = fiber_chis(M);
  r.after = fiber_chis(transport(M, s));

  const GSet& X = s.source();
  const GSet& U = s.apex();
  const auto x_orbit = orbit_ids(X);
  std::vector<const BurnsideElement*> chi_at_orbit(r.before.size());
  for (std::size_t i = 0; i < r.before.size(); ++i) chi_at_orbit[i] = &r.before[i].chi;

  for (const auto& after : r.after) {
    const int y0 = after.base_point;
    const Subgroup T = stabilizer(s.target(), y0);
    auto predicted = BurnsideElement::zero(subgroup_as_group(T));

    std::vector<int> over_y0;
    for (int u = 0; u < U.size(); ++u)
      if (s.right(u) == y0) over_y0.push_back(u);
    std::vector<char> seen(U.size(), 0);
    for (int u : over_y0) {
      if (seen[u]) continue;
      for (Element t : T.elements) seen[U.act(t, u)] = 1;

      const Subgroup S = stabilizer(U, u);
      const int a = s.left(u);
      const int orbit = x_orbit[a];
      const int x0 = r.before[orbit].base_point;
      Element g = 0;
      while (X.act(g, x0) != a) ++g;
      const Subgroup base_stab = stabilizer(X, x0);
      const Subgroup A = conjugate(base_stab, g);

      auto v = chi_at_orbit[orbit]->coords();
      v = data.conjugation(g, base_stab).apply(v);
      v = data.restriction(A, S).apply(v);
      v = data.transfer(S, T).apply(v);
      predicted += BurnsideElement(predicted.group(), std::move(v));
    }
    r.predicted.push_back({y0, std::move(predicted)});
  }

  r.agrees = r.predicted.size() == r.after.size();
  for (std::size_t i = 0; r.agrees && i < r.after.size(); ++i) r.agrees = r.after[i].chi == r.predicted[i].chi;
  return r;
}

}  // namespace gsk
