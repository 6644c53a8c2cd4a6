#include "gsk/slice.hpp"

#include <algorithm>

#include "gsk/catalogue.hpp"

namespace gsk {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_cyclic(const Subgroup& H) {
  for (Element h : H.elements)
    if (static_cast<std::size_t>(H.parent->element_order(h)) == H.order()) return true;
  return false;
}

}  // namespace

std::string RealIrrep::name() const {
  switch (kind) {
    case Kind::Trivial: return "triv";
    case Kind::Sign: return "sign";
    case Kind::Rotation: return "rot(" + std::to_string(j) + ")";
  }
  return {};
}

RealIrrep trivial_irrep(int n) {
  if (n < 1) throw InvalidArgument("cyclic group order must be positive");
  return {n, RealIrrep::Kind::Trivial, 0};
}

RealIrrep sign_irrep(int n) {
  if (n < 1 || n % 2) throw InvalidArgument("sign representation needs even order, got " + std::to_string(n));
  return {n, RealIrrep::Kind::Sign, 0};
}

RealIrrep rotation_irrep(int n, int j) {
  if (n < 1) throw InvalidArgument("cyclic group order must be positive");
  j = ((j % n) + n) % n;
  j = std::min(j, n - j);
  if (j == 0 || 2 * j == n) throw InvalidArgument("rotation(" + std::to_string(j) + ") is not irreducible for n = " + std::to_string(n));
  return {n, RealIrrep::Kind::Rotation, j};
}

std::vector<RealIrrep> real_irreps_cyclic(int n) {
  std::vector<RealIrrep> out{trivial_irrep(n)};
  if (n % 2 == 0) out.push_back(sign_irrep(n));
  for (int j = 1; 2 * j < n; ++j) out.push_back(rotation_irrep(n, j));
  return out;
}

SliceType make_slice_type(const Subgroup& H, std::vector<RealIrrep> representation) {
  if (!is_cyclic(H)) throw UnsupportedGroup("slice types are only implemented for cyclic isotropy");
  for (const auto& r : representation) {
    if (static_cast<std::size_t>(r.n) != H.order()) throw InvalidArgument("representation of a group of the wrong order");
    if (r.kind == RealIrrep::Kind::Trivial) throw InvalidArgument("slice representations have no trivial summand");
  }
  std::sort(representation.begin(), representation.end());
  return {class_index(H), std::move(representation)};
}

std::string slice_type_name(const GroupPtr& G, const SliceType& t) {
  std::string rep;
  for (const auto& r : t.representation) rep += (rep.empty() ? "" : "+") + r.name();
  if (rep.empty()) rep = "0";
  return "[" + G->lattice().names[t.subgroup_class] + ", " + rep + "]";
}

std::int64_t evaluate(const SliceVector& v, const SliceType& t) {
  auto it = v.find(t);
  return it == v.end() ? 0 : it->second;
}

std::string slice_vector_string(const GroupPtr& G, const SliceVector& v) {
  std::string out = "{";
  bool first = true;
  for (const auto& [t, c] : v) {
    if (c == 0) continue;
    out += (first ? "" : ", ") + slice_type_name(G, t) + " -> " + std::to_string(c);
    first = false;
  }
  return out + "}";
}

SliceVector projective_generator_slice_vector(const GroupPtr& G, const Subgroup& K, const RealIrrep& T) {
  if (!G->is_abelian() || G->order() % 2 == 0)
    throw UnsupportedGroup("the projective generator formula needs G abelian of odd order");
  if (!same_group(K.parent, G)) throw GroupMismatch("K is not a subgroup of G");
  if (T.kind == RealIrrep::Kind::Trivial) throw InvalidArgument("T must be nontrivial");
  SliceVector v;
  v[make_slice_type(K, {T})] = G->order() / static_cast<std::int64_t>(K.order());
  return v;
}

GCWComplex projective_plane_model(const GroupPtr& G) {
  const Subgroup e = trivial_subgroup(G);
  const GSet free = coset_gset(e);
  const GSet fixed = GSet::point(G);
  return GCWComplex(G, {disjoint_union(fixed, free), disjoint_union(free, free), free}, "RP(R+V)");
}

CounterexampleReport counterexample_report(int p) {
  if (!is_prime(p) || p < 5)
    throw InvalidArgument("need a prime p >= 5; C_" + std::to_string(p) + " has too few 2-dimensional irreducibles");
  CounterexampleReport r;
  r.p = p;
  GroupPtr G = catalogue::cyclic(p);
  r.model = projective_plane_model(G);
  r.chi_first = euler_char(r.model);
  r.chi_second = euler_char(r.model);
  const Subgroup whole = whole_group(G);
  r.slices_first = projective_generator_slice_vector(G, whole, rotation_irrep(p, 1));
  r.slices_second = projective_generator_slice_vector(G, whole, rotation_irrep(p, 2));

  r.euler_agree = r.chi_first == r.chi_second;
  const auto m1 = marks(r.chi_first);
  const auto m2 = marks(r.chi_second);
  r.marks_are_one = m1 == std::vector<std::int64_t>{1, 1} && m2 == m1;
  const SliceType V = make_slice_type(whole, {rotation_irrep(p, 1)});
  r.slices_differ = r.slices_first != r.slices_second && evaluate(r.slices_first, V) == 1 && evaluate(r.slices_second, V) == 0;
  return r;
}

}  // namespace gsk
