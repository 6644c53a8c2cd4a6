#include "gsk/span.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace gsk {

namespace {

// Least G-translate of (leg images of u, sorted Stab(u)).
OrbitKey orbit_key(const GSet& U, int u, const std::vector<const GMap*>& legs) {
  const auto& G = *U.group();
  Subgroup S = stabilizer(U, u);
  OrbitKey best;
  for (Element g = 0; g < G.order(); ++g) {
    OrbitKey key;
    key.reserve(legs.size() + 1 + S.order());
    for (const GMap* leg : legs) key.push_back(leg->target.act(g, (*leg)(u)));
    key.push_back(static_cast<int>(S.order()));
    auto conj = conjugate(S, g);
    key.insert(key.end(), conj.elements.begin(), conj.elements.end());
    if (best.empty() || key < best) best = std::move(key);
  }
  return best;
}

CanonicalForm canonical(const GSet& U, const std::vector<const GMap*>& legs) {
  CanonicalForm form;
  for (const auto& orb : orbits(U)) form.push_back(orbit_key(U, orb.front(), legs));
  std::sort(form.begin(), form.end());
  return form;
}

void require_apex_cap(const GSet& U) {
  if (U.size() > kApexCap)
    throw ApexTooLarge(std::to_string(U.size()) + " points exceeds " + std::to_string(kApexCap));
}

}  // namespace

Span make_span(GMap left, GMap right) {
  if (!(left.source == right.source)) throw InvalidArgument("span legs must share their apex");
  return {std::move(left), std::move(right)};
}

Span identity_span(const GSet& X) { return {identity_map(X), identity_map(X)}; }

Span zero_span(const GSet& X, const GSet& Y) {
  GSet empty = GSet::empty(X.group());
  return make_span(GMap(empty, X, {}), GMap(empty, Y, {}));
}

Span span_sum(const Span& s, const Span& t) {
  if (!(s.source() == t.source()) || !(s.target() == t.target()))
    throw InvalidArgument("adding spans with different ends");
  GSet apex = disjoint_union(s.apex(), t.apex());
  std::vector<int> l = s.left.map, r = s.right.map;
  l.insert(l.end(), t.left.map.begin(), t.left.map.end());
  r.insert(r.end(), t.right.map.begin(), t.right.map.end());
  return make_span(GMap(apex, s.source(), std::move(l)), GMap(apex, s.target(), std::move(r)));
}

Span compose_span_diagrams(const Span& s, const Span& t) {
  if (!(s.target() == t.source())) throw InvalidArgument("composing spans with mismatched middle object");
  Pullback p = pullback(s.right, t.left);
  return make_span(compose(s.left, p.left), compose(t.right, p.right));
}

Span restriction_span(const Subgroup& H, const Subgroup& K) {
  GMap pi = coset_projection(K, H);
  return make_span(pi, identity_map(pi.source));
}

Span transfer_span(const Subgroup& K, const Subgroup& H) {
  GMap pi = coset_projection(K, H);
  return make_span(identity_map(pi.source), pi);
}

Span conjugation_span(const Subgroup& H, Element g) {
  Subgroup gH = conjugate(H, g);
  GSet target = coset_gset(gH);
  GMap phi = orbit_map(H, target, coset_index(gH, H.parent->inverse(g)));
  return make_span(identity_map(phi.source), phi);
}

CanonicalForm canonical_form(const Span& s) { return canonical(s.apex(), {&s.left, &s.right}); }

CanonicalForm canonical_form(const GMap& over) { return canonical(over.source, {&over}); }

SpanClass span_class(const Span& s) { return {s, canonical_form(s)}; }

SpanClass compose_spans(const Span& s, const Span& t) { return span_class(compose_span_diagrams(s, t)); }

bool spans_equal(const Span& s, const Span& t) {
  require_apex_cap(s.apex());
  require_apex_cap(t.apex());
  if (!(s.source() == t.source()) || !(s.target() == t.target())) return false;
  const GSet& U = s.apex();
  const GSet& V = t.apex();
  if (U.size() != V.size()) return false;

  auto u_orbits = orbits(U);
  auto v_ids = orbit_ids(V);
  const int v_orbit_count = static_cast<int>(orbits(V).size());
  if (static_cast<int>(u_orbits.size()) != v_orbit_count) return false;

  std::vector<Subgroup> u_stab;
  for (const auto& o : u_orbits) u_stab.push_back(stabilizer(U, o.front()));
  std::vector<Subgroup> v_stab;
  for (int v = 0; v < V.size(); ++v) v_stab.push_back(stabilizer(V, v));

  // An orbit of U with representative u can map onto the orbit of v iff the
  // legs agree at (u, v) and Stab(u) = Stab(v); then g.u -> g.v is forced.
  std::vector<char> used(v_orbit_count, 0);
  std::function<bool(std::size_t)> match = [&](std::size_t i) -> bool {
    if (i == u_orbits.size()) return true;
    const int u = u_orbits[i].front();
    for (int v = 0; v < V.size(); ++v) {
      if (used[v_ids[v]]) continue;
      if (s.left(u) != t.left(v) || s.right(u) != t.right(v)) continue;
      if (!(u_stab[i] == v_stab[v])) continue;
      used[v_ids[v]] = 1;
      if (match(i + 1)) return true;
      used[v_ids[v]] = 0;
    }
    return false;
  };
  return match(0);
}

std::vector<Span> transitive_summands(const Span& s) {
  std::vector<Span> out;
  for (const auto& orb : orbits(s.apex())) {
    GSet piece = sub_gset(s.apex(), orb);
    std::vector<int> l, r;
    for (int u : orb) {
      l.push_back(s.left(u));
      r.push_back(s.right(u));
    }
    out.push_back(make_span(GMap(piece, s.source(), std::move(l)), GMap(piece, s.target(), std::move(r))));
  }
  return out;
}

VirtualSpan::VirtualSpan(GSet source, GSet target) : source_(std::move(source)), target_(std::move(target)) {}

VirtualSpan VirtualSpan::from_span(const Span& s, std::int64_t coefficient) {
  VirtualSpan v(s.source(), s.target());
  for (const auto& piece : transitive_summands(s)) v.add_term(canonical_form(piece), piece, coefficient);
  return v;
}

void VirtualSpan::add_term(const CanonicalForm& form, const Span& rep, std::int64_t coefficient) {
  if (coefficient == 0) return;
  reps_.try_emplace(form, rep);
  auto& c = terms_[form];
  c += coefficient;
  if (c == 0) terms_.erase(form);
}

VirtualSpan& VirtualSpan::operator+=(const VirtualSpan& other) {
  if (!(source_ == other.source_) || !(target_ == other.target_))
    throw InvalidArgument("adding virtual spans with different ends");
  for (const auto& [form, c] : other.terms_) add_term(form, other.reps_.at(form), c);
  return *this;
}

VirtualSpan operator-(VirtualSpan a, const VirtualSpan& b) { return a += (-1) * b; }

VirtualSpan operator*(std::int64_t k, VirtualSpan a) {
  if (k == 0) {
    a.terms_.clear();
    return a;
  }
  for (auto& [form, c] : a.terms_) c *= k;
  return a;
}

VirtualSpan compose(const VirtualSpan& a, const VirtualSpan& b) {
  if (!(a.target_ == b.source_)) throw InvalidArgument("composing virtual spans with mismatched middle object");
  VirtualSpan out(a.source_, b.target_);
  for (const auto& [fa, ca] : a.terms_)
    for (const auto& [fb, cb] : b.terms_) {
      Span composite = compose_span_diagrams(a.reps_.at(fa), b.reps_.at(fb));
      for (const auto& piece : transitive_summands(composite))
        out.add_term(canonical_form(piece), piece, ca * cb);
    }
  return out;
}

GMap transport_over(const GMap& over, const Span& s) {
  if (!(over.target == s.source())) throw InvalidArgument("transport along a span from a different base");
  Pullback p = pullback(over, s.left);
  return compose(s.right, p.right);
}

GSet fiber_gset(const GMap& over, int base_point) {
  Subgroup H = stabilizer(over.target, base_point);
  std::vector<int> pts;
  for (int x = 0; x < over.source.size(); ++x)
    if (over(x) == base_point) pts.push_back(x);
  return sub_gset(restrict_action(over.source, H), pts);
}

}  // namespace gsk
