#include <gtest/gtest.h>

#include "gsk/catalogue.hpp"
#include "gsk/error.hpp"
#include "gsk/random.hpp"
#include "gsk/span.hpp"

using namespace gsk;

namespace {

// The same span with its apex points renamed by a random permutation.
Span relabel_apex(const Span& s, Rng& rng) {
  const int n = s.apex().size();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  GSet U = relabel(s.apex(), perm);
  std::vector<int> left(n), right(n);
  for (int x = 0; x < n; ++x) {
    left[perm[x]] = s.left(x);
    right[perm[x]] = s.right(x);
  }
  return make_span(GMap(U, s.source(), left), GMap(U, s.target(), right));
}

}  // namespace

TEST(Span, MakeSpanChecksApex) {
  auto C2 = catalogue::cyclic(2);
  auto X = GSet::regular(C2);
  auto P = GSet::point(C2);
  EXPECT_NO_THROW(make_span(identity_map(X), terminal_map(X)));
  EXPECT_THROW(make_span(identity_map(X), identity_map(P)), InvalidArgument);
}

TEST(Span, IdentityUnits) {
  Rng rng(2);
  for (const auto& G : {catalogue::cyclic(4), catalogue::symmetric(3), catalogue::dihedral(4)})
    for (int trial = 0; trial < 10; ++trial) {
      auto X = random_gset(G, rng, 2), Y = random_gset(G, rng, 2);
      auto s = random_span(X, Y, rng, 3);
      EXPECT_TRUE(spans_equal(compose_span_diagrams(identity_span(X), s), s));
      EXPECT_TRUE(spans_equal(compose_span_diagrams(s, identity_span(Y)), s));
      EXPECT_EQ(compose_spans(identity_span(X), s), span_class(s));
    }
}

TEST(Span, ComposeRestrictionAfterTransfer) {
  auto C2 = catalogue::cyclic(2);
  auto G = whole_group(C2), e = trivial_subgroup(C2);
  // Transfer first, then restrict: apex G/e x_{G/G} G/e.
  auto s = compose_span_diagrams(transfer_span(e, G), restriction_span(G, e));
  EXPECT_EQ(s.apex().size(), 4);
  EXPECT_EQ(orbits(s.apex()).size(), 2u);
  for (const auto& orb : orbits(s.apex())) EXPECT_EQ(stabilizer(s.apex(), orb.front()).order(), 1u);
  // The other order pulls back over G/e and keeps a single free orbit.
  auto r = compose_span_diagrams(restriction_span(G, e), transfer_span(e, G));
  EXPECT_EQ(r.apex().size(), 2);
}

TEST(Span, ZeroAbsorbs) {
  Rng rng(8);
  auto G = catalogue::symmetric(3);
  auto X = random_gset(G, rng, 2), Y = random_gset(G, rng, 2), Z = random_gset(G, rng, 2);
  auto s = random_span(X, Y, rng, 3);
  auto z = zero_span(Y, Z);
  auto c = compose_span_diagrams(s, z);
  EXPECT_EQ(c.apex().size(), 0);
  EXPECT_TRUE(spans_equal(c, zero_span(X, Z)));
}

TEST(SpansEqual, RelabelingAndDistinctApexes) {
  Rng rng(31);
  for (const auto& [name, G] : catalogue::groups_up_to_order_12()) {
    if (G->order() > 8) continue;
    for (int trial = 0; trial < 5; ++trial) {
      auto X = random_gset(G, rng, 2), Y = random_gset(G, rng, 2);
      auto s = random_span(X, Y, rng, 3);
      EXPECT_TRUE(spans_equal(s, s)) << name;
      auto t = relabel_apex(s, rng);
      EXPECT_TRUE(spans_equal(s, t)) << name;
      EXPECT_EQ(canonical_form(s), canonical_form(t)) << name;
      auto bigger = span_sum(s, random_span(X, Y, rng, 1));
      if (bigger.apex().size() != s.apex().size()) EXPECT_FALSE(spans_equal(s, bigger)) << name;
    }
  }
}

TEST(SpansEqual, LegsMatter) {
  // Same apex G/e over G/e x G/e for C2, but the right leg twisted by the swap.
  auto C2 = catalogue::cyclic(2);
  auto X = GSet::regular(C2);
  auto s = make_span(identity_map(X), identity_map(X));
  auto t = make_span(identity_map(X), GMap(X, X, {1, 0}));
  EXPECT_FALSE(spans_equal(s, t));
  EXPECT_NE(canonical_form(s), canonical_form(t));
}

TEST(SpansEqual, ApexCap) {
  auto C2 = catalogue::cyclic(2);
  auto U = GSet::trivial(C2, kApexCap + 1);
  auto s = make_span(terminal_map(U), terminal_map(U));
  EXPECT_THROW(spans_equal(s, s), ApexTooLarge);
}

TEST(SpansEqual, AgreesWithCanonicalForm) {
  Rng rng(41);
  auto G = catalogue::dihedral(4);
  for (int trial = 0; trial < 30; ++trial) {
    auto X = random_gset(G, rng, 2), Y = random_gset(G, rng, 2);
    auto s = random_span(X, Y, rng, 2), t = random_span(X, Y, rng, 2);
    EXPECT_EQ(spans_equal(s, t), canonical_form(s) == canonical_form(t));
  }
}

TEST(Span, CompositionIsAssociative) {
  Rng rng(5);
  for (const auto& [name, G] : catalogue::groups_up_to_order_12()) {
    if (G->order() > 8) continue;
    for (int trial = 0; trial < 4; ++trial) {
      auto W = random_gset(G, rng, 2), X = random_gset(G, rng, 2), Y = random_gset(G, rng, 2),
           Z = random_gset(G, rng, 2);
      auto r = random_span(W, X, rng, 2, 16), s = random_span(X, Y, rng, 2, 16), t = random_span(Y, Z, rng, 2, 16);
      auto left = compose_span_diagrams(compose_span_diagrams(r, s), t);
      auto right = compose_span_diagrams(r, compose_span_diagrams(s, t));
      EXPECT_EQ(canonical_form(left), canonical_form(right)) << name;
      if (left.apex().size() <= kApexCap) EXPECT_TRUE(spans_equal(left, right)) << name;
    }
  }
}

TEST(Span, StructuralSpansHaveExpectedShape) {
  auto S3 = catalogue::symmetric(3);
  const Subgroup C2 = subgroup_classes(S3).representatives[1];
  const Subgroup e = trivial_subgroup(S3);
  auto r = restriction_span(C2, e);
  EXPECT_EQ(r.source().size(), 3);
  EXPECT_EQ(r.apex().size(), 6);
  EXPECT_EQ(r.target().size(), 6);
  auto t = transfer_span(e, C2);
  EXPECT_EQ(t.source().size(), 6);
  EXPECT_EQ(t.target().size(), 3);
  for (Element g = 0; g < 6; ++g) {
    auto c = conjugation_span(C2, g);
    EXPECT_EQ(c.apex().size(), 3);
    EXPECT_EQ(stabilizer(c.target(), identity_coset(conjugate(C2, g))), conjugate(C2, g));
  }
  EXPECT_THROW(restriction_span(e, C2), InvalidArgument);
}

TEST(VirtualSpan, SumAndZero) {
  Rng rng(14);
  auto G = catalogue::symmetric(3);
  auto X = random_gset(G, rng, 2), Y = random_gset(G, rng, 2);
  auto s = random_span(X, Y, rng, 3), t = random_span(X, Y, rng, 3);
  auto vs = VirtualSpan::from_span(s), vt = VirtualSpan::from_span(t);
  EXPECT_EQ(vs + vt, VirtualSpan::from_span(span_sum(s, t)));
  EXPECT_EQ(vs + vt, vt + vs);
  EXPECT_TRUE((vs - vs).terms().empty());
  EXPECT_EQ(VirtualSpan::from_span(zero_span(X, Y)), VirtualSpan(X, Y));
  EXPECT_EQ(2 * vs, vs + vs);
}

TEST(VirtualSpan, CompositionDistributes) {
  Rng rng(15);
  for (const auto& G : {catalogue::cyclic(2), catalogue::cyclic(3), catalogue::symmetric(3)})
    for (int trial = 0; trial < 6; ++trial) {
      auto X = random_gset(G, rng, 2), Y = random_gset(G, rng, 2), Z = random_gset(G, rng, 2);
      auto a = VirtualSpan::from_span(random_span(X, Y, rng, 2, 16));
      auto b = VirtualSpan::from_span(random_span(X, Y, rng, 2, 16), -1);
      auto c = VirtualSpan::from_span(random_span(Y, Z, rng, 2, 16));
      EXPECT_EQ(compose(a + b, c), compose(a, c) + compose(b, c));
      EXPECT_EQ(compose(a, 3 * c), 3 * compose(a, c));
    }
}

TEST(Span, TransitiveSummandsRebuildTheSpan) {
  Rng rng(16);
  auto G = catalogue::dihedral(4);
  auto X = random_gset(G, rng, 2), Y = random_gset(G, rng, 2);
  auto s = random_span(X, Y, rng, 4);
  Span total = zero_span(X, Y);
  for (const auto& piece : transitive_summands(s)) {
    EXPECT_EQ(orbits(piece.apex()).size(), 1u);
    total = span_sum(total, piece);
  }
  EXPECT_TRUE(spans_equal(total, s));
}

TEST(Span, TransportOverMatchesPullback) {
  auto C2 = catalogue::cyclic(2);
  auto X = GSet::regular(C2);
  auto over = identity_map(X);
  auto s = make_span(identity_map(X), terminal_map(X));
  auto moved = transport_over(over, s);
  EXPECT_EQ(moved.source.size(), 2);
  EXPECT_EQ(moved.target.size(), 1);
  auto fiber = fiber_gset(moved, 0);
  EXPECT_EQ(fiber.size(), 2);
  EXPECT_EQ(fiber.group()->order(), 2);
  EXPECT_EQ(orbits(fiber).size(), 1u);
}
