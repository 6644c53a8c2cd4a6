#include <gtest/gtest.h>

#include "gsk/catalogue.hpp"
#include "gsk/mackey.hpp"
#include "gsk/random.hpp"

using namespace gsk;

namespace {

std::vector<std::int64_t> column(const IntMatrix& A, std::size_t j) {
  std::vector<std::int64_t> out(A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i) out[i] = A(i, j);
  return out;
}

const std::vector<std::string>& axiom_groups() {
  static const std::vector<std::string> names{"C2", "C4", "C2xC2", "S3", "D4", "Q8", "C6"};
  return names;
}

GCWComplex from_orbits(const GroupPtr& G, const std::vector<std::vector<int>>& levels) {
  std::vector<GSet> cells;
  for (const auto& level : levels) {
    GSet X = GSet::empty(G);
    for (int c : level) X = disjoint_union(X, coset_gset(class_representative(G, c)));
    cells.push_back(X);
  }
  return GCWComplex(G, cells);
}

}  // namespace

TEST(BurnsideMackey, Examples) {
  auto S3 = catalogue::symmetric(3);
  auto M = burnside_mackey(S3);
  const auto G = whole_group(S3), e = trivial_subgroup(S3);
  EXPECT_EQ(column(M.transfer(e, G), 0), (std::vector<std::int64_t>{1, 0, 0, 0}));
  const Subgroup C3 = subgroup_classes(S3).representatives[2];
  // [S3/C2] restricted to C3 is one free orbit.
  EXPECT_EQ(column(M.restriction(G, C3), 1), (std::vector<std::int64_t>{1, 0}));
  EXPECT_EQ(M.restriction(G, G), IntMatrix::identity(4));

  for (const std::string name : {"C4", "C2xC2", "C6"}) {
    auto A = catalogue::by_name(name);
    auto MA = burnside_mackey(A);
    for (Element g = 0; g < A->order(); ++g)
      for (const auto& H : MA.subgroups) EXPECT_EQ(MA.conjugation(g, H), IntMatrix::identity(MA.rank[MA.index_of(H)]));
  }
}

TEST(BurnsideMackey, ConjugationPermutesClassesOfNormalizedSubgroup) {
  auto S3 = catalogue::symmetric(3);
  auto M = burnside_mackey(S3);
  const auto G = whole_group(S3);
  for (Element g = 0; g < 6; ++g) {
    const auto& c = M.conjugation(g, G);
    EXPECT_EQ(c, IntMatrix::identity(4));
  }
  // Normalizing elements act on each Burn(H) by permuting the orbit basis.
  auto D4 = catalogue::dihedral(4);
  auto MD = burnside_mackey(D4);
  for (const auto& H : MD.subgroups)
    for (Element g : normalizer(H).elements) {
      const auto& c = MD.conjugation(g, H);
      for (std::size_t j = 0; j < c.cols(); ++j) {
        auto col = column(c, j);
        EXPECT_EQ(std::count(col.begin(), col.end(), 1), 1);
        EXPECT_EQ(std::count(col.begin(), col.end(), 0), static_cast<long>(col.size()) - 1);
      }
    }
}

TEST(BurnsideMackey, SpanRouteMatchesDirectRoute) {
  for (const auto& name : axiom_groups()) {
    auto G = catalogue::by_name(name);
    auto a = burnside_mackey(G), b = burnside_mackey_direct(G);
    EXPECT_EQ(a.res, b.res) << name;
    EXPECT_EQ(a.tr, b.tr) << name;
    EXPECT_EQ(a.conj, b.conj) << name;
  }
}

TEST(DoubleCoset, AllClassPairs) {
  for (const auto& name : axiom_groups()) {
    auto G = catalogue::by_name(name);
    auto M = burnside_mackey(G);
    const auto reps = subgroup_classes(G).representatives;
    int passed = 0;
    for (const auto& K : reps)
      for (const auto& H : reps) passed += verify_double_coset(M, K, H).pass;
    EXPECT_EQ(passed, static_cast<int>(reps.size() * reps.size())) << name;
  }
}

TEST(DoubleCoset, EveryPairOfSubgroupsInS3) {
  auto S3 = catalogue::symmetric(3);
  auto M = burnside_mackey(S3);
  for (const auto& K : M.subgroups)
    for (const auto& H : M.subgroups) EXPECT_TRUE(verify_double_coset(M, K, H).pass);
}

TEST(Axioms, HoldForBurnsideFunctor) {
  for (const auto& name : axiom_groups()) {
    auto M = burnside_mackey(catalogue::by_name(name));
    auto checks = verify_mackey_axioms(M);
    EXPECT_EQ(checks.size(), 6u);
    for (const auto& c : checks) EXPECT_TRUE(c.pass) << name << ": " << c.name << " " << c.witness;
  }
}

TEST(Axioms, CorruptedTransferIsCaught) {
  auto G = catalogue::symmetric(3);
  auto M = burnside_mackey(G);
  const int top = M.index_of(whole_group(G));
  const int bottom = M.index_of(trivial_subgroup(G));
  M.tr.at({top, bottom})(0, 0) += 1;
  bool any_fail = false;
  for (const auto& c : verify_mackey_axioms(M)) any_fail |= !c.pass;
  EXPECT_TRUE(any_fail);
  auto rep = verify_double_coset(M, trivial_subgroup(G), trivial_subgroup(G));
  EXPECT_FALSE(rep.pass);
  EXPECT_NE(rep.lhs, rep.rhs);
}

TEST(Axioms, CorruptedConjugationIsCaught) {
  auto G = catalogue::cyclic(4);
  auto M = burnside_mackey(G);
  M.conj[1][M.index_of(whole_group(G))](0, 0) = 2;
  bool any_fail = false;
  for (const auto& c : verify_mackey_axioms(M)) any_fail |= !c.pass;
  EXPECT_TRUE(any_fail);
}

TEST(ChiTransport, IdentitySpan) {
  auto D4 = catalogue::dihedral(4);
  auto data = burnside_mackey(D4);
  Rng rng(3);
  for (const auto& H : all_subgroups(D4)) {
    auto M = random_labeled_complex(H, rng);
    auto rep = sk_transport(data, identity_span(M.base), M);
    EXPECT_TRUE(rep.agrees);
    ASSERT_EQ(rep.before.size(), rep.after.size());
    for (std::size_t i = 0; i < rep.before.size(); ++i) EXPECT_EQ(rep.before[i].chi, rep.after[i].chi);
  }
}

TEST(ChiTransport, RestrictingFlippedCircleToTrivialSubgroup) {
  auto C2 = catalogue::cyclic(2);
  auto data = burnside_mackey(C2);
  auto M = over_point(from_orbits(C2, {{1, 1}, {0}}));
  auto rep = sk_transport(data, restriction_span(whole_group(C2), trivial_subgroup(C2)), M);
  EXPECT_TRUE(rep.agrees);
  ASSERT_EQ(rep.after.size(), 1u);
  EXPECT_EQ(rep.after[0].chi.coords(), std::vector<std::int64_t>{0});
  ASSERT_EQ(rep.before.size(), 1u);
  EXPECT_EQ(rep.before[0].chi.coords(), (std::vector<std::int64_t>{-1, 2}));
}

TEST(ChiTransport, TransferringAPoint) {
  auto C2 = catalogue::cyclic(2);
  auto data = burnside_mackey(C2);
  auto e = trivial_subgroup(C2);
  auto point = GCWComplex(subgroup_as_group(e), {GSet::point(subgroup_as_group(e))});
  auto M = induce_labeled(e, point);
  auto rep = sk_transport(data, transfer_span(e, whole_group(C2)), M);
  EXPECT_TRUE(rep.agrees);
  ASSERT_EQ(rep.after.size(), 1u);
  EXPECT_EQ(rep.after[0].chi.coords(), (std::vector<std::int64_t>{1, 0}));
}

TEST(ChiTransport, StructuralSpansOnSmallGroups) {
  Rng rng(101);
  for (const auto& [name, G] : catalogue::groups_up_to_order_12()) {
    auto data = burnside_mackey(G);
    const auto subs = all_subgroups(G);
    for (const auto& H : subs)
      for (const auto& K : subs) {
        if (!K.is_subset_of(H)) continue;
        auto MH = random_labeled_complex(H, rng, 2, 4);
        EXPECT_TRUE(sk_transport(data, restriction_span(H, K), MH).agrees) << name;
        auto MK = random_labeled_complex(K, rng, 2, 4);
        EXPECT_TRUE(sk_transport(data, transfer_span(K, H), MK).agrees) << name;
      }
    for (const auto& H : subgroup_classes(G).representatives) {
      auto MH = random_labeled_complex(H, rng, 2, 4);
      for (Element g = 0; g < G->order(); ++g)
        EXPECT_TRUE(sk_transport(data, conjugation_span(H, g), MH).agrees) << name;
    }
  }
}

TEST(ChiTransport, RandomSpans) {
  Rng rng(55);
  for (const auto& name : axiom_groups()) {
    auto G = catalogue::by_name(name);
    auto data = burnside_mackey(G);
    for (int trial = 0; trial < 15; ++trial) {
      auto H = random_subgroup(G, rng);
      auto M = random_labeled_complex(H, rng, 2, 4);
      auto Y = random_gset(G, rng, 3);
      auto s = random_span(M.base, Y, rng, 3);
      EXPECT_TRUE(sk_transport(data, s, M).agrees) << name;
    }
  }
}

TEST(ChiTransport, Functorial) {
  Rng rng(66);
  for (const std::string name : {"S3", "C4", "D4"}) {
    auto G = catalogue::by_name(name);
    auto data = burnside_mackey(G);
    for (int trial = 0; trial < 10; ++trial) {
      auto H = random_subgroup(G, rng);
      auto M = random_labeled_complex(H, rng, 2, 3);
      auto Y = random_gset(G, rng, 2), Z = random_gset(G, rng, 2);
      auto s = random_span(M.base, Y, rng, 2, 8), t = random_span(Y, Z, rng, 2, 8);
      auto step = sk_transport(data, s, M);
      auto moved = transport(M, s);
      auto second = sk_transport(data, t, moved);
      auto direct = sk_transport(data, compose_span_diagrams(s, t), M);
      EXPECT_TRUE(step.agrees && second.agrees && direct.agrees) << name;
      ASSERT_EQ(second.after.size(), direct.after.size());
      for (std::size_t i = 0; i < direct.after.size(); ++i) EXPECT_EQ(second.after[i].chi, direct.after[i].chi);
    }
  }
}

TEST(FiberChis, OnePerBaseOrbit) {
  auto S3 = catalogue::symmetric(3);
  Rng rng(4);
  auto base = disjoint_union(coset_gset(class_representative(S3, 1)), GSet::point(S3));
  auto cells = disjoint_union(base, base);
  LabeledGCW M(GCWComplex(S3, {cells}), base,
               {GMap(cells, base, {0, 1, 2, 3, 0, 1, 2, 3})});
  auto chis = fiber_chis(M);
  ASSERT_EQ(chis.size(), 2u);
  EXPECT_EQ(chis[0].base_point, 0);
  EXPECT_EQ(chis[1].base_point, 3);
  EXPECT_EQ(chis[0].chi.group()->order(), 2);
  EXPECT_EQ(chis[0].chi.coords(), (std::vector<std::int64_t>{0, 2}));
  EXPECT_EQ(chis[1].chi, 2 * BurnsideElement::one(S3));
}
