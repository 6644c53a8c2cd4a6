#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

#include "gsk/catalogue.hpp"
#include "gsk/error.hpp"
#include "gsk/group.hpp"
#include "oracles.hpp"

using namespace gsk;

namespace {

oracle::Mask mask_of(const Subgroup& H) {
  oracle::Mask m = 0;
  for (Element h : H.elements) m |= oracle::Mask(1) << h;
  return m;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

TEST(FiniteGroup, TrivialAndCyclicTables) {
  auto one = FiniteGroup::from_table({{0}});
  EXPECT_EQ(one->order(), 1);
  auto c2 = FiniteGroup::from_table({{0, 1}, {1, 0}});
  EXPECT_EQ(c2->order(), 2);
  EXPECT_EQ(c2->identity(), 0);
  EXPECT_TRUE(c2->is_abelian());
}

TEST(FiniteGroup, IdentityNeedNotBeElementZero) {
  auto g = FiniteGroup::from_table({{1, 0}, {0, 1}});
  EXPECT_EQ(g->identity(), 1);
}

TEST(FiniteGroup, SymmetricGroupFromCompositionTable) {
  auto perms = all_permutations(3);
  std::vector<std::vector<Element>> table(6, std::vector<Element>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      table[a][b] = static_cast<Element>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  auto S3 = FiniteGroup::from_table(table);
  EXPECT_EQ(S3->order(), 6);
  EXPECT_FALSE(S3->is_abelian());
}

TEST(FiniteGroup, RejectsNonGroups) {
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {0, 1}}), NotAGroup);
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1, 1}}), NotAGroup);
  EXPECT_THROW(FiniteGroup::from_table({{0, 1, 2}, {1, 0, 2}}), NotAGroup);
  EXPECT_THROW(FiniteGroup::from_table({{0, 3}, {1, 0}}), NotAGroup);
  // Latin square without associativity.
  EXPECT_THROW(FiniteGroup::from_table({{0, 1, 2, 3, 4},
                                        {1, 0, 3, 4, 2},
                                        {2, 4, 0, 1, 3},
                                        {3, 2, 4, 0, 1},
                                        {4, 3, 1, 2, 0}}),
               NotAGroup);
}

TEST(FiniteGroup, PermutationClosure) {
  EXPECT_EQ(FiniteGroup::from_permutations(2, {{1, 0}})->order(), 2);
  EXPECT_EQ(FiniteGroup::from_permutations(3, {{1, 0, 2}, {1, 2, 0}})->order(), 6);
  auto c4 = FiniteGroup::from_permutations(4, {{1, 2, 3, 0}});
  EXPECT_EQ(c4->order(), 4);
  EXPECT_TRUE(c4->is_abelian());
  EXPECT_EQ(c4->identity(), 0);
}

TEST(FiniteGroup, PermutationClosureRespectsCap) {
  EXPECT_THROW(FiniteGroup::from_permutations(6, {{1, 0, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 0}}, 100), GroupTooLarge);
  EXPECT_EQ(FiniteGroup::from_permutations(5, {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}}, 120)->order(), 120);
  EXPECT_THROW(FiniteGroup::from_permutations(2, {{0, 0}}), InvalidArgument);
}

TEST(FiniteGroup, CapFromEnvironment) {
  setenv("GSK_GROUP_CAP", "10", 1);
  EXPECT_EQ(group_cap(), 10u);
  EXPECT_THROW(FiniteGroup::from_permutations(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}), GroupTooLarge);
  unsetenv("GSK_GROUP_CAP");
  EXPECT_EQ(group_cap(), 512u);
}

TEST(Catalogue, OrdersUpTo12) {
  auto groups = catalogue::groups_up_to_order_12();
  EXPECT_EQ(groups.size(), 24u);
  std::multiset<int> orders;
  for (const auto& [name, G] : groups) orders.insert(G->order());
  // Number of groups of order 1..12.
  const int expected[] = {1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5};
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(static_cast<int>(orders.count(n)), expected[n - 1]) << n;
}

TEST(Catalogue, NonIsomorphicWithinOrder) {
  // Subgroup-count and element-order profiles separate every pair of equal order.
  auto groups = catalogue::groups_up_to_order_12();
  std::set<std::pair<int, std::vector<int>>> profiles;
  for (const auto& [name, G] : groups) {
    std::vector<int> orders;
    for (Element g = 0; g < G->order(); ++g) orders.push_back(G->element_order(g));
    std::sort(orders.begin(), orders.end());
    orders.push_back(static_cast<int>(all_subgroups(G).size()));
    orders.push_back(G->is_abelian());
    EXPECT_TRUE(profiles.insert({G->order(), orders}).second) << name;
  }
}

TEST(Subgroups, MatchSubsetEnumeration) {
  for (const auto& [name, G] : catalogue::groups_up_to_order_12()) {
    std::set<oracle::Mask> ours;
    for (const auto& H : all_subgroups(G)) ours.insert(mask_of(H));
    const auto brute = oracle::subgroups_by_subsets(*G);
    EXPECT_EQ(ours, std::set<oracle::Mask>(brute.begin(), brute.end())) << name;
  }
}

TEST(Subgroups, SmallExamples) {
  EXPECT_EQ(all_subgroups(catalogue::cyclic(1)).size(), 1u);
  EXPECT_EQ(all_subgroups(catalogue::cyclic(2)).size(), 2u);
  auto S3 = catalogue::symmetric(3);
  auto subs = all_subgroups(S3);
  ASSERT_EQ(subs.size(), 6u);
  std::multiset<std::size_t> sizes;
  for (const auto& H : subs) sizes.insert(H.order());
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 2, 2, 2, 3, 6}));
}

TEST(Subgroups, ConjugacyClassesMatchBruteForce) {
  for (const auto& [name, G] : catalogue::groups_up_to_order_12()) {
    const auto table = subgroup_classes(G);
    const auto brute = oracle::conjugacy_classes(*G, oracle::subgroups_by_subsets(*G));
    ASSERT_EQ(table.size(), brute.size()) << name;
    std::multiset<std::size_t> ours, theirs;
    for (const auto& cls : table.classes) ours.insert(cls.size());
    for (const auto& cls : brute) theirs.insert(cls.size());
    EXPECT_EQ(ours, theirs) << name;
    for (std::size_t i = 0; i < table.size(); ++i)
      for (const auto& H : table.classes[i])
        EXPECT_TRUE(oracle::conjugate_masks(*G, mask_of(H), mask_of(table.representatives[i]))) << name;
  }
}

TEST(Subgroups, ClassCountsAndNames) {
  EXPECT_EQ(subgroup_classes(catalogue::cyclic(2)).size(), 2u);
  for (int p : {2, 3, 5, 7, 11}) EXPECT_EQ(subgroup_classes(catalogue::cyclic(p)).size(), 2u);
  auto t = subgroup_classes(catalogue::symmetric(3));
  EXPECT_EQ(t.names, (std::vector<std::string>{"e", "C2", "C3", "G"}));
  auto d4 = subgroup_classes(catalogue::dihedral(4));
  EXPECT_EQ(d4.size(), 8u);
}

TEST(Subgroups, ClassesOrderedBySize) {
  for (const auto& [name, G] : catalogue::groups_up_to_order_12()) {
    const auto t = subgroup_classes(G);
    for (std::size_t i = 1; i < t.size(); ++i)
      EXPECT_LE(t.representatives[i - 1].order(), t.representatives[i].order()) << name;
    EXPECT_EQ(t.representatives.front().order(), 1u);
    EXPECT_EQ(t.representatives.back().order(), static_cast<std::size_t>(G->order()));
  }
}

TEST(Subgroups, SubconjugacyMatchesBruteForce) {
  for (const auto& [name, G] : catalogue::groups_up_to_order_12()) {
    const auto t = subgroup_classes(G);
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j) {
        bool brute = false;
        const auto a = mask_of(t.representatives[i]);
        for (const auto& K : t.classes[j]) brute |= (a & mask_of(K)) == a;
        EXPECT_EQ(t.subconjugate(i, j), brute) << name << " " << i << " " << j;
      }
  }
}

TEST(Subgroups, TableOfMarksMatchesCosetCount) {
  for (const auto& [name, G] : catalogue::groups_up_to_order_12()) {
    const auto t = subgroup_classes(G);
    const auto& marks = G->lattice().marks;
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j)
        EXPECT_EQ(marks(i, j), oracle::mark(*G, mask_of(t.representatives[i]), mask_of(t.representatives[j])))
            << name << " " << i << " " << j;
  }
}

TEST(Normalizer, Examples) {
  auto S3 = catalogue::symmetric(3);
  auto t = subgroup_classes(S3);
  const Subgroup& C2 = t.representatives[1];
  const Subgroup& C3 = t.representatives[2];
  EXPECT_EQ(normalizer(whole_group(S3)), whole_group(S3));
  EXPECT_EQ(normalizer(C3), whole_group(S3));
  EXPECT_EQ(normalizer(C2), C2);
}

TEST(Normalizer, MatchesBruteForce) {
  for (const auto& [name, G] : catalogue::groups_up_to_order_12())
    for (const auto& H : all_subgroups(G)) {
      std::vector<Element> brute;
      for (Element g = 0; g < G->order(); ++g)
        if (conjugate(H, g) == H) brute.push_back(g);
      EXPECT_EQ(normalizer(H).elements, brute) << name;
    }
}

TEST(WeylGroup, Orders) {
  auto S3 = catalogue::symmetric(3);
  auto t = subgroup_classes(S3);
  EXPECT_EQ(weyl_group(whole_group(S3)).group->order(), 1);
  EXPECT_EQ(weyl_group(t.representatives[2]).group->order(), 2);
  auto C4 = catalogue::cyclic(4);
  auto c4 = subgroup_classes(C4);
  EXPECT_EQ(weyl_group(c4.representatives[1]).group->order(), 2);
}

TEST(WeylGroup, OrderEqualsDiagonalMark) {
  for (const auto& [name, G] : catalogue::groups_up_to_order_12()) {
    const auto t = subgroup_classes(G);
    for (std::size_t i = 0; i < t.size(); ++i)
      EXPECT_EQ(weyl_group(t.representatives[i]).group->order(), G->lattice().marks(i, i)) << name;
  }
}

TEST(WeylGroup, RepresentativesAreCosetMinima) {
  auto D4 = catalogue::dihedral(4);
  for (const auto& H : all_subgroups(D4)) {
    const auto Q = weyl_group(H);
    for (std::size_t q = 0; q < Q.representatives.size(); ++q) {
      const Element r = Q.representatives[q];
      for (Element h : H.elements) EXPECT_LE(r, D4->mul(r, h));
      if (q) EXPECT_LT(Q.representatives[q - 1], r);
    }
  }
}

TEST(Quotient, RejectsNonNormalKernel) {
  auto S3 = catalogue::symmetric(3);
  auto t = subgroup_classes(S3);
  EXPECT_THROW(quotient(whole_group(S3), t.representatives[1]), InvalidArgument);
}

TEST(DoubleCosets, Examples) {
  auto S3 = catalogue::symmetric(3);
  auto G = whole_group(S3);
  EXPECT_EQ(double_cosets(G, G).size(), 1u);
  auto C2 = catalogue::cyclic(2);
  auto e = trivial_subgroup(C2);
  EXPECT_EQ(double_cosets(e, e).size(), 2u);
  Subgroup t = subgroup_classes(S3).representatives[1];
  auto reps = double_cosets(t, t);
  ASSERT_EQ(reps.size(), 2u);
  std::multiset<std::size_t> sizes;
  for (Element g : reps) sizes.insert(double_coset(t, g, t).size());
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{2, 4}));
}

TEST(DoubleCosets, PartitionTheGroup) {
  for (const auto& [name, G] : catalogue::groups_up_to_order_12()) {
    auto subs = all_subgroups(G);
    for (const auto& K : subs)
      for (const auto& H : subs) {
        std::set<std::vector<Element>> brute;
        for (Element g = 0; g < G->order(); ++g) {
          std::set<Element> s;
          for (Element k : K.elements)
            for (Element h : H.elements) s.insert(G->mul(G->mul(k, g), h));
          brute.insert({s.begin(), s.end()});
        }
        std::size_t total = 0;
        auto reps = double_cosets(K, H);
        for (Element g : reps) {
          auto d = double_coset(K, g, H);
          EXPECT_EQ(d.front(), g);
          EXPECT_TRUE(brute.count(d));
          total += d.size();
        }
        EXPECT_EQ(reps.size(), brute.size()) << name;
        EXPECT_EQ(total, static_cast<std::size_t>(G->order())) << name;
      }
  }
}

TEST(SubgroupAsGroup, PreservesOrderAndTable) {
  auto D4 = catalogue::dihedral(4);
  for (const auto& H : all_subgroups(D4)) {
    auto Hg = subgroup_as_group(H);
    ASSERT_EQ(static_cast<std::size_t>(Hg->order()), H.order());
    for (int a = 0; a < Hg->order(); ++a)
      for (int b = 0; b < Hg->order(); ++b)
        EXPECT_EQ(H.elements[Hg->mul(a, b)], D4->mul(H.elements[a], H.elements[b]));
    EXPECT_EQ(subgroup_as_group(H).get(), Hg.get());
  }
}

TEST(Subgroup, MakeSubgroupValidates) {
  auto S3 = catalogue::symmetric(3);
  EXPECT_THROW(make_subgroup(S3, {1, 2}), InvalidArgument);
  EXPECT_NO_THROW(make_subgroup(S3, {S3->identity()}));
  EXPECT_EQ(generated_subgroup(S3, std::vector<Element>{}).order(), 1u);
}
