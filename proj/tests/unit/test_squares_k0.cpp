#include <gtest/gtest.h>

#include "gsk/catalogue.hpp"
#include "gsk/error.hpp"
#include "gsk/gcw.hpp"
#include "gsk/io.hpp"
#include "gsk/random.hpp"
#include "gsk/squares_k0.hpp"
#include "oracles.hpp"

using namespace gsk;

namespace {

const io::fs::path kFixtures = GSK_FIXTURE_DIR;

SquaresPresentation fixture(const std::string& name) { return io::parse_presentation(io::load_json(kFixtures / name)); }

SquaresPresentation make(std::vector<std::string> objects, std::vector<std::array<std::string, 4>> squares) {
  SquaresPresentation P;
  P.objects = std::move(objects);
  P.basepoint = P.objects.front();
  P.squares = std::move(squares);
  return P;
}

std::vector<std::vector<mpz_class>> relation_rows(const SquaresPresentation& P) {
  const std::size_t n = P.objects.size();
  std::vector<std::vector<mpz_class>> rows;
  for (const auto& sq : P.squares) {
    std::vector<mpz_class> r(n, 0);
    r[P.index_of(sq[0])] += 1;
    r[P.index_of(sq[3])] += 1;
    r[P.index_of(sq[1])] -= 1;
    r[P.index_of(sq[2])] -= 1;
    rows.push_back(r);
  }
  std::vector<mpz_class> base(n, 0);
  base[P.index_of(P.basepoint)] = 1;
  rows.push_back(base);
  return rows;
}

bool oracle_equal(const SquaresPresentation& P, const std::string& a, const std::string& b) {
  std::vector<mpz_class> v(P.objects.size(), 0);
  v[P.index_of(a)] += 1;
  v[P.index_of(b)] -= 1;
  return oracle::in_row_space(relation_rows(P), v);
}

std::vector<std::int64_t> chi_marks(const GCWComplex& X) { return marks(euler_char(X)); }

}  // namespace

TEST(K0, CoproductToy) {
  auto P = fixture("coproduct_toy.json");
  auto K = present_k0(P);
  EXPECT_EQ(K.rank, 2);
  EXPECT_TRUE(K.torsion.empty());
  EXPECT_EQ(describe_group(K), "Z^2");
  const auto &a = K.class_of("A"), &b = K.class_of("B"), &ab = K.class_of("AB");
  for (std::size_t i = 0; i < ab.size(); ++i) EXPECT_EQ(ab[i], a[i] + b[i]);
  EXPECT_FALSE(classes_equal(K, "A", "B"));
  for (const auto& x : K.class_of("O")) EXPECT_EQ(x, 0);
}

TEST(K0, DiffeomorphismSquare) {
  auto K = present_k0(make({"O", "M", "M2"}, {{"O", "M", "O", "M2"}}));
  EXPECT_TRUE(classes_equal(K, "M", "M2"));
  EXPECT_EQ(K.rank, 1);
}

TEST(K0, VacuousSquare) {
  auto K = present_k0(make({"O", "P"}, {{"P", "P", "P", "P"}}));
  EXPECT_EQ(K.rank, 1);
  EXPECT_TRUE(K.torsion.empty());
  EXPECT_EQ(K.class_of("P"), std::vector<BigInt>{1});
  EXPECT_EQ(describe_group(K), "Z");
}

TEST(K0, TorsionAppears) {
  // [O] + [P] = [P] + ... : (O, P, P, Q) forces [Q] = 2[P]; (O, Q, O, O) forces [Q] = 0.
  auto K = present_k0(make({"O", "P", "Q"}, {{"O", "P", "P", "Q"}, {"O", "Q", "O", "O"}}));
  EXPECT_EQ(K.rank, 0);
  EXPECT_EQ(K.torsion, std::vector<BigInt>{2});
  EXPECT_EQ(describe_group(K), "Z/2");
  EXPECT_EQ(K.class_of("P"), std::vector<BigInt>{1});
  EXPECT_TRUE(classes_equal(K, "Q", "O"));
  EXPECT_EQ(describe_group(present_k0(make({"O"}, {}))), "0");
}

TEST(K0, MixedTorsionAndFree) {
  auto K = present_k0(make({"O", "P", "Q", "R"}, {{"O", "P", "P", "Q"}, {"O", "Q", "O", "O"}}));
  EXPECT_EQ(describe_group(K), "Z/2 + Z");
}

TEST(K0, CircleFragment) {
  auto P = fixture("c2_dim1.json");
  auto K = present_k0(P);
  EXPECT_FALSE(classes_equal(K, "S1_triv", "S1_flip"));
  EXPECT_TRUE(classes_equal(K, "S1_triv", "O"));
  auto inv = validate_invariant(P, io::parse_assignment(io::load_json(kFixtures / "c2_dim1_fixed_chi.json")));
  EXPECT_TRUE(inv.pass);
}

TEST(K0, SphereTorusFragment) {
  auto P = fixture("surfaces_c2.json");
  auto K = present_k0(P);
  EXPECT_TRUE(classes_equal(K, "X1", "X2"));
  EXPECT_TRUE(oracle_equal(P, "X1", "X2"));
  EXPECT_FALSE(classes_equal(K, "S2_antip", "T2_flip"));
  auto inv = validate_invariant(P, io::parse_assignment(io::load_json(kFixtures / "surfaces_c2_fixed_chi.json")));
  EXPECT_TRUE(inv.pass);
  EXPECT_TRUE(inv.violations.empty());
}

TEST(K0, UnknownObjects) {
  auto P = make({"O", "A"}, {{"O", "A", "A", "Z"}});
  EXPECT_THROW(present_k0(P), UnknownObject);
  auto K = present_k0(make({"O", "A"}, {}));
  EXPECT_THROW(classes_equal(K, "A", "nope"), UnknownObject);
  auto Q = make({"O", "A", "A"}, {});
  EXPECT_THROW(present_k0(Q), InvalidArgument);
  SquaresPresentation R = make({"A"}, {});
  R.basepoint = "O";
  EXPECT_THROW(present_k0(R), InvalidArgument);
}

TEST(K0, RandomPresentationsMatchOracle) {
  Rng rng(2718);
  for (int trial = 0; trial < 300; ++trial) {
    auto P = random_presentation(rng, 10, 15);
    auto K = present_k0(P);
    const auto factors = oracle::invariant_factors(relation_rows(P));
    int nonzero = 0;
    std::vector<BigInt> torsion;
    for (const auto& d : factors) {
      if (d != 0) ++nonzero;
      if (d > 1) torsion.push_back(d);
    }
    EXPECT_EQ(K.rank, static_cast<int>(P.objects.size()) - nonzero);
    EXPECT_EQ(K.torsion, torsion);
    for (std::size_t t = 0; t < K.torsion.size(); ++t)
      for (const auto& c : K.classes) {
        EXPECT_GE(c[t], 0);
        EXPECT_LT(c[t], K.torsion[t]);
      }
    for (const auto& a : P.objects)
      for (const auto& b : P.objects) EXPECT_EQ(classes_equal(K, a, b), oracle_equal(P, a, b));
  }
}

TEST(K0, RelationsVanishInCanonicalCoordinates) {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    auto P = random_presentation(rng, 8, 10);
    auto K = present_k0(P);
    const std::size_t width = K.torsion.size() + K.rank;
    for (const auto& sq : P.squares) {
      for (std::size_t i = 0; i < width; ++i) {
        BigInt v = K.class_of(sq[0])[i] + K.class_of(sq[3])[i] - K.class_of(sq[1])[i] - K.class_of(sq[2])[i];
        if (i < K.torsion.size()) {
          mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), K.torsion[i].get_mpz_t());
        }
        EXPECT_EQ(v, 0);
      }
    }
  }
}

TEST(K0, EqualityIsAnEquivalenceRelation) {
  Rng rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    auto P = random_presentation(rng, 7, 8);
    auto K = present_k0(P);
    for (const auto& a : P.objects) {
      EXPECT_TRUE(classes_equal(K, a, a));
      for (const auto& b : P.objects) {
        EXPECT_EQ(classes_equal(K, a, b), classes_equal(K, b, a));
        for (const auto& c : P.objects)
          if (classes_equal(K, a, b) && classes_equal(K, b, c)) EXPECT_TRUE(classes_equal(K, a, c));
      }
    }
  }
}

TEST(K0, RedundantSquaresChangeNothing) {
  Rng rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    auto P = random_presentation(rng, 8, 10);
    auto Q = P;
    if (!P.squares.empty()) Q.squares.push_back(P.squares[uniform_int(rng, 0, static_cast<int>(P.squares.size()) - 1)]);
    const auto& a = P.objects[uniform_int(rng, 0, static_cast<int>(P.objects.size()) - 1)];
    const auto& b = P.objects[uniform_int(rng, 0, static_cast<int>(P.objects.size()) - 1)];
    Q.squares.push_back({a, a, b, b});
    Q.squares.push_back({P.basepoint, a, P.basepoint, a});
    auto KP = present_k0(P), KQ = present_k0(Q);
    EXPECT_EQ(KP.rank, KQ.rank);
    EXPECT_EQ(KP.torsion, KQ.torsion);
    for (const auto& x : P.objects)
      for (const auto& y : P.objects) EXPECT_EQ(classes_equal(KP, x, y), classes_equal(KQ, x, y));
  }
}

TEST(Invariant, GluedComplexesRespectEveryCutSquare) {
  Rng rng(34);
  for (const std::string name : {"C2", "C3", "S3", "D4"}) {
    auto G = catalogue::by_name(name);
    for (int trial = 0; trial < 20; ++trial) {
      auto A = random_complex(G, rng, 2, 5), B = random_complex(G, rng, 2, 5), C = random_complex(G, rng, 2, 5);
      auto X = disjoint_union(A, C), Y = disjoint_union(C, B);
      if (X.levels() != Y.levels()) continue;
      CellIdentification id;
      id.pairs.resize(X.levels());
      for (std::size_t k = 0; k < C.levels(); ++k) {
        const int offset = k < A.levels() ? A.cells(k).size() : 0;
        for (int c = 0; c < C.cells(k).size(); ++c) id.pairs[k].push_back({offset + c, c});
      }
      auto U = union_with_shared_subcomplex(X, Y, id);
      auto I = shared_subcomplex(X, Y, id);
      auto P = make({"O", "I", "X", "Y", "U"}, {{"I", "X", "Y", "U"}});
      std::map<std::string, std::vector<std::int64_t>> chi{
          {"O", chi_marks(GCWComplex(G, {GSet::empty(G)}))},
          {"I", chi_marks(I)},
          {"X", chi_marks(X)},
          {"Y", chi_marks(Y)},
          {"U", chi_marks(U)}};
      EXPECT_TRUE(validate_invariant(P, chi).pass) << name;
    }
  }
}

TEST(Invariant, Examples) {
  auto P = fixture("coproduct_toy.json");
  std::map<std::string, std::vector<std::int64_t>> ones{{"O", {0}}, {"A", {1}}, {"B", {1}}, {"AB", {1}}};
  auto rep = validate_invariant(P, ones);
  EXPECT_FALSE(rep.pass);
  EXPECT_EQ(rep.violations.size(), 2u);
  std::map<std::string, std::vector<std::int64_t>> zeros{{"O", {0}}, {"A", {0}}, {"B", {0}}, {"AB", {0}}};
  EXPECT_TRUE(validate_invariant(P, zeros).pass);
  std::map<std::string, std::vector<std::int64_t>> based{{"O", {1}}, {"A", {0}}, {"B", {0}}, {"AB", {0}}};
  EXPECT_FALSE(validate_invariant(P, based).pass);
  std::map<std::string, std::vector<std::int64_t>> partial{{"O", {0}}, {"A", {0}}};
  EXPECT_THROW(validate_invariant(P, partial), InvalidArgument);
  std::map<std::string, std::vector<std::int64_t>> ragged{{"O", {0}}, {"A", {0, 1}}, {"B", {0}}, {"AB", {0}}};
  EXPECT_THROW(validate_invariant(P, ragged), InvalidArgument);
}

TEST(Star, Examples) {
  auto toy = check_star(fixture("coproduct_toy.json"));
  EXPECT_TRUE(toy.missing_squares.empty());
  EXPECT_TRUE(toy.uncovered.empty());

  auto P = fixture("coproduct_toy.json");
  P.squares.pop_back();
  auto broken = check_star(P);
  ASSERT_EQ(broken.uncovered.size(), 1u);
  EXPECT_EQ(broken.uncovered[0], (std::pair<std::string, std::string>{"A", "B"}));
  EXPECT_EQ(broken.missing_squares, std::vector<std::string>{"(O,B,A,AB)"});
  EXPECT_FALSE(broken.star_certified());

  auto only_base = check_star(make({"O"}, {}));
  EXPECT_TRUE(only_base.star_certified());
}

TEST(Star, UnwitnessedPairsAreListed) {
  auto toy = check_star(fixture("coproduct_toy.json"));
  // (A, A), (B, B), (AB, AB), (A, AB) and (B, AB) have no coproduct squares in the toy.
  EXPECT_EQ(toy.unwitnessed.size(), 5u);
  EXPECT_FALSE(toy.star_certified());

  auto P = make({"O", "A", "AA"}, {{"O", "A", "A", "AA"}});
  P.coproducts[{"A", "A"}] = "AA";
  auto rep = check_star(P);
  EXPECT_TRUE(rep.uncovered.empty());
  ASSERT_EQ(rep.unwitnessed.size(), 2u);
}
