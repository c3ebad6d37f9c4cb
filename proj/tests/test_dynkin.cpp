#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "kacscope/dynkin.hpp"
#include "kacscope/error.hpp"

using namespace kacscope;
using namespace kacscope::dynkin;

TEST(RootCount, Examples) {
  EXPECT_EQ(root_count({Family::A, 2}), 6);
  EXPECT_EQ(root_count({Family::D, 8}), 112);
  EXPECT_EQ(root_count({Family::B, 1}), 2);
  EXPECT_EQ(root_count({Family::G2, 2}), 12);
  EXPECT_EQ(root_count({Family::F4, 4}), 48);
  EXPECT_EQ(root_count({Family::E6, 6}), 72);
  EXPECT_EQ(root_count({Family::E7, 7}), 126);
  EXPECT_EQ(root_count({Family::E8, 8}), 240);
}

TEST(RootCount, RejectsInvalidRank) {
  EXPECT_THROW(root_count({Family::D, 1}), InvalidInput);
  EXPECT_THROW(root_count({Family::E6, 5}), InvalidInput);
  EXPECT_THROW(root_count({Family::A, 0}), InvalidInput);
}

TEST(RootCount, EqualsRankTimesCoxeterNumber) {
  for (auto fam : {Family::A, Family::B, Family::C, Family::D}) {
    for (int n = fam == Family::D ? 2 : 1; n <= 16; ++n) {
      const FiniteType t{fam, n};
      EXPECT_EQ(root_count(t) % 2, 0);
      EXPECT_EQ(root_count(t), n * coxeter_number(t)) << to_string(t);
    }
  }
  for (auto t : {FiniteType{Family::E6, 6}, FiniteType{Family::E7, 7}, FiniteType{Family::E8, 8},
                 FiniteType{Family::F4, 4}, FiniteType{Family::G2, 2}})
    EXPECT_EQ(root_count(t), t.rank * coxeter_number(t));
}

TEST(RootSystemProduct, EmptyAndSums) {
  RootSystemProduct empty;
  EXPECT_EQ(empty.root_count(), 0);
  EXPECT_EQ(empty.to_string(), "empty");
  EXPECT_EQ(RootSystemProduct::parse("B2+2A1").root_count(), 12);
  EXPECT_EQ(RootSystemProduct::parse("3A2").root_count(), 18);
  EXPECT_EQ(RootSystemProduct::parse("empty"), empty);
}

TEST(RootSystemProduct, LowRankCoincidencesFold) {
  EXPECT_EQ(RootSystemProduct::parse("B1").to_string(), "A1");
  EXPECT_EQ(RootSystemProduct::parse("C1").to_string(), "A1");
  EXPECT_EQ(RootSystemProduct::parse("D2").to_string(), "2A1");
  EXPECT_EQ(RootSystemProduct::parse("D3").to_string(), "A3");
  EXPECT_EQ(RootSystemProduct::parse("C2"), RootSystemProduct::parse("B2"));
}

TEST(RootSystemProduct, ParseRoundTrip) {
  for (const char* s : {"A1", "2A1+A2", "A1+A3+D4", "E8", "B3+C4", "3A2"}) {
    const auto p = RootSystemProduct::parse(s);
    EXPECT_EQ(RootSystemProduct::parse(p.to_string()), p) << s;
  }
  EXPECT_THROW(RootSystemProduct::parse("Q3"), InvalidInput);
  EXPECT_THROW(RootSystemProduct::parse("A"), InvalidInput);
}

TEST(RootSystemProduct, RankAndSpread) {
  const auto p = RootSystemProduct::parse("A1+A4+B2");
  EXPECT_EQ(p.rank(), 7);
  EXPECT_EQ(p.rank_spread(), 3);
}

namespace {

std::vector<Edge> chain_edges(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return e;
}

}  // namespace

TEST(Classify, SingleNode) {
  const std::vector<int> nodes{0};
  EXPECT_EQ(classify_subgraph(nodes, {}).to_string(), "A1");
}

TEST(Classify, TerminalDoubleEdge) {
  const std::vector<int> nodes{0, 1, 2};
  std::vector<Edge> e{{0, 1}, {1, 2, 2, 2}};
  const auto p = classify_subgraph(nodes, e);
  EXPECT_EQ(p.root_count(), 18);
  EXPECT_EQ(p.rank(), 3);
}

TEST(Classify, StarIsD4) {
  const std::vector<int> nodes{0, 1, 2, 3};
  std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}};
  EXPECT_EQ(classify_subgraph(nodes, e).to_string(), "D4");
}

TEST(Classify, ExceptionalShapes) {
  // Branch at node 0 with arms of length 1, 2, k.
  auto branched = [](int k) {
    std::vector<Edge> e{{0, 1}, {0, 2}, {2, 3}};
    int prev = 0;
    for (int i = 0; i < k; ++i) {
      e.push_back({prev, 4 + i});
      prev = 4 + i;
    }
    std::vector<int> nodes(4 + k);
    std::iota(nodes.begin(), nodes.end(), 0);
    return classify_subgraph(nodes, e).to_string();
  };
  EXPECT_EQ(branched(2), "E6");
  EXPECT_EQ(branched(3), "E7");
  EXPECT_EQ(branched(4), "E8");

  const std::vector<int> f4{0, 1, 2, 3};
  std::vector<Edge> fe{{0, 1}, {1, 2, 2, 2}, {2, 3}};
  EXPECT_EQ(classify_subgraph(f4, fe).to_string(), "F4");

  const std::vector<int> g2{0, 1};
  std::vector<Edge> ge{{0, 1, 3, 1}};
  EXPECT_EQ(classify_subgraph(g2, ge).to_string(), "G2");
}

TEST(Classify, IgnoresEdgesLeavingTheSubset) {
  const std::vector<int> nodes{0, 2};
  const auto e = chain_edges(3);
  EXPECT_EQ(classify_subgraph(nodes, e).to_string(), "2A1");
}

TEST(Classify, RejectsNonFiniteShapes) {
  const std::vector<int> cycle{0, 1, 2};
  std::vector<Edge> ce{{0, 1}, {1, 2}, {2, 0}};
  EXPECT_THROW(classify_subgraph(cycle, ce), ClassificationError);

  const std::vector<int> two_doubles{0, 1, 2};
  std::vector<Edge> de{{0, 1, 2, 0}, {1, 2, 2, 2}};
  EXPECT_THROW(classify_subgraph(two_doubles, de), ClassificationError);

  const std::vector<int> e9(9, 0);
  std::vector<int> nodes(9);
  std::iota(nodes.begin(), nodes.end(), 0);
  std::vector<Edge> ee{{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}};
  EXPECT_THROW(classify_subgraph(nodes, ee), ClassificationError);
}

TEST(Classify, InvariantUnderRelabeling) {
  // D6 + B3 + A2 on 11 nodes, relabeled by random permutations.
  std::vector<Edge> base{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5},
                         {6, 7}, {7, 8, 2, 8}, {9, 10}};
  std::vector<int> nodes(11);
  std::iota(nodes.begin(), nodes.end(), 0);
  const auto expected = classify_subgraph(nodes, base);
  EXPECT_EQ(expected.to_string(), "A2+B3+D6");
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> p = nodes;
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<Edge> e;
    for (const auto& x : base)
      e.push_back({p[x.u], p[x.v], x.multiplicity, x.arrow_to < 0 ? -1 : p[x.arrow_to]});
    std::vector<int> relabeled = p;
    std::sort(relabeled.begin(), relabeled.end());
    EXPECT_EQ(classify_subgraph(relabeled, e), expected);
  }
}

TEST(Classify, AdditiveOverDisjointUnions) {
  for (int a = 1; a <= 6; ++a) {
    for (int b = 1; b <= 6; ++b) {
      std::vector<Edge> e = chain_edges(a);
      for (int i = 0; i + 1 < b; ++i) e.push_back({a + i, a + i + 1});
      std::vector<int> left(a), right(b), both(a + b);
      std::iota(left.begin(), left.end(), 0);
      std::iota(right.begin(), right.end(), a);
      std::iota(both.begin(), both.end(), 0);
      EXPECT_EQ(classify_subgraph(both, e).root_count(),
                classify_subgraph(left, e).root_count() + classify_subgraph(right, e).root_count());
    }
  }
}
