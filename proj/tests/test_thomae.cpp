#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "kacscope/error.hpp"
#include "kacscope/thomae.hpp"
#include "oracles.hpp"

using namespace kacscope;
using namespace kacscope::thomae;
using affine::build;
using dynkin::RootSystemProduct;

namespace {

std::vector<std::string> names(const std::vector<RootSystemProduct>& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(p.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> minima(const std::vector<StepRow>& rows) {
  std::vector<int> out;
  for (const auto& r : rows) out.push_back(r.minimum);
  return out;
}

std::vector<int> orders(const ScanResult& s) {
  std::vector<int> out;
  for (const auto& c : s.equality_classes) out.push_back(c.order);
  return out;
}

}  // namespace

TEST(FValue, Examples) {
  for (const char* spec : {"A3", "E8", "2A4", "3D4"}) EXPECT_EQ(f_value(build(spec), {}), 0);
  const auto f4 = build("F4");
  EXPECT_EQ(f_value(f4, NodeSet::of({0, 2, 3, 4})), 20 * 2 - 4 * 10);
  const auto e8 = build("E8");
  EXPECT_EQ(f_value(e8, e8.all() - NodeSet::single(1)), 0);
  EXPECT_EQ(112 * 2 - 8 * 28, 0);
  EXPECT_THROW(f_value(f4, f4.all()), InvalidInput);
}

TEST(FValue, MatchesReflectionClosureOracle) {
  for (const auto& id : affine::catalog(8)) {
    const auto d = build(id);
    const auto ledger = subset_ledger(d);
    ASSERT_EQ(ledger.size(), (std::size_t{1} << d.size()) - 1);
    for (const auto& r : ledger) {
      ASSERT_EQ(r.f, oracle::f_value(d, r.zero_set)) << d.spec() << " " << r.zero_set.to_string();
      ASSERT_EQ(r.upper + r.lower, d.label_sum());
    }
  }
}

TEST(CheckTheorem, Examples) {
  const auto e8 = build("E8");
  const auto p = check_theorem(kac::KacCoordinates(e8, std::vector<int>(9, 1)));
  EXPECT_EQ(p.order, 30);
  EXPECT_EQ(p.fixed_dim, 8);
  EXPECT_EQ(p.lhs, (Fraction{1, 30}));
  EXPECT_EQ(p.rhs, (Fraction{1, 30}));
  EXPECT_TRUE(p.equality);

  const auto g2 = check_theorem(kac::KacCoordinates(build("G2"), {0, 1, 0}));
  EXPECT_EQ(g2.order, 2);
  EXPECT_EQ(g2.fixed_dim, 6);
  EXPECT_TRUE(g2.equality);

  const auto f4 = check_theorem(kac::KacCoordinates(build("F4"), {0, 1, 0, 0, 0}));
  EXPECT_EQ(f4.order, 2);
  EXPECT_EQ(f4.fixed_dim, 24);
  EXPECT_EQ(f4.rhs, (Fraction{1, 2}));
  EXPECT_TRUE(f4.equality);

  const auto c2 = check_theorem(kac::KacCoordinates(build("C2"), {1, 2, 1}));
  EXPECT_EQ(c2.order, 6);
  EXPECT_EQ(c2.fixed_dim, 2);
  EXPECT_TRUE(c2.holds);
  EXPECT_FALSE(c2.equality);
}

TEST(Fraction, Reduces) {
  EXPECT_EQ(Fraction::reduced(24, 48), (Fraction{1, 2}));
  EXPECT_EQ(Fraction::reduced(8, 240), (Fraction{1, 30}));
}

TEST(EqualitySubsets, Examples) {
  const auto g2 = equality_subsets(build("G2"));
  EXPECT_EQ(orders(g2), (std::vector<int>{6, 3, 2}));
  std::vector<NodeSet> sets;
  for (const auto& c : g2.equality_classes) sets.push_back(c.zero_set);
  EXPECT_EQ(sets, (std::vector<NodeSet>{NodeSet{}, NodeSet::of({2}), NodeSet::of({0, 2})}));

  EXPECT_EQ(orders(equality_subsets(build("E7"))), (std::vector<int>{18, 14, 6, 2}));
  EXPECT_EQ(orders(equality_subsets(build("2E6"))), (std::vector<int>{18, 12, 6, 4, 2}));
  EXPECT_EQ(orders(equality_subsets(build("E8"))),
            (std::vector<int>{30, 24, 20, 15, 12, 10, 8, 6, 5, 4, 3, 2}));
}

TEST(EqualitySubsets, MinimumIsZeroEverywhere) {
  for (const auto& id : affine::catalog(12)) {
    const auto scan = equality_subsets(build(id));
    EXPECT_EQ(scan.min_f, 0) << affine::to_spec(id);
    EXPECT_FALSE(scan.equality_classes.empty());
  }
}

TEST(LemmaTwo, SubsetSignMatchesTheoremReport) {
  for (const auto& id : affine::catalog(7)) {
    const auto d = build(id);
    for (const auto& r : subset_ledger(d)) {
      const auto report = check_theorem(kac::from_zero_set(d, r.zero_set));
      ASSERT_EQ(report.holds, r.f >= 0);
      ASSERT_EQ(report.equality, r.f == 0) << d.spec() << " " << r.zero_set.to_string();
    }
  }
}

TEST(TheoremHolds, EveryClassUpToCoxeterNumber) {
  for (const auto& id : affine::catalog(6)) {
    const auto d = build(id);
    for (int m = 1; m <= d.coxeter_number(); ++m)
      for (const auto& k : kac::enumerate_classes(d, m)) {
        const auto r = check_theorem(k);
        ASSERT_TRUE(r.holds) << d.spec() << " " << kac::format_kac(k.values());
        if (r.equality) ASSERT_TRUE(r.holds);
      }
  }
}

TEST(TheoremHolds, StrictAboveCoxeterNumber) {
  std::mt19937 rng(3);
  for (const auto& id : affine::catalog(12)) {
    const auto d = build(id);
    const int h = d.coxeter_number();
    std::uniform_int_distribution<int> coord(0, 3);
    int checked = 0;
    while (checked < 100) {
      std::vector<int> s(d.size());
      for (auto& v : s) v = coord(rng);
      int g = 0;
      for (int v : s) g = std::gcd(g, v);
      if (g != 1) continue;
      const kac::KacCoordinates k(d, s);
      const int m = kac::order(k);
      if (m <= h || m > 3 * h) continue;
      const auto r = check_theorem(k);
      ASSERT_TRUE(r.holds);
      ASSERT_FALSE(r.equality) << d.spec() << " " << kac::format_kac(s);
      ++checked;
    }
  }
}

TEST(ExceptionalSmallTable, NineRowsWithProducts) {
  struct Row {
    const char* spec;
    std::vector<int> kac;
    int roots, upper, lower;
    bool equality;
  };
  const std::vector<Row> rows{
      {"F4", {1, 0, 0, 0, 0}, 48, 1, 11, false}, {"F4", {0, 1, 0, 0, 0}, 20, 2, 10, true},
      {"F4", {0, 0, 1, 0, 0}, 12, 3, 9, true},   {"F4", {1, 1, 0, 0, 0}, 18, 3, 9, false},
      {"2E6", {0, 0, 0, 1, 1}, 12, 3, 6, false}, {"2E6", {0, 0, 0, 1, 0}, 14, 2, 7, true},
      {"2E6", {0, 0, 0, 0, 1}, 32, 1, 8, true},  {"2E6", {1, 0, 0, 0, 1}, 18, 2, 7, false},
      {"2E6", {0, 1, 0, 0, 1}, 10, 3, 6, false}};
  for (const auto& row : rows) {
    const auto d = build(row.spec);
    const auto j = kac::zero_set(kac::KacCoordinates(d, row.kac));
    EXPECT_EQ(d.classify(j).root_count(), row.roots) << row.spec << kac::format_kac(row.kac);
    EXPECT_EQ(d.label_sum(d.all() - j), row.upper);
    EXPECT_EQ(d.label_sum(j), row.lower);
    EXPECT_EQ(f_value(d, j) == 0, row.equality);
    EXPECT_GE(f_value(d, j), 0);
  }
}

TEST(StepOne, MinimaMatchTables) {
  EXPECT_EQ(minima(step1_table(build("E6"), 2, 5)), (std::vector<int>{32, 18, 14, 10}));
  EXPECT_EQ(minima(step1_table(build("E7"), 2, 6)), (std::vector<int>{56, 36, 26, 20, 14}));
  EXPECT_EQ(minima(step1_table(build("E8"), 2, 7)), (std::vector<int>{112, 72, 52, 40, 32, 28}));
}

TEST(StepOne, AchieversAndWitnesses) {
  const auto e6 = step1_table(build("E6"), 2, 5);
  EXPECT_EQ(names(e6[0].achievers), (std::vector<std::string>{"A1+A5"}));
  EXPECT_EQ(names(e6[1].achievers), (std::vector<std::string>{"3A2"}));
  EXPECT_EQ(names(e6[2].achievers), (std::vector<std::string>{"A1+2A2", "A1+A3"}));
  EXPECT_EQ(names(e6[3].achievers), (std::vector<std::string>{"2A1+A2"}));
  EXPECT_FALSE(e6[1].witnesses.empty());
  EXPECT_TRUE(e6[0].witnesses.empty());

  const auto e7 = step1_table(build("E7"), 2, 6);
  EXPECT_EQ(names(e7[2].achievers), (std::vector<std::string>{"A1+2A3", "A2+A4"}));
  EXPECT_TRUE(e7[2].witnesses.empty());

  const auto e8 = step1_table(build("E8"), 2, 7);
  EXPECT_EQ(names(e8[0].achievers), (std::vector<std::string>{"D8"}));
  EXPECT_EQ(names(e8[3].achievers), (std::vector<std::string>{"2A4"}));
  EXPECT_EQ(240 / 5 - 8, 40);
  EXPECT_FALSE(e8[3].witnesses.empty());
  EXPECT_TRUE(e8[5].witnesses.empty());
}

TEST(StepTwo, E8MinimaAndWitnesses) {
  const auto e8 = build("E8");
  const auto rows = step2_table(e8, 10, 22);
  EXPECT_EQ(minima(rows), (std::vector<int>{14, 12, 12, 10, 10, 9, 8}));
  EXPECT_EQ(names(rows[0].achievers), (std::vector<std::string>{"2A1+A2", "5A1"}));
  EXPECT_TRUE(rows[0].witnesses.empty());
  ASSERT_FALSE(rows[1].witnesses.empty());
  EXPECT_EQ(rows[1].witnesses.front(), NodeSet::of({2, 3, 5, 6, 8}));
  ASSERT_FALSE(rows[6].witnesses.empty());
  EXPECT_EQ(rows[6].witnesses.front(), NodeSet::of({0, 1, 2, 3, 5, 6, 7}));
}

// The scan finds more minimizers than the printed bold sets at r = 14 and r = 18.
TEST(StepTwo, E8FullAchieverSets) {
  const auto e8 = build("E8");
  const auto rows = step2_table(e8, 14, 18);
  ASSERT_EQ(rows.size(), 3U);
  EXPECT_EQ(names(rows[0].achievers), (std::vector<std::string>{"4A1+A2", "A1+2A2", "A1+A3"}));
  EXPECT_EQ(names(rows[2].achievers), (std::vector<std::string>{"3A1+A3", "A2+A3"}));
  const std::vector<std::pair<NodeSet, std::string>> witnesses{
      {NodeSet::of({3, 4, 5, 7}), "A1+A3"},
      {NodeSet::of({1, 4, 5, 7, 8}), "A1+2A2"},
      {NodeSet::of({0, 1, 2, 4, 5, 7}), "3A1+A3"}};
  for (const auto& [j, type] : witnesses) {
    EXPECT_EQ(e8.classify(j).to_string(), type);
    EXPECT_EQ(e8.label_sum(e8.all() - j), type == "3A1+A3" ? 10 : 12);
  }
}

TEST(StepTwo, E7RankTenIsEight) {
  const auto e7 = build("E7");
  const auto rows = step2_table(e7, 10, 10);
  ASSERT_EQ(rows.size(), 1U);
  EXPECT_EQ(rows[0].minimum, 8);
  EXPECT_EQ(names(rows[0].achievers), (std::vector<std::string>{"2A1+A2", "5A1"}));
  // Ten-root subsets reach c^J = 8 at the least, but not all of them sit there.
  std::set<int> uppers;
  for (const auto& r : subset_ledger(e7))
    if (r.roots() == 10) uppers.insert(r.upper);
  EXPECT_EQ(uppers, (std::set<int>{8, 9, 10, 11, 12}));
  EXPECT_LT(126.0 / 8 - 7, 10);
}

TEST(StepTables, MinimaRecomputedFromLedger) {
  for (const char* spec : {"E6", "E7", "E8"}) {
    const auto d = build(spec);
    const auto ledger = subset_ledger(d);
    std::map<int, int> by_upper, by_roots;
    for (const auto& r : ledger) {
      auto [it, fresh] = by_upper.try_emplace(r.upper, r.roots());
      if (!fresh) it->second = std::min(it->second, r.roots());
      auto [jt, fresh2] = by_roots.try_emplace(r.roots(), r.upper);
      if (!fresh2) jt->second = std::min(jt->second, r.upper);
    }
    for (const auto& row : step1_table(d, 2, 7)) {
      EXPECT_EQ(row.minimum, by_upper.at(row.key));
      for (const auto& w : row.witnesses) EXPECT_EQ(f_value(d, w), 0);
    }
    for (const auto& row : step2_table(d, 2, 40)) {
      EXPECT_EQ(row.key % 2, 0);
      EXPECT_EQ(row.minimum, by_roots.at(row.key));
      for (const auto& w : row.witnesses) EXPECT_EQ(f_value(d, w), 0);
    }
  }
}

TEST(Monotone, AddingANodeNeverRaisesUpperSum) {
  for (const char* spec : {"E8", "D7", "2A9"}) {
    const auto d = build(spec);
    for (std::uint32_t b = 0; b < d.all().bits(); ++b) {
      const NodeSet j(b);
      for (int i = 0; i < d.size(); ++i)
        EXPECT_LE(d.label_sum(d.all() - (j | NodeSet::single(i))), d.label_sum(d.all() - j));
    }
  }
}
