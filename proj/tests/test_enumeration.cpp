#include <algorithm>
#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "chainendo/enumeration.hpp"
#include "chainendo/notation.hpp"
#include "oracles.hpp"

namespace ce = chainendo;
using ce::Endo;
using ce::ErrorKind;
using ce::SimplexSpec;
using ce::SubsetSelector;
using ce::VertexSet;

namespace {

Endo table(std::vector<int> v) { return Endo::from_table(static_cast<int>(v.size()), v); }

}  // namespace

TEST(Counts, Binomial) {
  EXPECT_EQ(ce::binomial(9, 4), 126u);
  EXPECT_EQ(ce::binomial(5, 0), 1u);
  EXPECT_EQ(ce::binomial(3, 5), 0u);
  EXPECT_EQ(ce::simplex_size(SimplexSpec(VertexSet::full(5))), 126u);
  EXPECT_EQ(ce::simplex_size(SimplexSpec(VertexSet(3, {0, 2}))), 4u);
}

TEST(Counts, CatalanMatchesRecurrence) {
  const auto oracle_values = oracle::catalan_table(35);
  for (int p = 0; p <= 35; ++p) EXPECT_EQ(ce::catalan(p), oracle_values[p]) << p;
  EXPECT_EQ(ce::catalan(10), 16796u);
  EXPECT_THROW(ce::catalan(40), ce::Error);
}

TEST(Enumerate, LexicographicTables) {
  const auto all = ce::enumerate_simplex(SimplexSpec(VertexSet(3, {0, 2})));
  const std::vector<Endo> want{table({0, 0, 0}), table({0, 0, 2}), table({0, 2, 2}), table({2, 2, 2})};
  EXPECT_EQ(all, want);
  EXPECT_EQ(ce::enumerate_simplex(SimplexSpec(VertexSet(4, {3}))), std::vector<Endo>{Endo::constant(4, 3)});
}

TEST(Enumerate, MatchesBruteForce) {
  for (int n = 1; n <= 6; ++n) {
    for (const VertexSet& a : oracle::all_vertex_sets(n)) {
      const SimplexSpec spec(a);
      const auto got = ce::enumerate_simplex(spec);
      ASSERT_TRUE(std::is_sorted(got.begin(), got.end()));
      ASSERT_EQ(got, oracle::brute_force_simplex(a));
      ASSERT_EQ(got.size(), ce::simplex_size(spec));
    }
  }
}

TEST(Subsets, Examples) {
  EXPECT_EQ(ce::count(SubsetSelector::over_nilpotent(5)), 42u);
  EXPECT_EQ(ce::count(SubsetSelector::nilpotent(5)), 14u);
  EXPECT_EQ(ce::count(SubsetSelector::top_section(5, 2)), 4u);
  EXPECT_EQ(ce::count(SubsetSelector::top_section(5, 3)), 15u);
  EXPECT_EQ(ce::enumerate_subset(SubsetSelector::nilpotent(3)), (std::vector<Endo>{table({0, 0, 0}), table({0, 0, 1})}));
  EXPECT_EQ(ce::count(SubsetSelector::simplex(SimplexSpec(VertexSet::full(5)))), 126u);
}

TEST(Subsets, TopSectionOnFullChainIsTheTopConstant) {
  for (int n = 3; n <= 7; ++n) {
    const SubsetSelector sel = SubsetSelector::s(ce::ProjectionSpec(VertexSet::full(n), n - 2, n - 1));
    EXPECT_EQ(ce::enumerate_subset(sel), std::vector<Endo>{Endo::constant(n, n - 1)}) << n;
  }
}

TEST(Subsets, Validation) {
  EXPECT_THROW(SubsetSelector::top_section(5, 0), ce::Error);
  EXPECT_THROW(SubsetSelector::top_section(5, 4), ce::Error);
  try {
    ce::count(SubsetSelector::over_nilpotent(20), 1000);
    FAIL();
  } catch (const ce::Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundsTooLarge);
  }
}

// Counts against closed forms for every n in reach.
TEST(Subsets, CatalanFamilies) {
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(ce::count(SubsetSelector::over_nilpotent(n)), ce::catalan(n)) << n;
    EXPECT_EQ(ce::count(SubsetSelector::nilpotent(n)), ce::catalan(n - 1)) << n;
  }
  for (int n = 3; n <= 8; ++n) {
    for (int p = 1; p <= n - 2; ++p) {
      EXPECT_EQ(ce::count(SubsetSelector::top_section(n, p)), static_cast<std::uint64_t>(p) * ce::catalan(p)) << n << ' ' << p;
    }
  }
}

TEST(Subsets, StrictlyDecreasingMeansNilpotent) {
  for (int n = 1; n <= 7; ++n) {
    for (const Endo& e : ce::enumerate_simplex(SimplexSpec(VertexSet::full(n)))) {
      ASSERT_EQ(ce::is_strictly_decreasing_map(e), ce::is_nilpotent(e)) << ce::format_table(e);
    }
  }
}

TEST(Subsets, FiltersAgreeWithPredicates) {
  const ce::ProjectionSpec proj(VertexSet(6, {0, 2, 3, 5}), 1, 3);
  const auto members = oracle::brute_force_simplex(proj.vertices());
  auto expect_filter = [&](const SubsetSelector& sel, auto pred) {
    std::vector<Endo> want;
    for (const Endo& e : members) {
      if (pred(e)) want.push_back(e);
    }
    EXPECT_EQ(ce::enumerate_subset(sel), want);
  };
  expect_filter(SubsetSelector::s(proj), [&](const Endo& e) { return ce::in_S(proj, e); });
  expect_filter(SubsetSelector::r(proj), [&](const Endo& e) { return ce::in_R(proj, e); });
  expect_filter(SubsetSelector::d(proj), [&](const Endo& e) { return ce::in_S(proj, e) || ce::in_R(proj, e); });
  expect_filter(SubsetSelector::d_cap(proj.simplex()), [&](const Endo& e) {
    return e[0] <= 0 && e[2] <= 2 && e[3] <= 3 && e[5] <= 5;
  });
}
