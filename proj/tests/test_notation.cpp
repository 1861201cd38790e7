#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "chainendo/notation.hpp"
#include "oracles.hpp"

namespace ce = chainendo;
using ce::Endo;
using ce::ErrorKind;

namespace {

Endo table(std::vector<int> v) { return Endo::from_table(static_cast<int>(v.size()), v); }

ce::Error parse_error(const std::string& text, int n) {
  try {
    ce::parse_endo(text, n);
  } catch (const ce::Error& e) {
    return e;
  }
  ADD_FAILURE() << "parsed without error: " << text;
  return ce::Error(ErrorKind::SyntaxError, "none");
}

}  // namespace

TEST(ParseEndo, ReadsRuns) {
  EXPECT_EQ(ce::parse_endo("(0)_2(2)_2(4)_1", 5), table({0, 0, 2, 2, 4}));
  EXPECT_EQ(ce::parse_endo(" (2)_3 (4)_2 ", 5), table({2, 2, 2, 4, 4}));
  EXPECT_EQ(ce::parse_endo("(0)_1", 1), Endo::identity(1));
}

TEST(ParseEndo, Errors) {
  EXPECT_EQ(parse_error("(0)_2(2)_2", 5).kind(), ErrorKind::BadSum);
  EXPECT_EQ(parse_error("(0)_2(2)_2", 5).value(), 4);
  EXPECT_EQ(parse_error("(2)_2(0)_3", 5).kind(), ErrorKind::NonIncreasingVertices);
  EXPECT_EQ(parse_error("(1)_2(1)_3", 5).kind(), ErrorKind::NonIncreasingVertices);
  EXPECT_EQ(parse_error("(5)_5", 5).kind(), ErrorKind::OutOfRange);
  EXPECT_EQ(parse_error("(0)_0(1)_5", 5).kind(), ErrorKind::OutOfRange);
}

TEST(ParseEndo, SyntaxErrorsCarryPosition) {
  const auto e = parse_error("(0)_2(2_3", 5);
  EXPECT_EQ(e.kind(), ErrorKind::SyntaxError);
  EXPECT_EQ(e.value(), 7);
  EXPECT_EQ(parse_error("", 3).kind(), ErrorKind::SyntaxError);
  EXPECT_EQ(parse_error("(0)2", 2).value(), 3);
  EXPECT_EQ(parse_error("(x)_2", 2).value(), 1);
}

TEST(FormatRuns, Canonical) {
  EXPECT_EQ(ce::format_runs(table({0, 0, 2, 2, 4})), "(0)_2(2)_2(4)_1");
  EXPECT_EQ(ce::format_runs(table({1, 1, 2, 3, 3})), "(1)_2(2)_1(3)_2");
  EXPECT_EQ(ce::format_table(table({0, 0, 2})), "[0,0,2]");
  // Zero runs disappear from the canonical form.
  const auto form = ce::RunLengthForm::make(ce::VertexSet(5, {0, 2, 4}), {0, 3, 2});
  EXPECT_EQ(ce::format_runs(form), "(2)_3(4)_2");
}

TEST(FormatRuns, RoundTripsRandomEndos) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, ce::kMaxChainSize)(rng);
    const Endo e = oracle::random_member(oracle::random_vertex_set(n, rng), rng);
    ASSERT_EQ(ce::parse_endo(ce::format_runs(e), n), e);
  }
}
