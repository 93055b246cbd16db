#include "fqrank/oracle.h"

#include <gtest/gtest.h>

#include <sstream>

#include "brute_force.h"
#include "fqrank/counting.h"

namespace fqrank {
namespace {

using Counts = std::map<std::uint32_t, BigCount>;

TEST(EnumerateJointTest, OneByOne) {
  const JointTable t = enumerate_joint(1, 1, make_field(2));
  const std::map<std::pair<std::uint32_t, std::uint32_t>, BigCount> expected{{{0, 0}, 1}, {{1, 1}, 1}};
  EXPECT_EQ(t.counts, expected);
}

TEST(EnumerateJointTest, TwoByTwoOverF2) {
  const JointTable t = enumerate_joint(2, 2, make_field(2));
  EXPECT_EQ(t.rank_totals(), (Counts{{0, 1}, {1, 9}, {2, 6}}));
  EXPECT_EQ(t.weights_of_rank(1), (Counts{{1, 4}, {2, 4}, {4, 1}}));
  EXPECT_EQ(t.weights_of_rank(2), (Counts{{2, 2}, {3, 4}}));
  EXPECT_EQ(t.total(), 16);
}

TEST(EnumerateJointTest, TwoByTwoOverF3) {
  const JointTable t = enumerate_joint(2, 2, make_field(3));
  EXPECT_EQ(t.rank_totals(), (Counts{{0, 1}, {1, 32}, {2, 48}}));
  EXPECT_EQ(t.total(), 81);
  EXPECT_EQ(t.rank_totals().at(1), 4 * 8);
}

TEST(EnumerateJointTest, MatchesTextbookEnumeration) {
  for (std::int64_t p : {2, 3, 5}) {
    for (std::uint32_t m = 1; m <= 3; ++m) {
      for (std::uint32_t n = 1; n <= 3; ++n) {
        if (std::pow(p, m * n) > 50000) continue;
        const JointTable t = enumerate_joint(m, n, make_field(static_cast<std::uint32_t>(p)));
        const auto expected = brute::joint_counts(m, n, p);
        ASSERT_EQ(t.counts.size(), expected.size());
        for (const auto& [key, c] : expected) {
          EXPECT_EQ(t.count(static_cast<std::uint32_t>(key.first), static_cast<std::uint32_t>(key.second)),
                    to_big(c));
        }
      }
    }
  }
}

TEST(EnumerateJointTest, Invariants) {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const FieldSpec f = make_field_of_order(q);
    for (std::uint32_t m = 1; m <= 3; ++m) {
      for (std::uint32_t n = 1; n <= 3; ++n) {
        if (std::pow(q, m * n) > 300000) continue;
        const JointTable t = enumerate_joint(m, n, f, kDefaultEnumerationCap, 0);
        EXPECT_EQ(t.total(), power(q, m * n));
        EXPECT_EQ(t.count(0, 0), 1);
        for (const auto& [key, c] : t.counts) {
          EXPECT_GE(key.second, key.first) << "weight below rank";
          if (key.second == 1) EXPECT_EQ(key.first, 1u);
        }
        for (std::uint32_t k = 0; k <= std::min(m, n); ++k) {
          EXPECT_EQ(t.rank_totals()[k], count_rank_matrices(m, n, k, q));
        }
      }
    }
  }
}

TEST(EnumerateJointTest, ThreadCountDoesNotChangeResult) {
  const FieldSpec f = make_field(3);
  const JointTable serial = enumerate_joint(3, 3, f, kDefaultEnumerationCap, 1);
  for (unsigned threads : {2u, 3u, 7u}) {
    EXPECT_EQ(enumerate_joint(3, 3, f, kDefaultEnumerationCap, threads).counts, serial.counts);
  }
}

TEST(EnumerateJointTest, CapIsEnforced) {
  EXPECT_THROW(enumerate_joint(3, 3, make_field(2), 511), CapExceeded);
  EXPECT_NO_THROW(enumerate_joint(3, 3, make_field(2), 512));
  EXPECT_THROW(enumerate_joint(8, 8, make_field(2)), CapExceeded);
  EXPECT_THROW(enumerate_joint(20, 20, make_field(65521)), CapExceeded);
  EXPECT_THROW(enumerate_joint(0, 3, make_field(2)), std::invalid_argument);
}

TEST(JointTableTest, MeanAndPmf) {
  const JointTable t = enumerate_joint(2, 2, make_field(2));
  EXPECT_EQ(t.mean_weight(1), Rational(16, 9));
  EXPECT_EQ(t.mean_weight(2), Rational(8, 3));
  EXPECT_EQ(t.weight_pmf(1).mass(),
            (std::map<std::uint64_t, ExactProb>{{1, ExactProb(4, 9)}, {2, ExactProb(4, 9)}, {4, ExactProb(1, 9)}}));
  EXPECT_THROW(t.mean_weight(3), std::invalid_argument);
}

TEST(EnumerateEntryCountsTest, Examples) {
  const FieldSpec f2 = make_field(2);
  auto t = enumerate_entry_counts(2, 2, f2, 1);
  EXPECT_EQ(t.counts, (std::vector<BigCount>{4, 4, 4, 4}));
  t = enumerate_entry_counts(2, 2, f2, 2);
  EXPECT_EQ(t.counts, (std::vector<BigCount>{4, 4, 4, 4}));
  t = enumerate_entry_counts(1, 2, f2, 1);
  EXPECT_EQ(t.counts, (std::vector<BigCount>{2, 2}));
  EXPECT_TRUE(t.is_constant());
  EXPECT_EQ(t.at(0, 1), 2);

  EXPECT_THROW(enumerate_entry_counts(2, 2, f2, 0), std::invalid_argument);
  EXPECT_THROW(enumerate_entry_counts(2, 2, f2, 3), std::invalid_argument);
  EXPECT_THROW(enumerate_entry_counts(4, 4, f2, 1, 1000), CapExceeded);
}

TEST(EnumerateEntryCountsTest, CellConstantAndBounded) {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const FieldSpec f = make_field_of_order(q);
    for (std::uint32_t m = 1; m <= 3; ++m) {
      for (std::uint32_t n = 1; n <= 3; ++n) {
        if (std::pow(q, m * n) > 300000) continue;
        for (std::uint32_t k = 1; k <= std::min(m, n); ++k) {
          const auto t = enumerate_entry_counts(m, n, f, k, kDefaultEnumerationCap, 0);
          EXPECT_TRUE(t.is_constant()) << m << "x" << n << " k=" << k << " q=" << q;
          EXPECT_LE(t.at(0, 0), count_rank_matrices(m, n, k, q));
        }
      }
    }
  }
}

TEST(EnumerateEntryCountsTest, DetectsNonConstantTables) {
  EntryCountTable t{1, 2, 2, 1, {BigCount(1), BigCount(2)}};
  EXPECT_FALSE(t.is_constant());
}

TEST(JointCsvTest, FormatAndRoundTrip) {
  const JointTable t = enumerate_joint(2, 2, make_field(2));
  std::ostringstream os;
  write_joint_csv(os, t);
  EXPECT_EQ(os.str(),
            "# m=2 n=2 q=2\n"
            "rank,weight,count\n"
            "0,0,1\n1,1,4\n1,2,4\n1,4,1\n2,2,2\n2,3,4\n");

  for (std::uint32_t q : {3u, 4u}) {
    const JointTable u = enumerate_joint(2, 3, make_field_of_order(q));
    std::stringstream ss;
    write_joint_csv(ss, u);
    const JointTable back = read_joint_csv(ss);
    EXPECT_EQ(back.counts, u.counts);
    EXPECT_EQ(back.m, u.m);
    EXPECT_EQ(back.n, u.n);
    EXPECT_EQ(back.q, u.q);
  }
}

TEST(JointCsvTest, RejectsMalformedInput) {
  std::istringstream missing("# m=1 n=1 q=2\n0,0,1\n");
  EXPECT_THROW(read_joint_csv(missing), std::invalid_argument);
  std::istringstream bad("rank,weight,count\n0,0\n");
  EXPECT_THROW(read_joint_csv(bad), std::invalid_argument);
  std::istringstream empty("");
  EXPECT_THROW(read_joint_csv(empty), std::invalid_argument);
}

}  // namespace
}  // namespace fqrank
