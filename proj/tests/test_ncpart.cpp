#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles/oracles.hpp"
#include "ptlab/errors.hpp"
#include "ptlab/ncpart.hpp"

using namespace ptlab;
using namespace ptlab::ncpart;

namespace {

SetPartition blocks(std::size_t n, std::vector<std::vector<std::size_t>> bs) {
  return SetPartition::from_blocks(n, bs);
}

Pairing pairs(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> ps) {
  return Pairing::from_pairs(n, ps);
}

}  // namespace

TEST(SetPartition, CanonicalForm) {
  const auto a = blocks(4, {{3, 1}, {4, 2}});
  const auto b = SetPartition::from_labels({7, 2, 7, 2});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.to_string(), "{(1,3),(2,4)}");
  EXPECT_EQ(a.block_count(), 2u);
  EXPECT_EQ(std::hash<SetPartition>{}(a), std::hash<SetPartition>{}(b));
  EXPECT_THROW(blocks(3, {{1, 2}}), ContractError);
  EXPECT_THROW(blocks(3, {{1, 2}, {2, 3}}), ContractError);
}

TEST(Pairings, Enumeration) {
  EXPECT_EQ(enumerate_pairings(2).size(), 1u);
  EXPECT_EQ(enumerate_pairings(4).size(), 3u);
  EXPECT_TRUE(enumerate_pairings(3).empty());
  EXPECT_EQ(enumerate_pairings(0).size(), 1u);
  for (std::size_t n = 2; n <= 10; n += 2) EXPECT_EQ(enumerate_pairings(n).size(), double_factorial(n - 1));
}

TEST(Pairings, SignedEnumeration) {
  EXPECT_EQ(enumerate_eps_pairings(parse_signs("1*")).size(), 1u);
  EXPECT_TRUE(enumerate_eps_pairings(parse_signs("11")).empty());
  const auto ps = enumerate_eps_pairings(parse_signs("1*1*"));
  const std::set<Pairing> got(ps.begin(), ps.end());
  const std::set<Pairing> want{pairs(4, {{1, 2}, {3, 4}}), pairs(4, {{1, 4}, {2, 3}})};
  EXPECT_EQ(got, want);
}

TEST(Signs, BothSpellings) {
  EXPECT_EQ(parse_signs("1*1*"), parse_signs("uu*uu*"));
  EXPECT_EQ(parse_signs("u u* u u*"), parse_signs("1*1*"));
  EXPECT_EQ(to_string(parse_signs("1**1")), "1**1");
  EXPECT_THROW(parse_signs("1#"), ParseError);
}

TEST(Join, Examples) {
  const auto x = blocks(4, {{1, 2}, {3, 4}});
  EXPECT_EQ(join(x, x), x);
  EXPECT_EQ(join(x, blocks(4, {{1, 4}, {2, 3}})), SetPartition::full(4));
  EXPECT_EQ(join(SetPartition::discrete(4), x), x);
  EXPECT_THROW(join(x, SetPartition::discrete(3)), ContractError);
}

TEST(ProductCycles, Examples) {
  const auto p = pairs(4, {{1, 2}, {3, 4}});
  const auto q = pairs(4, {{1, 4}, {2, 3}});
  EXPECT_EQ(product_cycle_type(p, p), (std::vector<std::size_t>{1, 1, 1, 1}));
  EXPECT_EQ(product_cycle_type(p, q), (std::vector<std::size_t>{2, 2}));
}

TEST(Crossing, Examples) {
  EXPECT_FALSE(is_noncrossing(blocks(4, {{1, 3}, {2, 4}})));
  EXPECT_TRUE(is_noncrossing(SetPartition::full(4)));
  std::size_t nc_pairings = 0;
  for (const auto& p : enumerate_pairings(6)) nc_pairings += is_noncrossing(p.to_partition());
  EXPECT_EQ(nc_pairings, 5u);
}

TEST(NonCrossing, EnumerationMatchesFilteredPartitions) {
  for (std::size_t n = 0; n <= 8; ++n) {
    const auto nc = enumerate_nc(n);
    EXPECT_EQ(nc.size(), catalan(n));
    std::set<SetPartition> filtered;
    for (const auto& p : enumerate_set_partitions(n))
      if (is_noncrossing(p)) filtered.insert(p);
    EXPECT_EQ(std::set<SetPartition>(nc.begin(), nc.end()), filtered);
  }
}

TEST(NonCrossing, AlternatingFamily) {
  const auto alt = enumerate_nc_eps_alt(parse_signs("1*1*"));
  const std::set<SetPartition> want{blocks(4, {{1, 2}, {3, 4}}), blocks(4, {{1, 4}, {2, 3}}),
                                    SetPartition::full(4)};
  EXPECT_EQ(std::set<SetPartition>(alt.begin(), alt.end()), want);
  EXPECT_TRUE(enumerate_nc_eps_alt(parse_signs("11")).empty());
}

TEST(Kreweras, Examples) {
  EXPECT_EQ(kreweras(SetPartition::full(5)), SetPartition::discrete(5));
  EXPECT_EQ(kreweras(SetPartition::discrete(5)), SetPartition::full(5));
  EXPECT_EQ(kreweras(blocks(4, {{1, 2}, {3, 4}})), blocks(4, {{1}, {3}, {2, 4}}));
  EXPECT_THROW(kreweras(blocks(4, {{1, 3}, {2, 4}})), ContractError);
}

TEST(Kreweras, AgreesWithInterleavingOracle) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& pi : enumerate_nc(n)) EXPECT_EQ(kreweras(pi), oracle::kreweras_brute(pi));
}

TEST(Mobius, Examples) {
  const auto p = blocks(4, {{1, 2}, {3, 4}});
  EXPECT_EQ(mobius_nc(p, p), 1);
  EXPECT_EQ(mobius_nc(SetPartition::discrete(2), SetPartition::full(2)), -1);
  EXPECT_EQ(mobius_nc(SetPartition::discrete(4), SetPartition::full(4)), -5);
  EXPECT_THROW(mobius_nc(SetPartition::full(4), SetPartition::discrete(4)), ContractError);
  EXPECT_THROW(mobius_nc(blocks(4, {{1, 3}, {2, 4}}), SetPartition::full(4)), ContractError);
}

TEST(Mobius, MatchesZetaInversionOracle) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto mu = oracle::mobius_by_zeta(n);
    const auto nc = enumerate_nc(n);
    for (const auto& a : nc)
      for (const auto& b : nc) {
        if (!a.refines(b)) continue;
        const auto it = mu.find({a, b});
        const long want = it == mu.end() ? 0 : it->second;
        ASSERT_EQ(mobius_nc(a, b), want) << a.to_string() << " " << b.to_string();
        ASSERT_EQ(mobius_nc_multiplicative(a, b), want);
      }
  }
}

TEST(Mobius, FullIntervalIsSignedCatalan) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto want = static_cast<std::int64_t>(catalan(n - 1)) * (n % 2 == 1 ? 1 : -1);
    EXPECT_EQ(mobius_nc(SetPartition::discrete(n), SetPartition::full(n)), want);
  }
}

TEST(CanonicalPairings, Examples) {
  auto [p1, q1] = canonical_pairings(1);
  EXPECT_EQ(p1, pairs(2, {{1, 2}}));
  EXPECT_EQ(q1, pairs(2, {{1, 2}}));
  auto [p2, q2] = canonical_pairings(2);
  EXPECT_EQ(p2, pairs(4, {{2, 3}, {4, 1}}));
  EXPECT_EQ(q2, pairs(4, {{1, 2}, {3, 4}}));
  for (std::size_t k = 1; k <= 6; ++k) {
    auto [p, q] = canonical_pairings(k);
    EXPECT_EQ(join(p.to_partition(), q.to_partition()), SetPartition::full(2 * k));
  }
}

// Properties.

TEST(NcpartProperty, JoinCountsHalfTheCyclesOfPq) {
  for (std::size_t n = 2; n <= 10; n += 2) {
    const auto all = enumerate_pairings(n);
    std::mt19937 rng(n);
    // every pair for n <= 8, a seeded sample of 3000 pairs at n = 10
    const bool exhaustive = n <= 8;
    const std::size_t trials = exhaustive ? all.size() * all.size() : 3000;
    for (std::size_t t = 0; t < trials; ++t) {
      const auto& p = exhaustive ? all[t / all.size()] : all[rng() % all.size()];
      const auto& q = exhaustive ? all[t % all.size()] : all[rng() % all.size()];
      ASSERT_EQ(2 * join(p.to_partition(), q.to_partition()).block_count(),
                product_cycle_type(p, q).size());
    }
  }
}

TEST(NcpartProperty, NonCrossingPairingsAreCatalan) {
  for (std::size_t k = 1; k <= 5; ++k) {
    std::size_t count = 0;
    for (const auto& p : enumerate_pairings(2 * k)) count += is_noncrossing(p.to_partition());
    EXPECT_EQ(count, catalan(k));
  }
}

TEST(NcpartProperty, KrewerasBijectionAndSize) {
  for (std::size_t n = 1; n <= 8; ++n) {
    std::set<SetPartition> image;
    for (const auto& pi : enumerate_nc(n)) {
      const auto k = kreweras(pi);
      ASSERT_TRUE(is_noncrossing(k));
      ASSERT_EQ(pi.block_count() + k.block_count(), n + 1);
      image.insert(k);
    }
    EXPECT_EQ(image.size(), catalan(n));
  }
}
