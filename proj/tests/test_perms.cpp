#include <gtest/gtest.h>

#include <set>

#include "oracles/oracles.hpp"
#include "ptlab/errors.hpp"
#include "ptlab/perms.hpp"

using namespace ptlab;
using namespace ptlab::perms;

namespace {

std::vector<std::pair<std::size_t, std::size_t>> shapes_up_to(std::size_t max_m) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t b = 1; b <= max_m; ++b)
    for (std::size_t d = 1; b * d <= max_m; ++d) out.emplace_back(b, d);
  return out;
}

}  // namespace

TEST(Phi, Examples) {
  EXPECT_EQ(phi(BlockShape(2, 3), 1, 1), (Coordinates4{1, 1, 1, 1}));
  EXPECT_EQ(phi(BlockShape(2, 3), 4, 6), (Coordinates4{2, 1, 2, 3}));
  EXPECT_EQ(phi(BlockShape(1, 5), 3, 2), (Coordinates4{1, 3, 1, 2}));
  EXPECT_EQ(phi_inverse(BlockShape(2, 3), {2, 1, 2, 3}), (Entry{4, 6}));
  EXPECT_EQ(phi_inverse(BlockShape(2, 3), {1, 1, 1, 1}), (Entry{1, 1}));
}

TEST(Phi, RoundTrip) {
  for (auto [b, d] : shapes_up_to(12)) {
    const BlockShape s(b, d);
    for (std::size_t i = 1; i <= s.m(); ++i)
      for (std::size_t j = 1; j <= s.m(); ++j) {
        const auto c = phi(s, i, j);
        EXPECT_EQ(c.a1, (i - 1) / d + 1);
        EXPECT_EQ(phi_inverse(s, c), (Entry{i, j}));
        EXPECT_EQ(phi(s, phi_inverse(s, c).row, phi_inverse(s, c).col), c);
      }
  }
}

TEST(Phi, RejectsOutOfRange) {
  const BlockShape s(2, 3);
  EXPECT_THROW(phi(s, 0, 1), DomainError);
  EXPECT_THROW(phi(s, 1, 7), DomainError);
  EXPECT_THROW(phi_inverse(s, {3, 1, 1, 1}), DomainError);
  EXPECT_THROW(phi_inverse(s, {1, 4, 1, 1}), DomainError);
  EXPECT_THROW(BlockShape(0, 2), DomainError);
}

TEST(EntryPermutation, ApplyExamples) {
  const auto left22 = EntryPermutation::partial_transpose(BlockShape(2, 2), Side::Left);
  EXPECT_EQ(left22.apply({1, 3}), (Entry{3, 1}));
  const auto full = EntryPermutation::partial_transpose(BlockShape(1, 4), Side::Right);
  const auto trivial = EntryPermutation::partial_transpose(BlockShape(4, 1), Side::Right);
  for (std::size_t i = 1; i <= 4; ++i)
    for (std::size_t j = 1; j <= 4; ++j) {
      EXPECT_EQ(full.apply({i, j}), (Entry{j, i}));
      EXPECT_EQ(trivial.apply({i, j}), (Entry{i, j}));
    }
  EXPECT_THROW(left22.apply({5, 1}), DomainError);
}

TEST(EntryPermutation, MatchesBlockLoopOracle) {
  for (auto [b, d] : shapes_up_to(24))
    for (int theta : {1, -1}) {
      const auto g = EntryPermutation::partial_transpose(BlockShape(b, d),
                                                         theta == 1 ? Side::Right : Side::Left);
      const auto table = oracle::gamma_table(b, d, theta);
      const std::size_t m = b * d;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          const Entry e = g.apply({i + 1, j + 1});
          ASSERT_EQ(e.row - 1, table[i * m + j].first);
          ASSERT_EQ(e.col - 1, table[i * m + j].second);
        }
    }
}

TEST(EntryPermutation, NamedEquivalences) {
  for (std::size_t m : {1, 3, 6}) {
    EXPECT_EQ(EntryPermutation::identity(m),
              EntryPermutation::partial_transpose(BlockShape(1, m), Side::Left));
    EXPECT_EQ(EntryPermutation::identity(m),
              EntryPermutation::partial_transpose(BlockShape(m, 1), Side::Right));
    EXPECT_EQ(EntryPermutation::full_transpose(m),
              EntryPermutation::partial_transpose(BlockShape(1, m), Side::Right));
  }
}

TEST(EntryPermutation, ComposeAndInverse) {
  const BlockShape s(2, 3);
  const auto r = EntryPermutation::partial_transpose(s, Side::Right);
  const auto l = EntryPermutation::partial_transpose(s, Side::Left);
  const auto t = EntryPermutation::full_transpose(6);
  // Left and right partial transposes compose to the full transpose.
  EXPECT_EQ(EntryPermutation::compose({r, l}), t);
  const auto c = EntryPermutation::compose({r, t});
  const auto ci = EntryPermutation::inverse(c);
  for (std::size_t i = 1; i <= 6; ++i)
    for (std::size_t j = 1; j <= 6; ++j) {
      EXPECT_EQ(ci.apply(c.apply({i, j})), (Entry{i, j}));
      EXPECT_EQ(c.apply_inverse(c.apply({i, j})), (Entry{i, j}));
      // right-to-left application
      EXPECT_EQ(c.apply({i, j}), r.apply(t.apply({i, j})));
    }
  EXPECT_THROW(EntryPermutation::compose({r, EntryPermutation::identity(4)}), ContractError);
  EXPECT_THROW(EntryPermutation::compose({}), ContractError);
}

TEST(EntryPermutation, Describe) {
  EXPECT_EQ(EntryPermutation::identity(4).describe(), "I");
  EXPECT_EQ(EntryPermutation::full_transpose(4).describe(), "T");
  EXPECT_EQ(EntryPermutation::partial_transpose(BlockShape(2, 4), Side::Left).describe(), "G(-1,2,4)");
  EXPECT_EQ(EntryPermutation::partial_transpose(BlockShape(2, 4), Side::Right).describe(), "G(1,2,4)");
}

TEST(PermutationTable, MaterializeAgreesWithLazyEvaluation) {
  const auto c = EntryPermutation::compose(
      {EntryPermutation::partial_transpose(BlockShape(3, 2), Side::Left),
       EntryPermutation::full_transpose(6)});
  const auto table = c.materialize();
  EXPECT_TRUE(table.is_bijection());
  for (std::size_t i = 1; i <= 6; ++i)
    for (std::size_t j = 1; j <= 6; ++j) EXPECT_EQ(table.apply({i, j}), c.apply({i, j}));
}

TEST(PermutationTable, RefusesHugeDomains) {
  EXPECT_THROW(EntryPermutation::identity(PermutationTable::kMaxDomain + 1).materialize(),
               CapacityError);
}

TEST(FixedPoints, Examples) {
  const auto r22 = EntryPermutation::partial_transpose(BlockShape(2, 2), Side::Right);
  EXPECT_EQ(fixed_point_count(r22, r22), 16u);
  EXPECT_EQ(fixed_point_count(r22, EntryPermutation::identity(4)), 8u);
  EXPECT_EQ(fixed_point_count(EntryPermutation::partial_transpose(BlockShape(1, 3), Side::Right),
                              EntryPermutation::identity(3)),
            3u);
  EXPECT_THROW(fixed_point_count(r22, EntryPermutation::identity(3)), ContractError);
}

TEST(FixedPoints, RightVersusLeftAtFour) {
  // Pinned from the block-loop oracle: agreement only on the diagonal.
  const BlockShape s(2, 2);
  const auto r = EntryPermutation::partial_transpose(s, Side::Right);
  const auto l = EntryPermutation::partial_transpose(s, Side::Left);
  const auto tr = oracle::gamma_table(2, 2, 1), tl = oracle::gamma_table(2, 2, -1);
  std::uint64_t brute = 0;
  for (std::size_t x = 0; x < 16; ++x) brute += tr[x] == tl[x];
  EXPECT_EQ(brute, 4u);
  EXPECT_EQ(fixed_point_count(r, l), brute);
}

TEST(OverlapTriples, Identity) {
  const auto id = EntryPermutation::identity(5);
  EXPECT_EQ(overlap_triple_count(id, id, OverlapMode::Full), 25u);
}

TEST(OverlapTriples, BruteForceAtFour) {
  const BlockShape s(2, 2);
  const auto r = EntryPermutation::partial_transpose(s, Side::Right);
  const auto l = EntryPermutation::partial_transpose(s, Side::Left);
  const auto tr = oracle::gamma_table(2, 2, 1), tl = oracle::gamma_table(2, 2, -1);
  std::uint64_t full = 0, first = 0, second = 0;
  for (std::size_t i1 = 0; i1 < 4; ++i1)
    for (std::size_t i2 = 0; i2 < 4; ++i2)
      for (std::size_t j = 0; j < 4; ++j) {
        const auto a = tr[i1 * 4 + j], b = tl[i2 * 4 + j];
        full += a == b;
        first += a.first == b.first;
        second += a.second == b.second;
      }
  EXPECT_EQ(overlap_triple_count(r, l, OverlapMode::Full), full);
  EXPECT_EQ(overlap_triple_count(r, l, OverlapMode::Coord1), first);
  EXPECT_EQ(overlap_triple_count(r, l, OverlapMode::Coord2), second);
}

// Properties over every shape with M <= 64.

TEST(PermsProperty, BijectionAndInvolution) {
  for (auto [b, d] : shapes_up_to(64))
    for (Side side : {Side::Left, Side::Right}) {
      const auto g = EntryPermutation::partial_transpose(BlockShape(b, d), side);
      const std::size_t m = b * d;
      std::vector<bool> hit(m * m, false);
      for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= m; ++j) {
          const Entry e = g.apply({i, j});
          hit[(e.row - 1) * m + e.col - 1] = true;
          ASSERT_EQ(g.apply(e), (Entry{i, j}));
        }
      ASSERT_TRUE(std::all_of(hit.begin(), hit.end(), [](bool h) { return h; }));
    }
}

TEST(PermsProperty, PartialTransposesCommuteWithTranspose) {
  for (auto [b, d] : shapes_up_to(64)) {
    const BlockShape s(b, d);
    const std::uint64_t all = s.m() * s.m();
    const auto t = EntryPermutation::full_transpose(s.m());
    const auto l = EntryPermutation::partial_transpose(s, Side::Left);
    const auto r = EntryPermutation::partial_transpose(s, Side::Right);
    ASSERT_EQ(fixed_point_count(EntryPermutation::compose({t, r, t}), r), all) << b << "x" << d;
    ASSERT_EQ(fixed_point_count(EntryPermutation::compose({t, l, t}), l), all) << b << "x" << d;
    ASSERT_EQ(fixed_point_count(EntryPermutation::compose({t, r}), l), all) << b << "x" << d;
  }
}

TEST(PermsProperty, FixedPointCountSymmetric) {
  for (auto [b, d] : shapes_up_to(16))
    for (auto [b2, d2] : shapes_up_to(16)) {
      if (b * d != b2 * d2) continue;
      const auto p = EntryPermutation::partial_transpose(BlockShape(b, d), Side::Right);
      const auto q = EntryPermutation::partial_transpose(BlockShape(b2, d2), Side::Left);
      EXPECT_EQ(fixed_point_count(p, q), fixed_point_count(q, p));
      EXPECT_EQ(fixed_point_count(p, p), p.domain_size() * p.domain_size());
    }
}
