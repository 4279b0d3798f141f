#include <gtest/gtest.h>

#include "ptlab/errors.hpp"
#include "ptlab/grammar.hpp"

using namespace ptlab;
using namespace ptlab::grammar;
using ncpart::Sign;

namespace {

std::size_t error_column(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no ParseError";
  return 0;
}

}  // namespace

TEST(Grammar, Perms) {
  EXPECT_EQ(parse_perm("I", 6), perms::EntryPermutation::identity(6));
  EXPECT_EQ(parse_perm(" T ", 6), perms::EntryPermutation::full_transpose(6));
  EXPECT_EQ(parse_perm("G(-1, 2, 3)", 6),
            perms::EntryPermutation::partial_transpose(perms::BlockShape(2, 3), perms::Side::Left));
  EXPECT_EQ(error_column([] { parse_perm("G(2,2,3)", 6); }), 2u);
  EXPECT_EQ(error_column([] { parse_perm("G(1,2,2)", 6); }), 0u);
  EXPECT_EQ(error_column([] { parse_perm("X", 6); }), 0u);
  EXPECT_EQ(error_column([] { parse_perm("G(1,0,2)", 6); }), 4u);
  EXPECT_EQ(error_column([] { parse_perm("T x", 6); }), 2u);
}

TEST(Grammar, Words) {
  const auto w = parse_word("A:G(1,2,2) A':G(1,2,2)  B:T'", 4);
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(w.letters()[0].exponent, Sign::One);
  EXPECT_EQ(w.letters()[1].exponent, Sign::Star);
  EXPECT_EQ(w.letters()[2].exponent, Sign::Star);
  EXPECT_EQ(w.letters()[2].label, "B");
  EXPECT_EQ(w.describe(), "A:G(1,2,2) A:G(1,2,2)' B:T'");
  EXPECT_EQ(parse_word(w.describe(), 4).describe(), w.describe());

  EXPECT_EQ(error_column([] { parse_word("A':I'", 3); }), 4u);
  EXPECT_EQ(error_column([] { parse_word("A:IB:I", 3); }), 3u);
  EXPECT_EQ(error_column([] { parse_word("A I", 3); }), 1u);
  EXPECT_EQ(error_column([] { parse_word("   ", 3); }), 0u);
  EXPECT_EQ(error_column([] { parse_word("A:I 7:I", 3); }), 4u);
  EXPECT_THROW(parse_word("A:I", 0), DomainError);
}

TEST(Grammar, Patterns) {
  const auto digits = parse_pattern("1*1*");
  ASSERT_EQ(digits.size(), 4u);
  EXPECT_EQ(digits[1].label, "x");
  EXPECT_EQ(digits[1].sign, Sign::Star);

  const auto letters = parse_pattern("uu*vv*");
  ASSERT_EQ(letters.size(), 4u);
  EXPECT_EQ(letters[2].label, "v");
  EXPECT_EQ(letters[3].sign, Sign::Star);

  const auto spaced = parse_pattern("a b' a* b");
  ASSERT_EQ(spaced.size(), 4u);
  EXPECT_EQ(spaced[1].label, "b");
  EXPECT_EQ(spaced[1].sign, Sign::Star);
  EXPECT_EQ(spaced[2].sign, Sign::Star);

  EXPECT_THROW(parse_pattern(""), ParseError);
  EXPECT_EQ(error_column([] { parse_pattern("u2"); }), 1u);
}

TEST(Grammar, Sizes) {
  EXPECT_EQ(parse_size("4").constant_value(), 4u);
  EXPECT_EQ(parse_size("N").kind(), freeness::SizeExpr::Kind::Divide);
  EXPECT_EQ(parse_size("N/8").divisor(), 8u);
  EXPECT_DOUBLE_EQ(parse_size("N^0.25").exponent(), 0.25);
  EXPECT_DOUBLE_EQ(parse_size("N^(1/3)").exponent(), 1.0 / 3);
  EXPECT_EQ(parse_size("{8:2; 16:4}").table_values().at(16), 4u);
  EXPECT_EQ(error_column([] { parse_size("N^1.5"); }), 2u);
  EXPECT_EQ(error_column([] { parse_size("N/0"); }), 2u);
  EXPECT_EQ(error_column([] { parse_size("0"); }), 0u);
  EXPECT_EQ(error_column([] { parse_size("{8:2"); }), 4u);
}

TEST(Grammar, Specs) {
  const auto s = parse_transpose_spec("t=1,b=2,d=N/2");
  EXPECT_EQ(s.theta, perms::Side::Right);
  EXPECT_EQ(s.shape_at(16), perms::BlockShape(2, 8));
  const auto c = parse_transpose_spec("theta=-1, d=N^0.5");
  EXPECT_EQ(c.theta, perms::Side::Left);
  EXPECT_EQ(c.b.kind(), freeness::SizeExpr::Kind::Complement);
  EXPECT_EQ(c.shape_at(64), perms::BlockShape(8, 8));
  EXPECT_EQ(parse_transpose_spec(s.describe()).describe(), s.describe());

  EXPECT_EQ(error_column([] { parse_transpose_spec("b=2"); }), 0u);
  EXPECT_EQ(error_column([] { parse_transpose_spec("t=1"); }), 0u);
  EXPECT_EQ(error_column([] { parse_transpose_spec("t=0,b=2"); }), 2u);
  EXPECT_EQ(error_column([] { parse_transpose_spec("t=1,b=2,b=4"); }), 8u);
  EXPECT_EQ(error_column([] { parse_transpose_spec("t=1,q=2"); }), 4u);
}

TEST(Grammar, Grids) {
  EXPECT_EQ(parse_grid("8, 16,32"), (std::vector<std::size_t>{8, 16, 32}));
  EXPECT_EQ(error_column([] { parse_grid("8,,16"); }), 2u);
  EXPECT_EQ(error_column([] { parse_grid("8;16"); }), 1u);
}
