#include <gtest/gtest.h>

#include "binomsum/binomial.hpp"
#include "binomsum/errors.hpp"
#include "binomsum/sequences.hpp"
#include "oracle.hpp"

using namespace binomsum;

TEST(SuperCatalan, Examples) {
  EXPECT_EQ(super_catalan(0, 5).value, binomial(10, 5));
  EXPECT_EQ(super_catalan(1, 1).value, 2);
  EXPECT_EQ(super_catalan(2, 2).value, 6);
  EXPECT_EQ(super_catalan(3, 4).value, 40);
}

TEST(SuperCatalan, SymmetricPositiveIntegers) {
  for (std::uint64_t a = 0; a <= 300; a += 7) {
    for (std::uint64_t b = a; b <= 300; b += 11) {
      const auto ab = super_catalan(a, b);
      ASSERT_GT(ab.value, 0);
      ASSERT_EQ(ab.value, super_catalan(b, a).value) << a << "," << b;
    }
  }
}

TEST(Summand, Examples) {
  EXPECT_EQ(summand(1, 0).value, 60);
  EXPECT_EQ(summand(2, 1).value, 3600);
  EXPECT_EQ(summand(7, 2).value, summand(7, 5).value);
  EXPECT_THROW(summand(2, 3), std::invalid_argument);
}

TEST(Summand, SymmetryUpTo300) {
  for (std::uint64_t n = 0; n <= 300; n += 13) {
    HalfSummandTable table(n);
    for (std::uint64_t k = 0; k <= n; ++k) {
      ASSERT_EQ(table.value(k) * table.value(n - k), table.value(n - k) * table.value(k));
    }
    for (std::uint64_t k = 0; k <= n; k += 5) {
      ASSERT_EQ(summand(n, k).value, summand(n, n - k).value) << n << "," << k;
    }
  }
}

TEST(Summand, FactoredAgreesWithDirectBinomialsUpTo100) {
  for (std::uint64_t n = 0; n <= 100; n += 3) {
    for (std::uint64_t k = 0; k <= n; ++k) {
      const auto a = summand(n, k);
      ASSERT_EQ(fi_to_integer(a.factored), a.value);
      ASSERT_EQ(a.value, oracle::summand(n, k)) << n << "," << k;
    }
  }
}

TEST(HalfSummandTable, MatchesBinomialProducts) {
  HalfSummandTable table(60, 3);
  for (std::uint64_t j = 0; j <= 60; ++j) {
    ASSERT_EQ(table.value(j), oracle::binomial(6 * j, 3 * j) * oracle::binomial(3 * j, j));
    ASSERT_EQ(table.factored(j), half_summand_factored(j));
  }
  EXPECT_THROW(table.inner_sum(61), std::out_of_range);
}

TEST(InnerSum, Examples) {
  EXPECT_EQ(inner_sum(0), 1);
  EXPECT_EQ(inner_sum(1), 120);
  EXPECT_EQ(inner_sum(2), 31320);
}

TEST(SequenceValue, Examples) {
  const auto s0 = s(0);
  EXPECT_EQ(s0.s, -1);
  EXPECT_EQ(s0.divisor, -1);
  EXPECT_EQ(s(1).s, 40);
  EXPECT_EQ(s(2).s, 696);
}

TEST(SequenceValue, MatchesNaiveOracle) {
  // s_0..s_7 from plain factorial arithmetic.
  const std::vector<BigInteger> expected = {-1, 40, 696, 23408, 969496, 44602560, 2187147600,
                                            BigInteger("111957721920")};
  for (std::uint64_t n = 0; n < expected.size(); ++n) EXPECT_EQ(s(n).s, expected[n]) << n;
  for (std::uint64_t n = 0; n <= 40; ++n) {
    ASSERT_EQ(s(n).s, mpz_class(oracle::inner_sum(n) / oracle::divisor(n))) << n;
  }
  EXPECT_EQ(to_decimal(s(20).s), "7569917068672757070151170910256448");
}

TEST(SequenceValue, ConsistencyUpTo300) {
  const auto values = s_range(0, 300, 2);
  ASSERT_EQ(values.size(), 301u);
  for (const auto& v : values) {
    ASSERT_EQ(v.s * v.divisor, v.sum) << v.n;
    if (v.n >= 1) ASSERT_GT(v.s, 0);
  }
}

TEST(SequenceValue, RangeIndependentOfParallelism) {
  const auto serial = s_range(5, 60, 1);
  const auto parallel = s_range(5, 60, 4);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) EXPECT_EQ(serial[i].s, parallel[i].s);
}

TEST(SequenceValue, InjectedFaultFalsifies) {
  set_injected_fault("s");
  try {
    s(3);
    FAIL() << "expected FalsificationError";
  } catch (const FalsificationError& e) {
    EXPECT_EQ(e.operation(), "s");
    EXPECT_EQ(e.parameters().at("n"), 3);
    EXPECT_EQ(e.detail(), "integrality violated");
  }
  set_injected_fault("");
}

TEST(Quotient, Examples) {
  EXPECT_EQ(t(2, 0), 308);
  EXPECT_EQ(t(2, 1), 80);
  EXPECT_EQ(t(1, 1), 20);
  EXPECT_EQ(t(3, 1), 1980);
  EXPECT_THROW(t(0, 0), std::invalid_argument);
  EXPECT_THROW(t(2, 3), std::invalid_argument);
}

TEST(Quotient, IntegralAndDivisibleByCnkUpTo300) {
  for (std::uint64_t n = 1; n <= 300; n += (n < 40 ? 1 : 17)) {
    for (std::uint64_t k = 0; k <= n; k += (n < 40 ? 1 : 9)) {
      const auto q = t(n, k);
      ASSERT_TRUE(mpz_divisible_p(q.get_mpz_t(), binomial(n, k).get_mpz_t())) << n << "," << k;
    }
  }
}

TEST(GeneralProduct, Examples) {
  for (std::uint64_t n = 1; n <= 12; ++n) {
    for (std::uint64_t k = 0; k <= n; ++k) {
      ASSERT_EQ(general_product(3, n, k), summand(n, k).factored);
      ASSERT_EQ(fi_to_integer(general_product(1, n, k)), binomial(2 * k, k) * binomial(2 * (n - k), n - k));
    }
  }
  EXPECT_EQ(fi_to_integer(general_product(2, 2, 1)), 144);
  EXPECT_THROW(general_product(0, 2, 1), std::invalid_argument);
  EXPECT_THROW(general_product(2, 0, 0), std::invalid_argument);
  EXPECT_THROW(general_product(2, 2, 3), std::invalid_argument);
}
