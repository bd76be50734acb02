#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "binomsum/binomial.hpp"
#include "binomsum/factored_integer.hpp"
#include "binomsum/prime_sieve.hpp"
#include "binomsum/valuation.hpp"
#include "oracle.hpp"

using namespace binomsum;

TEST(PrimeSieve, SmallLimits) {
  auto ten = sieve_primes(10);
  EXPECT_EQ(std::vector<Prime>(ten.primes().begin(), ten.primes().end()), (std::vector<Prime>{2, 3, 5, 7}));
  auto two = sieve_primes(2);
  EXPECT_EQ(two.primes().size(), 1u);
  EXPECT_EQ(two.primes()[0], 2u);
}

TEST(PrimeSieve, RejectsTinyLimit) {
  EXPECT_THROW(sieve_primes(1), std::invalid_argument);
  try {
    sieve_primes(0);
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "sieve limit too small");
  }
}

TEST(PrimeSieve, MatchesTrialDivision) {
  auto sieve = sieve_primes(100);
  EXPECT_EQ(sieve.primes().size(), 25u);
  auto big = sieve_primes(5000);
  std::size_t index = 0;
  for (std::uint64_t n = 0; n <= 5000; ++n) {
    ASSERT_EQ(big.is_prime(n), oracle::is_prime_trial(n)) << n;
    if (oracle::is_prime_trial(n)) ASSERT_EQ(big.primes()[index++], n);
  }
  EXPECT_EQ(index, big.primes().size());
}

TEST(PrimeSieve, SharedSieveGrows) {
  auto small = shared_sieve(100);
  auto large = shared_sieve(50000);
  EXPECT_GE(large->limit(), 50000u);
  EXPECT_GE(small->limit(), 100u);
  EXPECT_GE(shared_sieve(10)->limit(), large->limit());
}

TEST(Legendre, Examples) {
  EXPECT_EQ(legendre_valuation(10, 2), 8u);
  EXPECT_EQ(legendre_valuation(0, 7), 0u);
  EXPECT_EQ(legendre_valuation(9, 3), 4u);
  EXPECT_EQ(legendre_valuation(9, 3), 3 + legendre_valuation(3, 3));
  EXPECT_THROW(legendre_valuation(10, 4), std::invalid_argument);
}

TEST(Legendre, MatchesFactorCountingUpTo500) {
  for (std::uint64_t n = 0; n <= 500; ++n) {
    for (std::uint64_t p = 2; p <= n; ++p) {
      if (!oracle::is_prime_trial(p)) continue;
      ASSERT_EQ(legendre_valuation(n, p), oracle::count_factor_in_factorial(n, p)) << n << " " << p;
    }
  }
}

TEST(Legendre, ThreeAdicReduction) {
  for (std::uint64_t j = 0; j <= 200; ++j) {
    ASSERT_EQ(legendre_valuation(3 * j, 3), j + legendre_valuation(j, 3)) << j;
  }
}

TEST(ValuationTable, AppendOnlyAndExact) {
  ValuationTable table(5);
  table.extend_to(100);
  EXPECT_EQ(table.filled_to(), 100u);
  const auto at50 = table.at(50);
  table.extend_to(30);  // never shrinks
  EXPECT_EQ(table.filled_to(), 100u);
  table.extend_to(400);
  EXPECT_EQ(table.at(50), at50);
  for (std::uint64_t n = 0; n <= 400; ++n) ASSERT_EQ(table.at(n), legendre_valuation(n, 5));
  EXPECT_THROW(ValuationTable(9), std::invalid_argument);
}

TEST(FactorialFactored, Examples) {
  EXPECT_EQ(factorial_factored(6), (FactoredInteger{{2, 4}, {3, 2}, {5, 1}}));
  EXPECT_EQ(factorial_factored(1), FactoredInteger::one());
  EXPECT_EQ(factorial_factored(10).exponent(2), 8);
  EXPECT_THROW(factorial_factored(20, sieve_primes(10)), std::invalid_argument);
}

TEST(FactorialFactored, ReconstructsUpTo300) {
  mpz_class f = 1;
  for (std::uint64_t n = 0; n <= 300; ++n) {
    if (n > 1) f *= static_cast<unsigned long>(n);
    ASSERT_EQ(fi_to_integer(factorial_factored(n)), f) << n;
  }
}

TEST(FactoredInteger, MulDivExamples) {
  const FactoredInteger x{{2, 3}, {7, -1}};
  EXPECT_EQ(fi_div(x, x), FactoredInteger::one());
  EXPECT_EQ(fi_mul(FactoredInteger::one(), x), x);
  const auto c12_6 = fi_div(factorial_factored(12), fi_mul(factorial_factored(6), factorial_factored(6)));
  EXPECT_EQ(c12_6, (FactoredInteger{{2, 2}, {3, 1}, {7, 1}, {11, 1}}));
  EXPECT_THROW(fi_div(x, FactoredInteger::zero()), std::domain_error);
  EXPECT_TRUE(fi_mul(FactoredInteger::zero(), x).is_zero());
}

TEST(FactoredInteger, Normalization) {
  FactoredInteger messy(1, {{5, 1}, {2, 3}, {5, -1}, {3, 0}, {2, 1}});
  EXPECT_EQ(messy, (FactoredInteger{{2, 4}}));
  EXPECT_TRUE(FactoredInteger::zero().terms().empty());
  EXPECT_EQ(FactoredInteger::zero().sign(), 0);
  EXPECT_EQ(FactoredInteger::from_integer(-12), -(FactoredInteger{{2, 2}, {3, 1}}));
  EXPECT_EQ(FactoredInteger::from_integer(1), FactoredInteger::one());
}

TEST(FactoredInteger, Integrality) {
  EXPECT_TRUE(fi_is_integral(FactoredInteger::one()));
  EXPECT_FALSE(fi_is_integral(FactoredInteger{{2, -1}}));
  EXPECT_THROW(fi_to_integer(FactoredInteger{{2, -1}}), std::domain_error);
  EXPECT_EQ(fi_to_rational(FactoredInteger{{2, -1}, {3, 2}}), mpq_class(9, 2));
}

TEST(FactoredInteger, ToInteger) {
  EXPECT_EQ(fi_to_integer(FactoredInteger{{2, 2}, {3, 1}, {7, 1}, {11, 1}}), 924);
  EXPECT_EQ(fi_to_integer(FactoredInteger::one()), 1);
  EXPECT_EQ(fi_to_integer(factorial_factored(10)), 3628800);
  EXPECT_EQ(fi_to_integer(-(FactoredInteger{{3, 2}})), -9);
}

TEST(FactoredInteger, Log) {
  EXPECT_EQ(fi_log(FactoredInteger::one()), 0.0);
  EXPECT_DOUBLE_EQ(fi_log(FactoredInteger{{2, 10}}), 10 * std::log(2.0));
  const double log924 = fi_log(binomial_factored(12, 6));
  EXPECT_NEAR(log924, std::log(924.0), 1e-12 * std::log(924.0));
  EXPECT_THROW(fi_log(FactoredInteger::zero()), std::domain_error);
  EXPECT_THROW(fi_log(-FactoredInteger::one()), std::domain_error);
}

TEST(FactoredInteger, LogOfLargeFactorialAgreesWithLgamma) {
  for (std::uint64_t n : {100u, 1000u, 12000u}) {
    const double expected = std::lgamma(static_cast<double>(n) + 1.0);
    EXPECT_NEAR(fi_log(factorial_factored(n)), expected, 1e-12 * expected) << n;
  }
}

TEST(FactoredInteger, CanonicalText) {
  EXPECT_EQ(to_string(FactoredInteger{{11, 1}, {2, 2}, {7, 1}, {3, 1}}), "+2^2 * 3^1 * 7^1 * 11^1");
  EXPECT_EQ(to_string(FactoredInteger::one()), "+1");
  EXPECT_EQ(to_string(FactoredInteger::zero()), "0");
  EXPECT_EQ(to_string(-(FactoredInteger{{2, -1}})), "-2^-1");
}

// Random rationals built from small primes.
FactoredInteger random_factored(std::mt19937_64& rng) {
  static const Prime primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23};
  std::uniform_int_distribution<int> exp(-4, 4);
  std::uniform_int_distribution<int> count(0, 6);
  std::uniform_int_distribution<int> pick(0, 8);
  std::vector<FactoredInteger::Term> terms;
  for (int i = count(rng); i > 0; --i) terms.emplace_back(primes[pick(rng)], exp(rng));
  return FactoredInteger(rng() % 2 ? 1 : -1, terms);
}

TEST(FactoredInteger, GroupLawsOnRandomInputs) {
  std::mt19937_64 rng(20240101);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = random_factored(rng);
    const auto b = random_factored(rng);
    const auto c = random_factored(rng);
    ASSERT_EQ(fi_mul(a, b), fi_mul(b, a));
    ASSERT_EQ(fi_mul(fi_mul(a, b), c), fi_mul(a, fi_mul(b, c)));
    ASSERT_EQ(fi_div(fi_mul(a, b), b), a);
    ASSERT_EQ(fi_to_rational(fi_mul(a, b)), fi_to_rational(a) * fi_to_rational(b));
  }
}

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(6, 3), 20);
  EXPECT_EQ(binomial(17, 0), 1);
  EXPECT_EQ(binomial(12, 6), 924);
  EXPECT_THROW(binomial(3, 4), std::invalid_argument);
  EXPECT_THROW(binomial_factored(3, 4), std::invalid_argument);
}

TEST(Binomial, PascalAndFactoredAgreeUpTo200) {
  const auto rows = oracle::pascal(200);
  for (std::uint64_t n = 0; n <= 200; ++n) {
    for (std::uint64_t k = 0; k <= n; ++k) {
      const auto value = binomial(n, k);
      ASSERT_EQ(value, rows[n][k]) << n << "," << k;
      ASSERT_EQ(fi_to_integer(binomial_factored(n, k)), value) << n << "," << k;
      if (n > 0 && k > 0 && k < n) ASSERT_EQ(value, binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST(BigInteger, DecimalRoundTripAndLog) {
  const BigInteger x = oracle::factorial(300);
  EXPECT_EQ(from_decimal(to_decimal(x)), x);
  EXPECT_EQ(from_decimal("-123456789012345678901234567890"), BigInteger("-123456789012345678901234567890"));
  EXPECT_THROW(from_decimal("12a"), std::invalid_argument);
  EXPECT_NEAR(log_abs(x), std::lgamma(301.0), 1e-13 * std::lgamma(301.0));
  EXPECT_NEAR(log_abs(BigInteger(-1000)), std::log(1000.0), 1e-15);
}
