#include <gtest/gtest.h>

#include <random>

#include "binomsum/binomial.hpp"
#include "binomsum/divisibility.hpp"
#include "binomsum/errors.hpp"
#include "binomsum/sequences.hpp"
#include "oracle.hpp"

using namespace binomsum;

TEST(Certificate, Examples) {
  const auto c21 = certify_theorem1(2, 1);
  EXPECT_EQ(c21.quotient, 80);
  EXPECT_TRUE(c21.cnk_divides);
  const std::vector<PrimeMargin> expected = {{2, 4, 0}, {3, 2, 2}, {5, 2, 1}};
  EXPECT_EQ(c21.margins, expected);

  const auto c10 = certify_theorem1(1, 0);
  EXPECT_EQ(c10.quotient, 20);
  for (const auto& m : c10.margins) EXPECT_GE(m.margin(), 0);
}

TEST(Certificate, MirrorCertificatesMatch) {
  for (std::uint64_t n = 1; n <= 25; ++n) {
    const auto a = certify_theorem1(n, 0);
    const auto b = certify_theorem1(n, n);
    EXPECT_EQ(a.quotient, b.quotient);
    EXPECT_EQ(a.margins, b.margins);
  }
}

TEST(Certificate, CrossOracleUpTo60) {
  for (std::uint64_t n = 1; n <= 60; ++n) {
    const auto d = oracle::divisor(n);
    for (std::uint64_t k = 0; k <= n; ++k) {
      const auto cert = certify_theorem1(n, k);
      ASSERT_EQ(cert.quotient, mpz_class(oracle::summand(n, k) / d)) << n << "," << k;
      ASSERT_TRUE(cert.cnk_divides);
    }
  }
}

TEST(Certificate, InjectedFaultNamesThePrime) {
  set_injected_fault("certify_theorem1");
  try {
    certify_theorem1(2, 1);
    FAIL() << "expected FalsificationError";
  } catch (const FalsificationError& e) {
    EXPECT_EQ(e.operation(), "certify_theorem1");
    EXPECT_EQ(e.parameters().at("p"), 2);
    EXPECT_EQ(e.parameters().at("n"), 2);
  }
  set_injected_fault("");
}

TEST(ProductDivisibility, Examples) {
  EXPECT_TRUE(check_lemma1(2, 2, 1));
  EXPECT_TRUE(check_lemma1(5, 9, 0));
  EXPECT_TRUE(check_lemma1(3, 7, 3));
  EXPECT_THROW(check_lemma1(0, 2, 1), std::invalid_argument);
}

TEST(EqMkmk, Examples) {
  EXPECT_TRUE(check_eq_mkmk(2, 2, 1));
  // m = 2, n = 2, k = 1: 144 / 6 = 24 = S(2,2) * C(2,1) * C(2,1).
  EXPECT_EQ(fi_to_integer(general_product(2, 2, 1) / binomial_factored(4, 2)), 24);
  for (std::uint64_t n = 1; n <= 10; ++n) {
    for (std::uint64_t k = 0; k <= n; ++k) EXPECT_TRUE(check_eq_mkmk(1, n, k));
  }
  EXPECT_TRUE(check_eq_mkmk(3, 5, 2));
  EXPECT_EQ(fi_to_rational(general_product(3, 5, 2) / binomial_factored(15, 5)), mpq_class(18849600));
}

TEST(ProductDivisibility, SweepMUpTo8) {
  for (std::uint64_t m = 1; m <= 8; ++m) {
    for (std::uint64_t n = 1; n <= 30; ++n) {
      for (std::uint64_t k = 0; k <= n; ++k) {
        ASSERT_TRUE(check_lemma1(m, n, k)) << m << "," << n << "," << k;
        ASSERT_TRUE(check_eq_mkmk(m, n, k)) << m << "," << n << "," << k;
      }
    }
  }
}

TEST(HalfRatio, Examples) {
  EXPECT_TRUE(check_lemma2(2, 1).integral);
  const auto w10 = check_lemma2(1, 0);
  EXPECT_TRUE(w10.integral);
  EXPECT_EQ(fi_to_integer(w10.factored_ratio), 20);
  for (std::uint64_t n = 1; n <= 40; ++n) {
    for (std::uint64_t k = 0; k <= n; ++k) {
      ASSERT_EQ(check_lemma2(n, k).factored_ratio, check_lemma2(n, n - k).factored_ratio);
    }
  }
}

TEST(HalfRatio, MatchesBigIntegerRatio) {
  for (std::uint64_t n = 1; n <= 20; ++n) {
    for (std::uint64_t k = 0; k <= n; ++k) {
      using oracle::factorial;
      mpq_class ratio(factorial(6 * k) * factorial(6 * n - 6 * k) * factorial(2 * n) * factorial(2 * n - 2),
                      factorial(3 * k) * factorial(3 * n - 3 * k) * factorial(3 * n) * factorial(2 * k) *
                          factorial(2 * n - 2 * k) * factorial(2 * n - 1));
      ratio.canonicalize();
      ASSERT_EQ(fi_to_rational(check_lemma2(n, k).factored_ratio), ratio);
      ASSERT_EQ(ratio.get_den(), 1);
    }
  }
}

TEST(CentralDivisor, Examples) {
  EXPECT_TRUE(check_corollary(1));
  EXPECT_TRUE(check_corollary(2));
  EXPECT_TRUE(check_corollary(5));
  EXPECT_EQ(oracle::binomial(30, 15) % 9, 0);
  EXPECT_THROW(check_corollary(0), std::invalid_argument);
}

TEST(FloorInequality, Examples) {
  EXPECT_EQ(floor_lhs_rhs(3, 2, 0), (std::pair<std::int64_t, std::int64_t>(5, 6)));
  EXPECT_TRUE(in_floor_exception_set(3, 2, 0));
  auto [lhs, rhs] = floor_lhs_rhs(5, 3, 1);
  EXPECT_GE(lhs, rhs);
  for (std::uint64_t n = 1; n <= 60; ++n) {
    for (std::uint64_t k = 0; k <= n; ++k) {
      auto [l, r] = floor_lhs_rhs(2, n, k);
      ASSERT_GE(l, r);
    }
  }
  EXPECT_THROW(floor_lhs_rhs(1, 2, 0), std::invalid_argument);
  EXPECT_THROW(floor_lhs_rhs(3, 0, 0), std::invalid_argument);
}

TEST(FloorInequality, ScanMatchesExceptionSet) {
  const auto report = scan_floor_inequality(50, 200, 3);
  EXPECT_TRUE(report.all_in_exception_set);
  EXPECT_TRUE(report.exception_set_tight);
  // Brute-force count over the box: every exception-set point fails.
  EXPECT_EQ(report.violations.size(), 4556u);
  EXPECT_EQ(report.exception_points, 4556u);
  for (const auto& v : report.violations) {
    ASSERT_EQ(v.m, 3u);
    ASSERT_EQ(v.n % 3, 2u);
    ASSERT_NE(v.k % 3, 1u);
  }
  EXPECT_EQ(report.violations.front(), (FloorViolation{3, 2, 0}));
}

TEST(FloorInequality, ScanIsIndependentOfParallelism) {
  const auto a = scan_floor_inequality(20, 60, 1);
  const auto b = scan_floor_inequality(20, 60, 5);
  EXPECT_EQ(a.violations, b.violations);
}

// The two floor facts behind the inequality, on random rationals x = a/q, y = b/q.
TEST(FloorFacts, HoldOnRandomRationals) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-10000, 10000);
  std::uniform_int_distribution<std::int64_t> den(1, 97);
  auto floor_div = [](std::int64_t a, std::int64_t q) {
    std::int64_t f = a / q;
    return (a % q != 0 && (a < 0) != (q < 0)) ? f - 1 : f;
  };
  for (int i = 0; i < 20000; ++i) {
    const std::int64_t q = den(rng);
    const std::int64_t a = num(rng);
    const std::int64_t b = num(rng);
    const auto fx = floor_div(a, q);
    const auto fy = floor_div(b, q);
    const auto fxy = floor_div(a + b, q);
    ASSERT_GE(floor_div(2 * a, q) + floor_div(2 * b, q), fx + fy + fxy);
    ASSERT_GE(fxy, fx + fy);
  }
}

TEST(P3Reduction, Examples) {
  EXPECT_TRUE(check_p3_reduction(2, 0));
  EXPECT_TRUE(check_p3_reduction(2, 1));
  EXPECT_TRUE(check_p3_reduction(1, 0));
  // (4 C(2,1) - C(4,2)) C(2,0) = 2.
  EXPECT_EQ((4 * binomial(2, 1) - binomial(4, 2)) * binomial(2, 0), 2);
}

TEST(P3Reduction, SweepUpTo80) {
  for (std::uint64_t n = 1; n <= 80; ++n) {
    for (std::uint64_t k = 0; k <= n; ++k) ASSERT_TRUE(check_p3_reduction(n, k)) << n << "," << k;
  }
}
