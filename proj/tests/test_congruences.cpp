#include <gtest/gtest.h>

#include "binomsum/congruences.hpp"
#include "binomsum/errors.hpp"
#include "binomsum/prime_sieve.hpp"
#include "binomsum/sequences.hpp"
#include "oracle.hpp"

using namespace binomsum;

TEST(Mod8, Examples) {
  EXPECT_EQ(check_mod8(1).lhs_residue, 0u);
  EXPECT_EQ(check_mod8(2).lhs_residue, 0u);
  const auto r7 = check_mod8(7);
  EXPECT_TRUE(r7.holds);
  EXPECT_EQ(r7.claim, CongruenceClaim::Mod8);
  EXPECT_EQ(r7.modulus, 8u);
  EXPECT_THROW(check_mod8(0), std::invalid_argument);
}

TEST(Mod8, HoldsUpTo300) {
  HalfSummandTable table(300);
  for (std::uint64_t n = 1; n <= 300; ++n) ASSERT_TRUE(check_mod8(n, table).holds) << n;
}

TEST(FermatLike, StatedFormFailsForPrimesFiveModSix) {
  // s_4 = 969496 = 1 (mod 5) while floor(4/6) = 0.
  const auto r5 = check_fermat_like(5);
  EXPECT_EQ(r5.expected_residue, 0u);
  EXPECT_EQ(r5.lhs_residue, 1u);
  EXPECT_FALSE(r5.holds);

  const auto r7 = check_fermat_like(7);
  EXPECT_EQ(r7.expected_residue, 1u);
  EXPECT_TRUE(r7.holds);

  const auto r13 = check_fermat_like(13);
  EXPECT_EQ(r13.expected_residue, 2u);
  EXPECT_TRUE(r13.holds);

  EXPECT_THROW(check_fermat_like(9), std::invalid_argument);
}

TEST(FermatLike, ResidueClassesUpTo200) {
  HalfSummandTable table(199);
  for (Prime p : sieve_primes(200).primes()) {
    const auto stated = check_fermat_like(p, table);
    const auto shifted = check_fermat_like_shifted(p, table);
    // Exact s_{p-1} mod p from the factorial oracle for the smaller primes.
    if (p <= 60) {
      const mpz_class direct = oracle::inner_sum(p - 1) / oracle::divisor(p - 1);
      mpz_class r;
      mpz_fdiv_r_ui(r.get_mpz_t(), direct.get_mpz_t(), p);
      ASSERT_EQ(stated.lhs_residue, r.get_ui());
    }
    ASSERT_TRUE(shifted.holds) << p;
    ASSERT_EQ(stated.holds, p % 6 != 5) << p;
  }
}

TEST(ModPSquared, Examples) {
  const auto r5 = check_mod_p_squared(5);
  EXPECT_EQ(r5.modulus, 25u);
  EXPECT_EQ(r5.lhs_residue, 0u);
  EXPECT_TRUE(r5.holds);
  EXPECT_TRUE(check_mod_p_squared(7).holds);
  try {
    check_mod_p_squared(3);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "hypothesis p > 3 violated");
  }
  EXPECT_THROW(check_mod_p_squared(2), std::invalid_argument);
  EXPECT_THROW(check_mod_p_squared(25), std::invalid_argument);
}

TEST(ModPSquared, ModularPathMatchesExactRational) {
  for (Prime p : sieve_primes(30).primes()) {
    if (p <= 3) continue;
    EXPECT_EQ(check_mod_p_squared(p).lhs_residue, mod_p_squared_exact(p)) << p;
  }
}

TEST(ModPSquared, HoldsUpTo100) {
  HalfSummandTable table(96);
  for (Prime p : sieve_primes(100).primes()) {
    if (p <= 3) continue;
    ASSERT_TRUE(check_mod_p_squared(p, table).holds) << p;
  }
}

TEST(ModInverse, Basics) {
  EXPECT_EQ(mod_inverse(864, 25) * 864 % 25, 1u);
  EXPECT_EQ(mod_inverse(3, 7), 5u);
  EXPECT_THROW(mod_inverse(6, 9), std::domain_error);
}

TEST(Congruence, InjectedFaultFlipsResult) {
  set_injected_fault("mod8");
  EXPECT_FALSE(check_mod8(3).holds);
  set_injected_fault("");
  EXPECT_TRUE(check_mod8(3).holds);
}
