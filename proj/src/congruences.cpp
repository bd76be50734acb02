#include "binomsum/congruences.hpp"

#include <stdexcept>
#include <string>

#include "binomsum/errors.hpp"
#include "binomsum/prime_sieve.hpp"
#include "binomsum/sequences.hpp"

namespace binomsum {

namespace {

std::uint64_t reduce(const BigInteger& x, std::uint64_t modulus) {
  BigInteger r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(modulus));
  return r.get_ui();
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

CongruenceResult make(CongruenceClaim claim, std::uint64_t parameter, std::uint64_t modulus,
                      std::uint64_t lhs, std::uint64_t expected) {
  CongruenceResult r{claim, parameter, modulus, lhs % modulus, expected % modulus, false};
  if (fault_injected(claim_name(claim))) r.lhs_residue = (r.lhs_residue + 1) % modulus;
  r.holds = r.lhs_residue == r.expected_residue;
  return r;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("non-prime modulus " + std::to_string(p));
}

void require_p_gt_3(std::uint64_t p) {
  require_prime(p);
  if (p <= 3) throw std::invalid_argument("hypothesis p > 3 violated");
}

}  // namespace

std::string_view claim_name(CongruenceClaim claim) {
  switch (claim) {
    case CongruenceClaim::Mod8: return "mod8";
    case CongruenceClaim::FermatQuotient: return "fermat_quotient";
    case CongruenceClaim::ModPSquared: return "mod_p_squared";
  }
  return "unknown";
}

CongruenceResult check_mod8(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("check_mod8: requires n >= 1");
  return check_mod8(n, HalfSummandTable(n));
}

CongruenceResult check_mod8(std::uint64_t n, const HalfSummandTable& table) {
  if (n < 1) throw std::invalid_argument("check_mod8: requires n >= 1");
  return make(CongruenceClaim::Mod8, n, 8, reduce(s(n, table).s, 8), 0);
}

CongruenceResult check_fermat_like(std::uint64_t p) {
  require_prime(p);
  return check_fermat_like(p, HalfSummandTable(p - 1));
}

CongruenceResult check_fermat_like(std::uint64_t p, const HalfSummandTable& table) {
  require_prime(p);
  return make(CongruenceClaim::FermatQuotient, p, p, reduce(s(p - 1, table).s, p), (p - 1) / 6);
}

CongruenceResult check_fermat_like_shifted(std::uint64_t p, const HalfSummandTable& table) {
  require_prime(p);
  return make(CongruenceClaim::FermatQuotient, p, p, reduce(s(p - 1, table).s, p), (p + 1) / 6);
}

CongruenceResult check_mod_p_squared(std::uint64_t p) {
  require_p_gt_3(p);
  return check_mod_p_squared(p, HalfSummandTable(p - 1));
}

CongruenceResult check_mod_p_squared(std::uint64_t p, const HalfSummandTable& table) {
  require_p_gt_3(p);
  const std::uint64_t modulus = p * p;
  const std::uint64_t inverse = mod_inverse(864 % modulus, modulus);
  std::uint64_t weight = 1;  // 864^{-n}
  std::uint64_t total = 0;
  for (std::uint64_t n = 0; n < p; ++n) {
    const std::uint64_t term = mul_mod(mul_mod(n % modulus, weight, modulus),
                                       reduce(table.inner_sum(n), modulus), modulus);
    total = (total + term) % modulus;
    weight = mul_mod(weight, inverse, modulus);
  }
  return make(CongruenceClaim::ModPSquared, p, modulus, total, 0);
}

std::uint64_t mod_p_squared_exact(std::uint64_t p) {
  require_p_gt_3(p);
  HalfSummandTable table(p - 1);
  // numerator / 864^{p-1} with numerator = sum n inner_sum(n) 864^{p-1-n}.
  BigInteger numerator = 0;
  for (std::uint64_t n = 1; n < p; ++n) {
    numerator = numerator * 864 + BigInteger(static_cast<unsigned long>(n)) * table.inner_sum(n);
  }
  const std::uint64_t modulus = p * p;
  BigInteger denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), 864, p - 1);
  const std::uint64_t den_residue = reduce(denominator, modulus);
  return mul_mod(reduce(numerator, modulus), mod_inverse(den_residue, modulus), modulus);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  std::int64_t old_r = static_cast<std::int64_t>(a % m);
  std::int64_t r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1;
  std::int64_t s_coef = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s_coef;
    old_s = s_coef;
    s_coef = tmp;
  }
  if (old_r != 1) throw std::domain_error("not invertible modulo " + std::to_string(m));
  std::int64_t mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

}  // namespace binomsum
