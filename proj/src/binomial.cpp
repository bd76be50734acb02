#include "binomsum/binomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "binomsum/valuation.hpp"

namespace binomsum {

FactoredInteger factorial_factored(std::uint64_t n, const PrimeSieve& sieve) {
  if (n > sieve.limit() && n >= 2) {
    throw std::invalid_argument("sieve too small for " + std::to_string(n) + "!");
  }
  std::vector<FactoredInteger::Term> terms;
  for (Prime p : sieve.primes()) {
    if (p > n) break;
    terms.emplace_back(p, static_cast<std::int64_t>(legendre_unchecked(n, p)));
  }
  return FactoredInteger(1, std::move(terms));
}

FactoredInteger factorial_factored(std::uint64_t n) {
  return factorial_factored(n, *shared_sieve(static_cast<std::uint32_t>(std::max<std::uint64_t>(n, 2))));
}

FactoredInteger binomial_factored(std::uint64_t n, std::uint64_t k) {
  if (k > n) throw std::invalid_argument("binomial: k > n");
  auto sieve = shared_sieve(static_cast<std::uint32_t>(std::max<std::uint64_t>(n, 2)));
  std::vector<FactoredInteger::Term> terms;
  for (Prime p : sieve->primes()) {
    if (p > n) break;
    auto e = legendre_unchecked(n, p) - legendre_unchecked(k, p) - legendre_unchecked(n - k, p);
    terms.emplace_back(p, static_cast<std::int64_t>(e));
  }
  return FactoredInteger(1, std::move(terms));
}

BigInteger binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) throw std::invalid_argument("binomial: k > n");
  count_bigint_ops();
  k = std::min(k, n - k);
  BigInteger r = 1;
  // r = C(n - k + i, i) after step i, so each division is exact.
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= static_cast<unsigned long>(n - k + i);
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return r;
}

}  // namespace binomsum
