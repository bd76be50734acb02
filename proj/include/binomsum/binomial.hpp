#pragma once

#include <cstdint>

#include "binomsum/big_integer.hpp"
#include "binomsum/factored_integer.hpp"
#include "binomsum/prime_sieve.hpp"

namespace binomsum {

/// n! as exponents of the primes <= n. Throws std::invalid_argument when the
/// sieve does not reach n.
FactoredInteger factorial_factored(std::uint64_t n, const PrimeSieve& sieve);
/// Uses the shared, growing sieve.
FactoredInteger factorial_factored(std::uint64_t n);

/// C(n, k) in factored form.
FactoredInteger binomial_factored(std::uint64_t n, std::uint64_t k);

/// Exact C(n, k) by multiplicative accumulation. Throws std::invalid_argument when k > n.
BigInteger binomial(std::uint64_t n, std::uint64_t k);

}  // namespace binomsum
