#pragma once

// Brute-force reference computations for the tests. Nothing here touches the
// factored engine; every value comes from plain loops over machine or GMP integers.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Exponent of p in 1*2*...*n by counting factors of each term.
inline std::uint64_t count_factor_in_factorial(std::uint64_t n, std::uint64_t p) {
  std::uint64_t total = 0;
  for (std::uint64_t i = 2; i <= n; ++i) {
    for (std::uint64_t x = i; x % p == 0; x /= p) ++total;
  }
  return total;
}

inline mpz_class factorial(std::uint64_t n) {
  mpz_class f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

inline mpz_class binomial(std::uint64_t n, std::uint64_t k) {
  return mpz_class(factorial(n) / (factorial(k) * factorial(n - k)));
}

/// Row-by-row Pascal triangle up to n_max.
inline std::vector<std::vector<mpz_class>> pascal(std::uint64_t n_max) {
  std::vector<std::vector<mpz_class>> rows(n_max + 1);
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    rows[n].assign(n + 1, 1);
    for (std::uint64_t k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
  }
  return rows;
}

inline mpz_class summand(std::uint64_t n, std::uint64_t k) {
  const std::uint64_t j = n - k;
  return binomial(6 * k, 3 * k) * binomial(3 * k, k) * binomial(6 * j, 3 * j) * binomial(3 * j, j);
}

inline mpz_class inner_sum(std::uint64_t n) {
  mpz_class sum = 0;
  for (std::uint64_t k = 0; k <= n; ++k) sum += summand(n, k);
  return sum;
}

/// (2n-1) C(3n,n), signed.
inline mpz_class divisor(std::uint64_t n) {
  return mpz_class(mpz_class(2 * static_cast<long>(n) - 1) * binomial(3 * n, n));
}

}  // namespace oracle
