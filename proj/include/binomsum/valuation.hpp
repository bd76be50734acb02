#pragma once

#include <cstdint>
#include <vector>

#include "binomsum/prime_sieve.hpp"

namespace binomsum {

/// ord_p(n!) = sum_{i>=1} floor(n / p^i) (Legendre). Throws std::invalid_argument
/// ("non-prime base") if p is not prime.
std::uint64_t legendre_valuation(std::uint64_t n, std::uint64_t p);

/// Same as legendre_valuation without the primality check.
inline std::uint64_t legendre_unchecked(std::uint64_t n, std::uint64_t p) {
  std::uint64_t total = 0;
  while (n >= p) {
    n /= p;
    total += n;
  }
  return total;
}

/// Exponent of p in n (n > 0).
std::uint32_t valuation_of(std::uint64_t n, std::uint64_t p);

/// Memoized ord_p(i!) for one prime, filled contiguously from 0.
///
/// The cache is append-only: extend_to() only adds entries, and values already
/// filled are never rewritten. A table shared between workers must be extended
/// before the batch starts; at() is then safe to call concurrently.
class ValuationTable {
 public:
  explicit ValuationTable(Prime p);

  Prime prime() const { return prime_; }
  std::uint64_t filled_to() const { return cache_.size() - 1; }

  void extend_to(std::uint64_t n);
  /// Requires n <= filled_to().
  std::uint32_t at(std::uint64_t n) const { return cache_[n]; }

 private:
  Prime prime_;
  std::vector<std::uint32_t> cache_;
};

}  // namespace binomsum
