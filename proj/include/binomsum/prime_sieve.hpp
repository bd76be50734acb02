#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace binomsum {

using Prime = std::uint32_t;

/// All primes up to a limit, with O(1) membership.
class PrimeSieve {
 public:
  explicit PrimeSieve(std::uint32_t limit);

  std::uint32_t limit() const { return limit_; }
  std::span<const Prime> primes() const& { return primes_; }
  // Rvalue sieves hand over their storage so `for (p : sieve_primes(n).primes())` is safe.
  std::vector<Prime> primes() && { return std::move(primes_); }
  bool is_prime(std::uint64_t n) const;

 private:
  std::uint32_t limit_;
  std::vector<Prime> primes_;
  std::vector<bool> composite_;
};

/// Throws std::invalid_argument("sieve limit too small") when limit < 2.
PrimeSieve sieve_primes(std::uint32_t limit);

/// Process-wide sieve that covers at least `limit`. Grows on demand, never shrinks;
/// earlier snapshots stay valid because each growth publishes a new object.
std::shared_ptr<const PrimeSieve> shared_sieve(std::uint32_t limit);

/// Trial-division primality, for validating caller-supplied primes.
bool is_prime(std::uint64_t n);

}  // namespace binomsum
