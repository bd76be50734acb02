#include "binomsum/prime_sieve.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace binomsum {

PrimeSieve::PrimeSieve(std::uint32_t limit) : limit_(limit), composite_(limit + 1, false) {
  if (limit < 2) throw std::invalid_argument("sieve limit too small");
  composite_[0] = composite_[1] = true;
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (composite_[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) composite_[j] = true;
  }
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (!composite_[i]) primes_.push_back(i);
  }
}

bool PrimeSieve::is_prime(std::uint64_t n) const {
  if (n > limit_) return binomsum::is_prime(n);
  return !composite_[n];
}

PrimeSieve sieve_primes(std::uint32_t limit) { return PrimeSieve(limit); }

std::shared_ptr<const PrimeSieve> shared_sieve(std::uint32_t limit) {
  static std::mutex mutex;
  static std::shared_ptr<const PrimeSieve> current;
  std::lock_guard lock(mutex);
  if (!current || current->limit() < limit) {
    std::uint32_t grown = std::max<std::uint32_t>({limit, 1024, current ? current->limit() * 2 : 0});
    current = std::make_shared<const PrimeSieve>(grown);
  }
  return current;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace binomsum
