#include "binomsum/valuation.hpp"

#include <stdexcept>

namespace binomsum {

std::uint64_t legendre_valuation(std::uint64_t n, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("non-prime base");
  return legendre_unchecked(n, p);
}

std::uint32_t valuation_of(std::uint64_t n, std::uint64_t p) {
  std::uint32_t v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

ValuationTable::ValuationTable(Prime p) : prime_(p), cache_{0} {
  if (!is_prime(p)) throw std::invalid_argument("non-prime base");
}

void ValuationTable::extend_to(std::uint64_t n) {
  if (n < cache_.size()) return;
  cache_.reserve(n + 1);
  for (std::uint64_t i = cache_.size(); i <= n; ++i) {
    cache_.push_back(cache_.back() + valuation_of(i, prime_));
  }
}

}  // namespace binomsum
