#pragma once

#include <cstdint>
#include <vector>

#include "binomsum/big_integer.hpp"
#include "binomsum/factored_integer.hpp"

namespace binomsum {

/// A(n,k) = C(6k,3k) C(3k,k) C(6(n-k),3(n-k)) C(3(n-k),n-k).
struct Summand {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  BigInteger value;
  FactoredInteger factored;
};

/// s_n together with the pieces it was divided out of: s * divisor == sum.
struct SequenceValue {
  std::uint64_t n = 0;
  BigInteger s;
  BigInteger sum;
  /// (2n-1) C(3n,n); negative at n = 0.
  BigInteger divisor;
};

/// (2a)!(2b)! / (a! b! (a+b)!).
struct SuperCatalanValue {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  BigInteger value;
};

/// The half-summands B(j) = C(6j,3j) C(3j,j) for 0 <= j <= max_j, so that
/// A(n,k) = B(k) B(n-k). Built once from the factored engine and shared
/// read-only by every n <= max_j.
class HalfSummandTable {
 public:
  HalfSummandTable(std::uint64_t max_j, unsigned jobs = 1);

  std::uint64_t max_j() const { return values_.size() - 1; }
  const BigInteger& value(std::uint64_t j) const { return values_.at(j); }
  const FactoredInteger& factored(std::uint64_t j) const { return factored_.at(j); }

  /// sum_k A(n,k) for n <= max_j.
  BigInteger inner_sum(std::uint64_t n) const;
  /// Largest intermediate operand in bits seen while building the table.
  std::size_t peak_bits() const { return peak_bits_; }

 private:
  std::vector<FactoredInteger> factored_;
  std::vector<BigInteger> values_;
  std::size_t peak_bits_ = 0;
};

/// Factored C(6j,3j) C(3j,j) = (6j)! / ((3j)! (2j)! j!).
FactoredInteger half_summand_factored(std::uint64_t j);

SuperCatalanValue super_catalan(std::uint64_t a, std::uint64_t b);

Summand summand(std::uint64_t n, std::uint64_t k);

BigInteger inner_sum(std::uint64_t n);

/// (2n-1) C(3n,n) in factored form; sign -1 at n = 0.
FactoredInteger sequence_divisor_factored(std::uint64_t n);

/// Exact s_n with a remainder check; throws FalsificationError("s") on a nonzero remainder.
SequenceValue s(std::uint64_t n);
/// Same, reusing a prebuilt table (requires n <= table.max_j()).
SequenceValue s(std::uint64_t n, const HalfSummandTable& table);
/// s_n for every n in [n_min, n_max], in order.
std::vector<SequenceValue> s_range(std::uint64_t n_min, std::uint64_t n_max, unsigned jobs = 1);

/// A(n,k) / ((2n-1) C(3n,n)) for n >= 1; throws FalsificationError("t") if not exact.
BigInteger t(std::uint64_t n, std::uint64_t k);
/// Same, with the divisor (2n-1) C(3n,n) and a table covering n supplied by the caller.
BigInteger t(std::uint64_t n, std::uint64_t k, const HalfSummandTable& table, const BigInteger& divisor);

/// C(2mk,mk) C(mk,k) C(2m(n-k),m(n-k)) C(m(n-k),n-k) for m, n >= 1, k <= n.
FactoredInteger general_product(std::uint64_t m, std::uint64_t n, std::uint64_t k);

}  // namespace binomsum
