#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "binomsum/big_integer.hpp"
#include "binomsum/prime_sieve.hpp"

namespace binomsum {

/// A signed rational stored as sign * prod p^e, primes ascending, no zero exponents.
///
/// Products and quotients of factorials stay as short exponent vectors instead of
/// multi-megabit integers; divisibility becomes a sign check on the exponents.
class FactoredInteger {
 public:
  using Term = std::pair<Prime, std::int64_t>;

  /// The value 1.
  FactoredInteger() = default;
  /// Terms may be unsorted and contain duplicates or zero exponents.
  FactoredInteger(int sign, std::vector<Term> terms);
  FactoredInteger(std::initializer_list<Term> terms);

  static FactoredInteger zero();
  static FactoredInteger one() { return {}; }
  /// Factor a small positive or negative integer by trial division.
  static FactoredInteger from_integer(std::int64_t value);

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  const std::vector<Term>& terms() const { return terms_; }
  /// Exponent of p, 0 when absent.
  std::int64_t exponent(Prime p) const;

  FactoredInteger operator-() const;
  friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;

 private:
  int sign_ = 1;
  std::vector<Term> terms_;
};

FactoredInteger fi_mul(const FactoredInteger& a, const FactoredInteger& b);
/// Throws std::domain_error on division by zero.
FactoredInteger fi_div(const FactoredInteger& a, const FactoredInteger& b);
/// a^e for integer e (negative e requires a != 0).
FactoredInteger fi_pow(const FactoredInteger& a, std::int64_t e);

inline FactoredInteger operator*(const FactoredInteger& a, const FactoredInteger& b) {
  return fi_mul(a, b);
}
inline FactoredInteger operator/(const FactoredInteger& a, const FactoredInteger& b) {
  return fi_div(a, b);
}

bool fi_is_integral(const FactoredInteger& a);

/// Exact reconstruction. Throws std::domain_error("negative exponent") if not integral.
BigInteger fi_to_integer(const FactoredInteger& a);
/// Exact rational value (numerator from positive exponents, denominator from negative).
Rational fi_to_rational(const FactoredInteger& a);

/// sum e_p ln p with compensated summation. Throws std::domain_error unless a > 0.
double fi_log(const FactoredInteger& a);

/// Canonical text form: "0", "+1", or "+2^2 * 3^1 * 7^1 * 11^1" (primes ascending).
std::string to_string(const FactoredInteger& a);

/// Balanced product of a list of integers (consumes the list).
BigInteger product_tree(std::vector<BigInteger> factors);

}  // namespace binomsum
