#pragma once

#include <gmpxx.h>

#include <atomic>
#include <cstdint>
#include <string>

namespace binomsum {

/// Arbitrary-precision signed integer.
using BigInteger = mpz_class;
/// Exact rational, always kept in canonical (reduced) form.
using Rational = mpq_class;

std::string to_decimal(const BigInteger& x);
BigInteger from_decimal(const std::string& s);
/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Natural log of |x| for x != 0, from the top mantissa bits and the bit length.
/// Never overflows regardless of the size of x.
double log_abs(const BigInteger& x);

/// Counts big-integer reconstructions, binomials and checked divisions.
/// Used to observe cache effectiveness; not a precise cost model.
std::uint64_t bigint_op_count();
void count_bigint_ops(std::uint64_t n = 1);
void reset_bigint_op_count();

}  // namespace binomsum
