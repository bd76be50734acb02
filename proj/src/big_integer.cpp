#include "binomsum/big_integer.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace binomsum {

namespace {
std::atomic<std::uint64_t> g_bigint_ops{0};
}

std::string to_decimal(const BigInteger& x) { return x.get_str(10); }

BigInteger from_decimal(const std::string& s) {
  BigInteger x;
  if (s.empty() || x.set_str(s, 10) != 0) {
    throw std::invalid_argument("not a decimal integer: '" + s + "'");
  }
  return x;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return to_decimal(q.get_num());
  return to_decimal(q.get_num()) + "/" + to_decimal(q.get_den());
}

double log_abs(const BigInteger& x) {
  if (sgn(x) == 0) throw std::domain_error("log of zero");
  long exp = 0;
  // |mantissa| in [0.5, 1), x = mantissa * 2^exp.
  double mantissa = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(std::fabs(mantissa)) + static_cast<double>(exp) * std::numbers::ln2;
}

std::uint64_t bigint_op_count() { return g_bigint_ops.load(std::memory_order_relaxed); }
void count_bigint_ops(std::uint64_t n) { g_bigint_ops.fetch_add(n, std::memory_order_relaxed); }
void reset_bigint_op_count() { g_bigint_ops.store(0, std::memory_order_relaxed); }

}  // namespace binomsum
