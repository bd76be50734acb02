#include "binomsum/bench.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "binomsum/sequences.hpp"

namespace binomsum {

namespace {

struct NaiveBinomial {
  std::size_t peak_bits = 0;

  BigInteger factorial(std::uint64_t n) {
    BigInteger f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    peak_bits = std::max(peak_bits, mpz_sizeinbase(f.get_mpz_t(), 2));
    return f;
  }

  BigInteger operator()(std::uint64_t a, std::uint64_t b) {
    BigInteger num = factorial(a);
    BigInteger den = factorial(b) * factorial(a - b);
    BigInteger q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

BigInteger naive_s(std::uint64_t n, std::size_t* peak_bits) {
  NaiveBinomial binom;
  BigInteger sum = 0;
  for (std::uint64_t k = 0; k <= n; ++k) {
    const std::uint64_t j = n - k;
    sum += binom(6 * k, 3 * k) * binom(3 * k, k) * binom(6 * j, 3 * j) * binom(3 * j, j);
  }
  const BigInteger divisor = BigInteger(static_cast<long>(2 * n) - 1) * binom(3 * n, n);
  BigInteger q;
  BigInteger r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), sum.get_mpz_t(), divisor.get_mpz_t());
  if (sgn(r) != 0) throw std::runtime_error("naive_s: inexact division");
  if (peak_bits) *peak_bits = binom.peak_bits;
  return q;
}

BenchResult bench_s(std::uint64_t n, unsigned jobs, unsigned repeats) {
  BenchResult result;
  result.n = n;
  BigInteger factored;
  result.factored_seconds = 1e300;
  for (unsigned i = 0; i < std::max(1u, repeats); ++i) {
    auto start = std::chrono::steady_clock::now();
    HalfSummandTable table(n, jobs);
    factored = s(n, table).s;
    result.factored_seconds = std::min(result.factored_seconds, seconds_since(start));
    result.factored_peak_bits = table.peak_bits();
  }
  auto start = std::chrono::steady_clock::now();
  BigInteger naive = naive_s(n, &result.naive_peak_bits);
  result.naive_seconds = seconds_since(start);
  result.agree = naive == factored;
  return result;
}

}  // namespace binomsum
