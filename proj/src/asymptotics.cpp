#include "binomsum/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "binomsum/binomial.hpp"
#include "binomsum/errors.hpp"
#include "binomsum/parallel.hpp"
#include "binomsum/sequences.hpp"

namespace binomsum {

namespace {

std::map<std::string, std::int64_t> nk(std::uint64_t n, std::uint64_t k) {
  return {{"n", static_cast<std::int64_t>(n)}, {"k", static_cast<std::int64_t>(k)}};
}

Rational make_rational(BigInteger num, BigInteger den) {
  Rational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

AsymptoticsSample sample_from(std::uint64_t n, const BigInteger& s_n, const BigInteger& s_next) {
  AsymptoticsSample out;
  out.n = n;
  out.log_s = log_abs(s_n);
  const double dn = static_cast<double>(n);
  out.nth_root = std::exp(out.log_s / dn);
  out.step_ratio = std::exp(log_abs(s_next) - out.log_s);
  auto [lo, hi] = log_bound_edges(n);
  out.lower_root = std::exp(lo / dn);
  out.upper_root = std::exp(hi / dn);
  return out;
}

}  // namespace

RatioWitness ratio_identity(std::uint64_t n, std::uint64_t k) {
  return ratio_identity(n, k, HalfSummandTable(n));
}

RatioWitness ratio_identity(std::uint64_t n, std::uint64_t k, const HalfSummandTable& table) {
  if (n < 2 || 2 * k >= n) throw std::invalid_argument("ratio_identity: requires n >= 2, 0 <= k < n/2");
  RatioWitness w;
  w.n = n;
  w.k = k;
  const BigInteger a_k = table.value(k) * table.value(n - k);
  const BigInteger a_next = table.value(k + 1) * table.value(n - k - 1);
  w.lhs = make_rational(a_k, a_next) - 1;

  const BigInteger N(static_cast<unsigned long>(n));
  const BigInteger K(static_cast<unsigned long>(k));
  BigInteger num = (36 * N * K + 31 * N - 36 * K * K - 36 * K - 5) * (N - 2 * K - 1);
  BigInteger den = (6 * K + 5) * (6 * K + 1) * (N - K) * (N - K);
  w.rhs = make_rational(num, den);
  if (fault_injected("ratio_identity")) w.rhs += 1;
  if (w.lhs != w.rhs) {
    throw FalsificationError("ratio_identity", nk(n, k),
                             "lhs " + to_string(w.lhs) + " != rhs " + to_string(w.rhs));
  }
  return w;
}

bool check_monotone(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("check_monotone: requires n >= 2");
  return check_monotone(n, HalfSummandTable(n));
}

bool check_monotone(std::uint64_t n, const HalfSummandTable& table) {
  if (n < 2) throw std::invalid_argument("check_monotone: requires n >= 2");
  const std::uint64_t last = (n + 1) / 2;
  BigInteger previous = table.value(0) * table.value(n);
  for (std::uint64_t k = 1; k <= last; ++k) {
    BigInteger current = table.value(k) * table.value(n - k);
    if (current > previous) return false;
    previous = std::move(current);
  }
  return true;
}

BoundsReport check_bounds(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("check_bounds: requires n >= 1");
  return check_bounds(n, s(n).s);
}

BoundsReport check_bounds(std::uint64_t n, const BigInteger& s_n) {
  if (n < 1) throw std::invalid_argument("check_bounds: requires n >= 1");
  const BigInteger central = binomial(6 * n, 3 * n);
  const BigInteger odd(static_cast<unsigned long>(2 * n - 1));
  BoundsReport r;
  r.n = n;
  r.s = s_n;
  r.lower = make_rational(2 * central, odd);
  r.upper = make_rational(BigInteger(static_cast<unsigned long>(n + 1)) * central, odd);
  const Rational value(s_n);
  if (value < r.lower || value > r.upper) {
    throw FalsificationError("check_bounds", {{"n", static_cast<std::int64_t>(n)}},
                             "s_n outside [" + to_string(r.lower) + ", " + to_string(r.upper) + "]");
  }
  r.lower_tight = value == r.lower;
  r.upper_tight = value == r.upper;
  return r;
}

std::pair<double, double> log_bound_edges(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("log_bound_edges: requires n >= 1");
  const FactoredInteger base =
      binomial_factored(6 * n, 3 * n) / FactoredInteger::from_integer(static_cast<std::int64_t>(2 * n - 1));
  return {fi_log(FactoredInteger::from_integer(2) * base),
          fi_log(FactoredInteger::from_integer(static_cast<std::int64_t>(n + 1)) * base)};
}

AsymptoticsSample sample_at(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("sample_at: requires n >= 1");
  HalfSummandTable table(n + 1);
  return sample_from(n, s(n, table).s, s(n + 1, table).s);
}

std::vector<AsymptoticsSample> sample_asymptotics(std::uint64_t n_max, std::uint64_t stride, unsigned jobs) {
  if (n_max < 2 || stride < 1) throw std::invalid_argument("sample_asymptotics: requires n_max >= 2, stride >= 1");
  const std::uint64_t count = n_max / stride;
  if (count == 0) return {};
  HalfSummandTable table(count * stride + 1, jobs);
  std::vector<AsymptoticsSample> out(count);
  parallel_for(count, jobs, [&](std::size_t i) {
    const std::uint64_t n = (i + 1) * stride;
    out[i] = sample_from(n, s(n, table).s, s(n + 1, table).s);
  });
  return out;
}

double stirling_check(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("stirling_check: requires n >= 1");
  const double dn = static_cast<double>(n);
  const double log_factorial = fi_log(factorial_factored(n));
  const double log_stirling = 0.5 * std::log(2.0 * std::numbers::pi * dn) + dn * (std::log(dn) - 1.0);
  return std::fabs(std::expm1(log_factorial - log_stirling));
}

PiPartialSum pi_partial_sum(std::uint64_t N) {
  if (N < 1) throw std::invalid_argument("pi_partial_sum: requires N >= 1");
  PiPartialSum out;
  out.N = N;
  out.ratio_bound = Rational(3, 5);
  out.checked_through = 2 * N + 10;
  HalfSummandTable table(out.checked_through + 1);

  auto weighted = [&](std::uint64_t n) -> BigInteger { return BigInteger(static_cast<unsigned long>(n)) * table.inner_sum(n); };
  BigInteger base = 864;

  // Common denominator 864^N, numerator accumulated Horner-style.
  BigInteger numerator = 0;
  for (std::uint64_t n = 1; n <= N; ++n) {
    numerator = numerator * base + weighted(n);
  }
  BigInteger denominator;
  mpz_pow_ui(denominator.get_mpz_t(), base.get_mpz_t(), N);
  out.value = make_rational(numerator, denominator);

  // T_{n+1} / T_n = w(n+1) / (864 w(n)) <= 3/5  <=>  5 w(n+1) <= 3 * 864 w(n).
  BigInteger w = weighted(N + 1);
  const BigInteger first_tail = w;
  for (std::uint64_t n = N + 1; n <= out.checked_through; ++n) {
    BigInteger next = weighted(n + 1);
    if (5 * next > 3 * base * w) {
      throw std::runtime_error("term-ratio precheck failed at n=" + std::to_string(n));
    }
    w = std::move(next);
  }
  // T_{N+1} / (1 - 3/5)
  out.remainder_bound = make_rational(first_tail * 5, denominator * base * 2);
  return out;
}

Rational inverse_pi_reference() {
  // 1/pi, OEIS A049541, truncated to 50 significant digits.
  const std::string digits(kInversePi50.substr(2));
  BigInteger den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, digits.size());
  return make_rational(from_decimal(digits), den);
}

double agreeing_digits(const Rational& a, const Rational& b) {
  Rational diff = abs(a - b);
  if (sgn(diff) == 0) return 100.0;
  const Rational relative = diff / abs(b);
  const double log10_rel = (log_abs(relative.get_num()) - log_abs(relative.get_den())) / std::numbers::ln10;
  return std::min(100.0, -log10_rel);
}

}  // namespace binomsum
