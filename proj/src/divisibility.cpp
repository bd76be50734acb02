#include "binomsum/divisibility.hpp"

#include <stdexcept>
#include <string>

#include "binomsum/binomial.hpp"
#include "binomsum/errors.hpp"
#include "binomsum/parallel.hpp"
#include "binomsum/sequences.hpp"
#include "binomsum/valuation.hpp"

namespace binomsum {

namespace {

using Params = std::map<std::string, std::int64_t>;

Params nk(std::uint64_t n, std::uint64_t k) {
  return {{"n", static_cast<std::int64_t>(n)}, {"k", static_cast<std::int64_t>(k)}};
}

void require_range(std::uint64_t n, std::uint64_t k, const char* op) {
  if (n < 1) throw std::invalid_argument(std::string(op) + ": requires n >= 1");
  if (k > n) throw std::invalid_argument(std::string(op) + ": requires k <= n");
}

FactoredInteger fact(std::uint64_t n) { return factorial_factored(n); }

}  // namespace

DivisibilityCertificate certify_theorem1(std::uint64_t n, std::uint64_t k) {
  require_range(n, k, "certify_theorem1");
  const Summand a = summand(n, k);
  const FactoredInteger divisor = sequence_divisor_factored(n);

  DivisibilityCertificate cert;
  cert.n = n;
  cert.k = k;
  auto sieve = shared_sieve(static_cast<std::uint32_t>(6 * n));
  for (Prime p : sieve->primes()) {
    if (p > 6 * n) break;
    PrimeMargin margin{p, a.factored.exponent(p), divisor.exponent(p)};
    if (margin.numerator == 0 && margin.denominator == 0) continue;
    if (fault_injected("certify_theorem1") && cert.margins.empty()) {
      margin.numerator = margin.denominator - 1;
    }
    if (margin.margin() < 0) {
      auto params = nk(n, k);
      params["p"] = p;
      throw FalsificationError("certify_theorem1", params,
                               "negative valuation margin at p=" + std::to_string(p));
    }
    cert.margins.push_back(margin);
  }

  cert.quotient = fi_to_integer(a.factored / divisor);

  // Cross-check against the rewritten form from the proof.
  const FactoredInteger bracket = fact(6 * k) * fact(6 * n - 6 * k) /
                                  (fact(3 * k) * fact(3 * n - 3 * k) * fact(3 * n));
  Rational rewritten = fi_to_rational(bracket);
  rewritten *= Rational(binomial(2 * n, 2 * k) * binomial(n, k));
  rewritten /= Rational(BigInteger(2 * n - 1));
  if (rewritten != Rational(cert.quotient)) {
    throw FalsificationError("certify_theorem1", nk(n, k), "quotient disagrees with rewritten form");
  }

  const BigInteger cnk = binomial(n, k);
  cert.cnk_divides = mpz_divisible_p(cert.quotient.get_mpz_t(), cnk.get_mpz_t()) != 0;
  if (!cert.cnk_divides) {
    throw FalsificationError("certify_theorem1", nk(n, k), "C(n,k) does not divide the quotient");
  }
  return cert;
}

bool check_lemma1(std::uint64_t m, std::uint64_t n, std::uint64_t k) {
  if (m < 1) throw std::invalid_argument("check_lemma1: requires m >= 1");
  require_range(n, k, "check_lemma1");
  return fi_is_integral(general_product(m, n, k) / binomial_factored(m * n, n));
}

bool check_eq_mkmk(std::uint64_t m, std::uint64_t n, std::uint64_t k) {
  if (m < 1) throw std::invalid_argument("check_eq_mkmk: requires m >= 1");
  require_range(n, k, "check_eq_mkmk");
  const std::uint64_t j = n - k;
  // Left side from plain big-integer binomials.
  Rational lhs(binomial(2 * m * k, m * k) * binomial(m * k, k) * binomial(2 * m * j, m * j) *
                   binomial(m * j, j),
               binomial(m * n, n));
  lhs.canonicalize();
  // Right side: factored super-Catalan-like bracket times two binomials.
  const FactoredInteger bracket = fact(2 * m * k) * fact(2 * m * n - 2 * m * k) /
                                  (fact(m * k) * fact(m * n - m * k) * fact(m * n));
  Rational rhs = fi_to_rational(bracket);
  rhs *= Rational(binomial((m - 1) * n, (m - 1) * k) * binomial(n, k));
  return lhs == rhs;
}

Lemma2Witness check_lemma2(std::uint64_t n, std::uint64_t k) {
  require_range(n, k, "check_lemma2");
  Lemma2Witness w;
  w.n = n;
  w.k = k;
  w.factored_ratio = fact(6 * k) * fact(6 * n - 6 * k) * fact(2 * n) * fact(2 * n - 2) /
                     (fact(3 * k) * fact(3 * n - 3 * k) * fact(3 * n) * fact(2 * k) *
                      fact(2 * n - 2 * k) * fact(2 * n - 1));
  w.integral = fi_is_integral(w.factored_ratio);
  return w;
}

bool check_corollary(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("check_corollary: requires n >= 1");
  const BigInteger c = binomial(6 * n, 3 * n);
  return mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(2 * n - 1)) != 0;
}

std::pair<std::int64_t, std::int64_t> floor_lhs_rhs(std::uint64_t m, std::uint64_t n, std::uint64_t k) {
  if (m < 2) throw std::invalid_argument("floor_lhs_rhs: requires m >= 2");
  require_range(n, k, "floor_lhs_rhs");
  // All numerators are >= 0 for n >= 1, so integer division is the floor.
  auto f = [m](std::uint64_t x) { return static_cast<std::int64_t>(x / m); };
  std::int64_t lhs = f(6 * k) + f(6 * n - 6 * k) + f(2 * n) + f(2 * n - 2);
  std::int64_t rhs = f(3 * k) + f(3 * n - 3 * k) + f(3 * n) + f(2 * k) + f(2 * n - 2 * k) + f(2 * n - 1);
  return {lhs, rhs};
}

bool in_floor_exception_set(std::uint64_t m, std::uint64_t n, std::uint64_t k) {
  return m == 3 && n % 3 == 2 && k % 3 != 1;
}

FloorScanReport scan_floor_inequality(std::uint64_t m_max, std::uint64_t n_max, unsigned jobs) {
  if (m_max < 2 || n_max < 1) throw std::invalid_argument("scan_floor_inequality: empty range");
  FloorScanReport report;
  report.m_range = {2, m_max};
  report.n_range = {1, n_max};

  struct Slice {
    std::vector<FloorViolation> violations;
    std::uint64_t exception_points = 0;
    bool tight = true;
  };
  std::vector<Slice> slices(m_max - 1);
  parallel_for(slices.size(), jobs, [&](std::size_t i) {
    const std::uint64_t m = i + 2;
    Slice& slice = slices[i];
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      for (std::uint64_t k = 0; k <= n; ++k) {
        auto [lhs, rhs] = floor_lhs_rhs(m, n, k);
        bool excepted = in_floor_exception_set(m, n, k);
        if (excepted) ++slice.exception_points;
        if (lhs < rhs) {
          slice.violations.push_back({m, n, k});
        } else if (excepted) {
          slice.tight = false;
        }
      }
    }
  });
  for (auto& slice : slices) {
    for (const auto& v : slice.violations) {
      if (!in_floor_exception_set(v.m, v.n, v.k)) report.all_in_exception_set = false;
      report.violations.push_back(v);
    }
    report.exception_points += slice.exception_points;
    report.exception_set_tight = report.exception_set_tight && slice.tight;
  }
  return report;
}

bool check_p3_reduction(std::uint64_t n, std::uint64_t k) {
  require_range(n, k, "check_p3_reduction");
  const Rational ratio = fi_to_rational(fact(2 * n) * fact(2 * n - 2) /
                                        (fact(k) * fact(n - k) * fact(n) * fact(2 * n - 1)));
  const BigInteger cnk = binomial(n, k);
  Rational middle(binomial(2 * n, n) * cnk, BigInteger(2 * n - 1));
  middle.canonicalize();
  const BigInteger right = (4 * binomial(2 * n - 2, n - 1) - binomial(2 * n, n)) * cnk;
  const std::uint64_t lhs3 = legendre_unchecked(2 * n, 3) + legendre_unchecked(2 * n - 2, 3);
  const std::uint64_t rhs3 = legendre_unchecked(k, 3) + legendre_unchecked(n - k, 3) +
                             legendre_unchecked(n, 3) + legendre_unchecked(2 * n - 1, 3);
  return ratio == middle && middle == Rational(right) && lhs3 >= rhs3;
}

}  // namespace binomsum
