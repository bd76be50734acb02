#include "binomsum/sequences.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "binomsum/binomial.hpp"
#include "binomsum/errors.hpp"
#include "binomsum/parallel.hpp"
#include "binomsum/valuation.hpp"

namespace binomsum {

namespace {

std::uint32_t sieve_bound(std::uint64_t n) {
  return static_cast<std::uint32_t>(std::max<std::uint64_t>(n, 2));
}

// ord_p of (6j)! / ((3j)! (2j)! j!) for every prime <= 6 max_j, one j at a time.
// Primes with p^2 > 6 max_j have ord_p(i!) = floor(i/p) and skip the tables.
class HalfSummandValuations {
 public:
  explicit HalfSummandValuations(std::uint64_t max_j)
      : sieve_(shared_sieve(sieve_bound(6 * max_j))) {
    const std::uint64_t top = 6 * max_j;
    for (Prime p : sieve_->primes()) {
      if (p > top) break;
      if (static_cast<std::uint64_t>(p) * p <= top) {
        tables_.emplace_back(p).extend_to(top);
      } else {
        large_.push_back(p);
      }
    }
  }

  FactoredInteger factored(std::uint64_t j) const {
    std::vector<FactoredInteger::Term> terms;
    const std::uint64_t top = 6 * j;
    for (const auto& table : tables_) {
      if (table.prime() > top) break;
      std::int64_t e = std::int64_t{table.at(6 * j)} - table.at(3 * j) - table.at(2 * j) - table.at(j);
      if (e != 0) terms.emplace_back(table.prime(), e);
    }
    for (Prime p : large_) {
      if (p > top) break;
      std::int64_t e = static_cast<std::int64_t>(6 * j / p) - static_cast<std::int64_t>(3 * j / p) -
                       static_cast<std::int64_t>(2 * j / p) - static_cast<std::int64_t>(j / p);
      if (e != 0) terms.emplace_back(p, e);
    }
    return FactoredInteger(1, std::move(terms));
  }

 private:
  std::shared_ptr<const PrimeSieve> sieve_;
  std::vector<ValuationTable> tables_;
  std::vector<Prime> large_;
};

void require_k_le_n(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    throw std::invalid_argument("k > n (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
}

SequenceValue divide_out(std::uint64_t n, BigInteger sum) {
  SequenceValue out;
  out.n = n;
  out.divisor = fi_to_integer(sequence_divisor_factored(n));
  out.sum = std::move(sum);
  BigInteger remainder;
  count_bigint_ops();
  mpz_tdiv_qr(out.s.get_mpz_t(), remainder.get_mpz_t(), out.sum.get_mpz_t(), out.divisor.get_mpz_t());
  if (fault_injected("s")) remainder += 1;
  if (sgn(remainder) != 0) {
    throw FalsificationError("s", {{"n", static_cast<std::int64_t>(n)}}, "integrality violated");
  }
  return out;
}

}  // namespace

FactoredInteger half_summand_factored(std::uint64_t j) {
  return HalfSummandValuations(j).factored(j);
}

HalfSummandTable::HalfSummandTable(std::uint64_t max_j, unsigned jobs)
    : factored_(max_j + 1), values_(max_j + 1) {
  HalfSummandValuations valuations(max_j);
  parallel_for(max_j + 1, jobs, [&](std::size_t j) {
    factored_[j] = valuations.factored(j);
    values_[j] = fi_to_integer(factored_[j]);
  });
  for (const auto& v : values_) peak_bits_ = std::max(peak_bits_, mpz_sizeinbase(v.get_mpz_t(), 2));
  // The products in inner_sum are twice as wide as the largest half-summand.
  peak_bits_ *= 2;
}

BigInteger HalfSummandTable::inner_sum(std::uint64_t n) const {
  if (n > max_j()) throw std::out_of_range("inner_sum: n beyond table");
  BigInteger sum = 0;
  for (std::uint64_t k = 0; k <= n; ++k) {
    mpz_addmul(sum.get_mpz_t(), values_[k].get_mpz_t(), values_[n - k].get_mpz_t());
  }
  count_bigint_ops(n + 1);
  return sum;
}

SuperCatalanValue super_catalan(std::uint64_t a, std::uint64_t b) {
  auto ratio = factorial_factored(2 * a) * factorial_factored(2 * b) /
               (factorial_factored(a) * factorial_factored(b) * factorial_factored(a + b));
  if (!fi_is_integral(ratio)) {
    throw FalsificationError("super_catalan",
                             {{"a", static_cast<std::int64_t>(a)}, {"b", static_cast<std::int64_t>(b)}},
                             "not an integer: " + to_string(ratio));
  }
  return {a, b, fi_to_integer(ratio)};
}

Summand summand(std::uint64_t n, std::uint64_t k) {
  require_k_le_n(n, k);
  HalfSummandValuations valuations(n);
  Summand out;
  out.n = n;
  out.k = k;
  out.factored = valuations.factored(k) * valuations.factored(n - k);
  out.value = fi_to_integer(out.factored);
  return out;
}

BigInteger inner_sum(std::uint64_t n) { return HalfSummandTable(n).inner_sum(n); }

FactoredInteger sequence_divisor_factored(std::uint64_t n) {
  return FactoredInteger::from_integer(2 * static_cast<std::int64_t>(n) - 1) *
         binomial_factored(3 * n, n);
}

SequenceValue s(std::uint64_t n) { return s(n, HalfSummandTable(n)); }

SequenceValue s(std::uint64_t n, const HalfSummandTable& table) {
  return divide_out(n, table.inner_sum(n));
}

std::vector<SequenceValue> s_range(std::uint64_t n_min, std::uint64_t n_max, unsigned jobs) {
  if (n_min > n_max) return {};
  HalfSummandTable table(n_max, jobs);
  std::vector<SequenceValue> out(n_max - n_min + 1);
  parallel_for(out.size(), jobs, [&](std::size_t i) { out[i] = s(n_min + i, table); });
  return out;
}

BigInteger t(std::uint64_t n, std::uint64_t k) {
  if (n < 1) throw std::invalid_argument("t: requires n >= 1");
  require_k_le_n(n, k);
  return t(n, k, HalfSummandTable(n), fi_to_integer(sequence_divisor_factored(n)));
}

BigInteger t(std::uint64_t n, std::uint64_t k, const HalfSummandTable& table, const BigInteger& divisor) {
  if (n < 1) throw std::invalid_argument("t: requires n >= 1");
  require_k_le_n(n, k);
  const BigInteger value = table.value(k) * table.value(n - k);
  BigInteger q;
  BigInteger r;
  count_bigint_ops();
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), value.get_mpz_t(), divisor.get_mpz_t());
  if (sgn(r) != 0) {
    throw FalsificationError("t", {{"n", static_cast<std::int64_t>(n)}, {"k", static_cast<std::int64_t>(k)}},
                             "divisibility violated at (" + std::to_string(n) + "," + std::to_string(k) + ")");
  }
  return q;
}

FactoredInteger general_product(std::uint64_t m, std::uint64_t n, std::uint64_t k) {
  if (m < 1 || n < 1) throw std::invalid_argument("general_product: requires m, n >= 1");
  require_k_le_n(n, k);
  const std::uint64_t j = n - k;
  return binomial_factored(2 * m * k, m * k) * binomial_factored(m * k, k) *
         binomial_factored(2 * m * j, m * j) * binomial_factored(m * j, j);
}

}  // namespace binomsum
