#include "binomsum/factored_integer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "binomsum/valuation.hpp"

namespace binomsum {

namespace {

// Sort, merge duplicates, drop zero exponents.
std::vector<FactoredInteger::Term> normalize(std::vector<FactoredInteger::Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<FactoredInteger::Term> out;
  out.reserve(terms.size());
  for (const auto& [p, e] : terms) {
    if (!out.empty() && out.back().first == p) {
      out.back().second += e;
    } else {
      out.emplace_back(p, e);
    }
    if (out.back().second == 0) out.pop_back();
  }
  return out;
}

template <typename Combine>
std::vector<FactoredInteger::Term> merge_terms(const std::vector<FactoredInteger::Term>& a,
                                               const std::vector<FactoredInteger::Term>& b,
                                               Combine combine) {
  std::vector<FactoredInteger::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    Prime p;
    std::int64_t ea = 0;
    std::int64_t eb = 0;
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      p = ia->first;
      ea = (ia++)->second;
    } else if (ia == a.end() || ib->first < ia->first) {
      p = ib->first;
      eb = (ib++)->second;
    } else {
      p = ia->first;
      ea = (ia++)->second;
      eb = (ib++)->second;
    }
    if (std::int64_t e = combine(ea, eb); e != 0) out.emplace_back(p, e);
  }
  return out;
}

}  // namespace

FactoredInteger::FactoredInteger(int sign, std::vector<Term> terms)
    : sign_(sign < 0 ? -1 : (sign > 0 ? 1 : 0)) {
  if (sign_ != 0) terms_ = normalize(std::move(terms));
}

FactoredInteger::FactoredInteger(std::initializer_list<Term> terms)
    : FactoredInteger(1, std::vector<Term>(terms)) {}

FactoredInteger FactoredInteger::zero() { return FactoredInteger(0, {}); }

FactoredInteger FactoredInteger::from_integer(std::int64_t value) {
  if (value == 0) return zero();
  std::uint64_t rest = value < 0 ? -static_cast<std::uint64_t>(value) : value;
  std::vector<Term> terms;
  for (std::uint64_t d = 2; d * d <= rest; ++d) {
    if (rest % d != 0) continue;
    std::int64_t e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    terms.emplace_back(static_cast<Prime>(d), e);
  }
  if (rest > 1) terms.emplace_back(static_cast<Prime>(rest), 1);
  return FactoredInteger(value < 0 ? -1 : 1, std::move(terms));
}

std::int64_t FactoredInteger::exponent(Prime p) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                             [](const Term& t, Prime q) { return t.first < q; });
  return (it != terms_.end() && it->first == p) ? it->second : 0;
}

FactoredInteger FactoredInteger::operator-() const {
  FactoredInteger r = *this;
  r.sign_ = -r.sign_;
  return r;
}

FactoredInteger fi_mul(const FactoredInteger& a, const FactoredInteger& b) {
  if (a.is_zero() || b.is_zero()) return FactoredInteger::zero();
  auto terms = merge_terms(a.terms(), b.terms(), [](auto x, auto y) { return x + y; });
  return FactoredInteger(a.sign() * b.sign(), std::move(terms));
}

FactoredInteger fi_div(const FactoredInteger& a, const FactoredInteger& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_zero()) return FactoredInteger::zero();
  auto terms = merge_terms(a.terms(), b.terms(), [](auto x, auto y) { return x - y; });
  return FactoredInteger(a.sign() * b.sign(), std::move(terms));
}

FactoredInteger fi_pow(const FactoredInteger& a, std::int64_t e) {
  if (a.is_zero()) {
    if (e < 0) throw std::domain_error("division by zero");
    return e == 0 ? FactoredInteger::one() : FactoredInteger::zero();
  }
  std::vector<FactoredInteger::Term> terms = a.terms();
  for (auto& t : terms) t.second *= e;
  int sign = (a.sign() < 0 && (e % 2 != 0)) ? -1 : 1;
  return FactoredInteger(sign, std::move(terms));
}

bool fi_is_integral(const FactoredInteger& a) {
  return std::all_of(a.terms().begin(), a.terms().end(),
                     [](const auto& t) { return t.second >= 0; });
}

BigInteger product_tree(std::vector<BigInteger> factors) {
  if (factors.empty()) return 1;
  while (factors.size() > 1) {
    std::size_t half = factors.size() / 2;
    for (std::size_t i = 0; i < half; ++i) {
      factors[i] = factors[2 * i] * factors[2 * i + 1];
    }
    if (factors.size() % 2 != 0) {
      factors[half] = std::move(factors.back());
      factors.resize(half + 1);
    } else {
      factors.resize(half);
    }
  }
  return std::move(factors.front());
}

BigInteger fi_to_integer(const FactoredInteger& a) {
  if (!fi_is_integral(a)) throw std::domain_error("negative exponent");
  count_bigint_ops();
  if (a.is_zero()) return 0;
  std::vector<BigInteger> powers;
  powers.reserve(a.terms().size());
  for (const auto& [p, e] : a.terms()) {
    BigInteger pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, static_cast<unsigned long>(e));
    powers.push_back(std::move(pe));
  }
  BigInteger r = product_tree(std::move(powers));
  return a.sign() < 0 ? BigInteger(-r) : r;
}

Rational fi_to_rational(const FactoredInteger& a) {
  if (a.is_zero()) return 0;
  std::vector<FactoredInteger::Term> num;
  std::vector<FactoredInteger::Term> den;
  for (const auto& [p, e] : a.terms()) {
    if (e > 0) {
      num.emplace_back(p, e);
    } else {
      den.emplace_back(p, -e);
    }
  }
  Rational q(fi_to_integer(FactoredInteger(a.sign(), std::move(num))),
             fi_to_integer(FactoredInteger(1, std::move(den))));
  q.canonicalize();
  return q;
}

double fi_log(const FactoredInteger& a) {
  if (a.sign() <= 0) throw std::domain_error("log of a non-positive value");
  // Neumaier summation.
  double sum = 0.0;
  double compensation = 0.0;
  for (const auto& [p, e] : a.terms()) {
    double term = static_cast<double>(e) * std::log(static_cast<double>(p));
    double t = sum + term;
    if (std::fabs(sum) >= std::fabs(term)) {
      compensation += (sum - t) + term;
    } else {
      compensation += (term - t) + sum;
    }
    sum = t;
  }
  return sum + compensation;
}

std::string to_string(const FactoredInteger& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  out << (a.sign() < 0 ? '-' : '+');
  if (a.terms().empty()) {
    out << '1';
    return out.str();
  }
  bool first = true;
  for (const auto& [p, e] : a.terms()) {
    if (!first) out << " * ";
    out << p << '^' << e;
    first = false;
  }
  return out.str();
}

}  // namespace binomsum
