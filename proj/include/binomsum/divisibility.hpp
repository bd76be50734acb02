#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "binomsum/big_integer.hpp"
#include "binomsum/factored_integer.hpp"

namespace binomsum {

struct PrimeMargin {
  Prime p = 0;
  std::int64_t numerator = 0;    // ord_p A(n,k)
  std::int64_t denominator = 0;  // ord_p (2n-1) C(3n,n)
  std::int64_t margin() const { return numerator - denominator; }
  friend bool operator==(const PrimeMargin&, const PrimeMargin&) = default;
};

/// Witness that (2n-1) C(3n,n) divides A(n,k).
struct DivisibilityCertificate {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  BigInteger quotient;
  /// Only primes where either valuation is nonzero, ascending.
  std::vector<PrimeMargin> margins;
  bool cnk_divides = false;
};

/// Certificate for one (n,k), n >= 1. Throws FalsificationError on a negative margin
/// (naming the prime) or if the quotient disagrees with the rewritten form
/// (1/(2n-1)) (6k)!(6n-6k)!/((3k)!(3n-3k)!(3n)!) C(2n,2k) C(n,k).
DivisibilityCertificate certify_theorem1(std::uint64_t n, std::uint64_t k);

/// C(mn,n) | general_product(m,n,k).
bool check_lemma1(std::uint64_t m, std::uint64_t n, std::uint64_t k);

/// general_product(m,n,k) / C(mn,n) equals
/// (2mk)!(2mn-2mk)!/((mk)!(mn-mk)!(mn)!) C((m-1)n,(m-1)k) C(n,k), as exact rationals.
bool check_eq_mkmk(std::uint64_t m, std::uint64_t n, std::uint64_t k);

struct Lemma2Witness {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  /// (6k)!(6n-6k)!(2n)!(2n-2)! / ((3k)!(3n-3k)!(3n)!(2k)!(2n-2k)!(2n-1)!)
  FactoredInteger factored_ratio;
  bool integral = false;
};

Lemma2Witness check_lemma2(std::uint64_t n, std::uint64_t k);

/// (2n-1) | C(6n,3n), by big-integer remainder.
bool check_corollary(std::uint64_t n);

/// Both sides of the floor inequality
///   [6k/m]+[(6n-6k)/m]+[2n/m]+[(2n-2)/m] >= [3k/m]+[(3n-3k)/m]+[3n/m]+[2k/m]+[(2n-2k)/m]+[(2n-1)/m].
/// Requires m >= 2, n >= 1, k <= n.
std::pair<std::int64_t, std::int64_t> floor_lhs_rhs(std::uint64_t m, std::uint64_t n, std::uint64_t k);

/// m = 3, n = 2 (mod 3), k = 0 or 2 (mod 3).
bool in_floor_exception_set(std::uint64_t m, std::uint64_t n, std::uint64_t k);

struct FloorViolation {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  friend bool operator==(const FloorViolation&, const FloorViolation&) = default;
};

struct FloorScanReport {
  std::pair<std::uint64_t, std::uint64_t> m_range;
  std::pair<std::uint64_t, std::uint64_t> n_range;
  /// Sorted by (m, n, k).
  std::vector<FloorViolation> violations;
  bool all_in_exception_set = true;
  /// Number of exception-set points inside the box, and whether each one is
  /// actually a violation (i.e. the exception set is exactly the failure set).
  std::uint64_t exception_points = 0;
  bool exception_set_tight = true;
};

FloorScanReport scan_floor_inequality(std::uint64_t m_max, std::uint64_t n_max, unsigned jobs = 1);

/// (2n)!(2n-2)!/(k!(n-k)!n!(2n-1)!) = C(2n,n)C(n,k)/(2n-1) = (4C(2n-2,n-1)-C(2n,n))C(n,k)
/// and ord_3(2n)!+ord_3(2n-2)! >= ord_3 k!+ord_3(n-k)!+ord_3 n!+ord_3(2n-1)!.
bool check_p3_reduction(std::uint64_t n, std::uint64_t k);

}  // namespace binomsum
