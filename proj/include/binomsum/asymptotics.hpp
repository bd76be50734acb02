#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "binomsum/big_integer.hpp"

namespace binomsum {

class HalfSummandTable;

/// A(n,k)/A(n,k+1) - 1 against (36nk+31n-36k^2-36k-5)(n-2k-1) / ((6k+5)(6k+1)(n-k)^2).
struct RatioWitness {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  Rational lhs;
  Rational rhs;
};

/// Requires n >= 2 and 2k < n. Throws FalsificationError if the sides differ.
RatioWitness ratio_identity(std::uint64_t n, std::uint64_t k);
RatioWitness ratio_identity(std::uint64_t n, std::uint64_t k, const HalfSummandTable& table);

/// A(n,0) >= A(n,1) >= ... >= A(n, ceil(n/2)), exact comparison. Requires n >= 2.
bool check_monotone(std::uint64_t n);
bool check_monotone(std::uint64_t n, const HalfSummandTable& table);

/// 2 C(6n,3n)/(2n-1) <= s_n <= (n+1) C(6n,3n)/(2n-1).
struct BoundsReport {
  std::uint64_t n = 0;
  Rational lower;
  Rational upper;
  BigInteger s;
  bool lower_tight = false;
  bool upper_tight = false;
};

/// Requires n >= 1. Throws FalsificationError when s_n leaves the bounds.
BoundsReport check_bounds(std::uint64_t n);
/// Same, given s_n already computed.
BoundsReport check_bounds(std::uint64_t n, const BigInteger& s_n);

struct AsymptoticsSample {
  std::uint64_t n = 0;
  double log_s = 0.0;
  /// exp(log_s / n)
  double nth_root = 0.0;
  /// s_{n+1} / s_n
  double step_ratio = 0.0;
  /// n-th roots of the two bound edges, from fi_log of their factored forms.
  double lower_root = 0.0;
  double upper_root = 0.0;
};

/// Sample at a single n >= 1.
AsymptoticsSample sample_at(std::uint64_t n);
/// Samples at n = stride, 2 stride, ..., <= n_max.
std::vector<AsymptoticsSample> sample_asymptotics(std::uint64_t n_max, std::uint64_t stride,
                                                  unsigned jobs = 1);

/// ln of the two bound edges, log(2 C(6n,3n)/(2n-1)) and log((n+1) C(6n,3n)/(2n-1)).
std::pair<double, double> log_bound_edges(std::uint64_t n);

/// |n! / (sqrt(2 pi n) (n/e)^n) - 1|, evaluated in the log domain.
double stirling_check(std::uint64_t n);

struct PiPartialSum {
  std::uint64_t N = 0;
  /// sum_{n=1}^{N} n inner_sum(n) / 864^n
  Rational value;
  /// Upper bound on the tail sum_{n>N}: T_{N+1} / (1 - ratio_bound).
  Rational remainder_bound;
  /// Checked bound on consecutive term ratios for N+1 <= n <= checked_through.
  Rational ratio_bound;
  std::uint64_t checked_through = 0;
};

/// Requires N >= 1. Throws std::runtime_error("term-ratio precheck failed") if
/// some checked ratio exceeds 3/5.
PiPartialSum pi_partial_sum(std::uint64_t N);

/// 1/pi to 50 significant digits.
inline constexpr std::string_view kInversePi50 = "0.31830988618379067153776752674502872406891929148091";
/// kInversePi50 as an exact rational.
Rational inverse_pi_reference();

/// -log10 of the relative difference between two positive rationals (capped at 100).
double agreeing_digits(const Rational& a, const Rational& b);

}  // namespace binomsum
