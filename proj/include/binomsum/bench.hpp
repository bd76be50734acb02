#pragma once

#include <cstdint>

#include "binomsum/big_integer.hpp"

namespace binomsum {

/// s_n by the textbook route: every binomial as a!/(b!(a-b)!) on full big-integer
/// factorials, recomputed for each summand.
BigInteger naive_s(std::uint64_t n, std::size_t* peak_bits = nullptr);

struct BenchResult {
  std::uint64_t n = 0;
  double factored_seconds = 0.0;
  double naive_seconds = 0.0;
  std::size_t factored_peak_bits = 0;
  std::size_t naive_peak_bits = 0;
  bool agree = false;
  double speedup() const { return factored_seconds > 0 ? naive_seconds / factored_seconds : 0.0; }
};

/// Times both routes for s_n (best of `repeats` for the factored route).
BenchResult bench_s(std::uint64_t n, unsigned jobs = 1, unsigned repeats = 1);

}  // namespace binomsum
