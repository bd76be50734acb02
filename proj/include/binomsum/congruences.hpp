#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace binomsum {

class HalfSummandTable;

enum class CongruenceClaim { Mod8, FermatQuotient, ModPSquared };

std::string_view claim_name(CongruenceClaim claim);

struct CongruenceResult {
  CongruenceClaim claim = CongruenceClaim::Mod8;
  /// n for Mod8, p otherwise.
  std::uint64_t parameter = 0;
  std::uint64_t modulus = 0;
  std::uint64_t lhs_residue = 0;
  std::uint64_t expected_residue = 0;
  bool holds = false;
};

/// s_n mod 8 against 0, n >= 1.
CongruenceResult check_mod8(std::uint64_t n);
CongruenceResult check_mod8(std::uint64_t n, const HalfSummandTable& table);

/// s_{p-1} mod p against floor((p-1)/6) mod p. Throws std::invalid_argument for non-prime p.
CongruenceResult check_fermat_like(std::uint64_t p);
CongruenceResult check_fermat_like(std::uint64_t p, const HalfSummandTable& table);
/// Diagnostic variant: s_{p-1} mod p against floor((p+1)/6) mod p.
CongruenceResult check_fermat_like_shifted(std::uint64_t p, const HalfSummandTable& table);

/// sum_{n<p} n 864^{-n} inner_sum(n) mod p^2 against 0, with 864^{-1} taken mod p^2.
/// Throws std::invalid_argument("hypothesis p > 3 violated") for p <= 3.
CongruenceResult check_mod_p_squared(std::uint64_t p);
CongruenceResult check_mod_p_squared(std::uint64_t p, const HalfSummandTable& table);

/// The same residue from the exact rational sum (common denominator 864^{p-1}),
/// reduced mod p^2 only at the end. Independent cross-check of check_mod_p_squared.
std::uint64_t mod_p_squared_exact(std::uint64_t p);

/// Inverse of a modulo m by extended Euclid; throws std::domain_error if gcd(a, m) != 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

}  // namespace binomsum
