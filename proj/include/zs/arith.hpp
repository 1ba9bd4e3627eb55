#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "zs/core.hpp"

namespace zs {

/// Möbius, von Mangoldt and totient tables for 1 ≤ n ≤ limit.
///
/// Λ is stored as the prime p of n = p^k (0 when n is not a prime power) and
/// expanded to ln p on access; index 0 of every array is unused.
struct ArithSieve {
  std::int64_t limit = 0;
  std::vector<std::int8_t> mobius;
  std::vector<std::uint32_t> totient;
  std::vector<std::uint32_t> prime_power_base;

  int mu(std::int64_t n) const { return mobius[static_cast<std::size_t>(n)]; }
  std::uint32_t phi(std::int64_t n) const { return totient[static_cast<std::size_t>(n)]; }
  double von_mangoldt(std::int64_t n) const;
};

inline constexpr std::int64_t kMaxSieveLimit = 100'000'000;
inline constexpr std::size_t kDefaultSieveBudgetBytes = std::size_t{1} << 30;

/// Bytes needed by build_sieve(limit).
std::size_t sieve_bytes(std::int64_t limit);

/// Sieve of Eratosthenes over [1, limit]. Throws RangeError for limit outside
/// [1, 1e8] and CapacityError when the tables would exceed `memory_budget`.
ArithSieve build_sieve(std::int64_t limit, std::size_t memory_budget = kDefaultSieveBudgetBytes);

// Single values by trial division, for arguments past a sieve's limit.
int mobius_of(std::int64_t n);
double von_mangoldt_of(std::int64_t n);
std::int64_t totient_of(std::int64_t n);

/// A Dirichlet character mod q, tabulated on residues 0..q-1.
struct CharacterTable {
  std::int64_t modulus = 1;
  std::vector<Complex> values{Complex(1.0)};

  Complex operator()(std::int64_t n) const {
    std::int64_t r = n % modulus;
    if (r < 0) r += modulus;
    return values[static_cast<std::size_t>(r)];
  }
  bool is_principal() const;
  bool is_real() const;
};

/// Order of (ℤ/qℤ)*, i.e. the number of characters mod q.
std::int64_t character_count(std::int64_t q);

/// Character number `index` mod q. Index 0 is principal; the rest follow
/// the mixed-radix exponent order of the cyclic factors of (ℤ/qℤ)*, taken
/// prime by prime in increasing order. Throws RangeError on bad q or index.
CharacterTable character(std::int64_t q, std::int64_t index);

/// Exhaustive check of the character axioms: q-periodic tabulation, zero on
/// non-units, completely multiplicative, roots of unity on units.
bool is_valid_character(const CharacterTable& chi, double tol = 1e-12);

}  // namespace zs
