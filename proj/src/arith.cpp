#include "zs/arith.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>

namespace zs {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  std::int64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::int64_t primitive_root_mod_prime(std::int64_t p) {
  if (p == 2) return 1;
  const auto factors = factorize(p - 1);
  for (std::int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (const auto& [f, e] : factors) {
      if (powmod(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;
}

// x ≡ r mod m, x ≡ 1 mod (q/m), with gcd(m, q/m) = 1.
std::int64_t crt_lift(std::int64_t r, std::int64_t m, std::int64_t q) {
  const std::int64_t other = q / m;
  if (other == 1) return r % q;
  // x = 1 + other * t, need other * t ≡ r - 1 mod m.
  // inverse of other mod m by extended Euclid
  std::int64_t a = other % m, b = m, x0 = 1, x1 = 0;
  while (b != 0) {
    const std::int64_t k = a / b;
    std::tie(a, b) = std::make_pair(b, a - k * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - k * x1);
  }
  std::int64_t inv = x0 % m;
  if (inv < 0) inv += m;
  std::int64_t t = mulmod(((r - 1) % m + m) % m, inv, m);
  return (1 + mulmod(other, t, q)) % q;
}

struct CyclicFactor {
  std::int64_t generator;  // lifted to mod q
  std::int64_t order;
};

std::vector<CyclicFactor> unit_group_factors(std::int64_t q) {
  std::vector<CyclicFactor> out;
  for (const auto& [p, e] : factorize(q)) {
    std::int64_t pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    if (p == 2) {
      if (e == 1) continue;
      out.push_back({crt_lift(pe - 1, pe, q), 2});
      if (e >= 3) out.push_back({crt_lift(5, pe, q), pe / 4});
      continue;
    }
    std::int64_t g = primitive_root_mod_prime(p);
    if (e >= 2 && powmod(g, p - 1, p * p) == 1) g += p;
    out.push_back({crt_lift(g, pe, q), pe / p * (p - 1)});
  }
  return out;
}

// e^{2πi num/den}, exact on the quarter turns.
Complex root_of_unity(std::int64_t num, std::int64_t den) {
  num %= den;
  if (num < 0) num += den;
  if (num == 0) return {1.0, 0.0};
  if (2 * num == den) return {-1.0, 0.0};
  if (4 * num == den) return {0.0, 1.0};
  if (4 * num == 3 * den) return {0.0, -1.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den));
}

}  // namespace

double ArithSieve::von_mangoldt(std::int64_t n) const {
  const std::uint32_t p = prime_power_base[static_cast<std::size_t>(n)];
  return p == 0 ? 0.0 : std::log(static_cast<double>(p));
}

std::size_t sieve_bytes(std::int64_t limit) {
  const auto n = static_cast<std::size_t>(limit) + 1;
  return n * (sizeof(std::int8_t) + 2 * sizeof(std::uint32_t));
}

ArithSieve build_sieve(std::int64_t limit, std::size_t memory_budget) {
  if (limit < 1 || limit > kMaxSieveLimit)
    throw RangeError("sieve limit must lie in [1, 1e8], got " + std::to_string(limit));
  if (sieve_bytes(limit) > memory_budget)
    throw CapacityError("sieve of limit " + std::to_string(limit) + " needs " +
                        std::to_string(sieve_bytes(limit)) + " bytes, budget is " +
                        std::to_string(memory_budget));

  ArithSieve s;
  s.limit = limit;
  const auto size = static_cast<std::size_t>(limit) + 1;
  s.mobius.assign(size, 1);
  s.totient.resize(size);
  std::iota(s.totient.begin(), s.totient.end(), 0u);
  s.prime_power_base.assign(size, 0);
  s.mobius[0] = 0;

  for (std::int64_t p = 2; p <= limit; ++p) {
    // untouched by every smaller prime, hence prime
    if (s.totient[static_cast<std::size_t>(p)] != static_cast<std::uint32_t>(p)) continue;
    for (std::int64_t j = p; j <= limit; j += p) {
      auto& t = s.totient[static_cast<std::size_t>(j)];
      t = t / static_cast<std::uint32_t>(p) * static_cast<std::uint32_t>(p - 1);
      s.mobius[static_cast<std::size_t>(j)] = static_cast<std::int8_t>(-s.mobius[static_cast<std::size_t>(j)]);
    }
    if (p <= limit / p) {
      for (std::int64_t j = p * p; j <= limit; j += p * p) s.mobius[static_cast<std::size_t>(j)] = 0;
    }
    for (std::int64_t pk = p;; pk *= p) {
      s.prime_power_base[static_cast<std::size_t>(pk)] = static_cast<std::uint32_t>(p);
      if (pk > limit / p) break;
    }
  }
  return s;
}

int mobius_of(std::int64_t n) {
  if (n < 1) throw RangeError("mobius_of: n must be >= 1");
  int sign = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

double von_mangoldt_of(std::int64_t n) {
  if (n < 1) throw RangeError("von_mangoldt_of: n must be >= 1");
  const auto f = factorize(n);
  return f.size() == 1 ? std::log(static_cast<double>(f.front().first)) : 0.0;
}

std::int64_t totient_of(std::int64_t n) {
  if (n < 1) throw RangeError("totient_of: n must be >= 1");
  std::int64_t result = n;
  for (const auto& [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

bool CharacterTable::is_principal() const {
  for (std::int64_t r = 0; r < modulus; ++r) {
    const Complex v = values[static_cast<std::size_t>(r)];
    const bool unit = std::gcd(r, modulus) == 1;
    if (unit ? v != Complex(1.0) : v != Complex(0.0)) return false;
  }
  return true;
}

bool CharacterTable::is_real() const {
  for (const Complex& v : values)
    if (v.imag() != 0.0) return false;
  return true;
}

std::int64_t character_count(std::int64_t q) {
  if (q < 1) throw RangeError("character modulus must be >= 1");
  return totient_of(q);
}

CharacterTable character(std::int64_t q, std::int64_t index) {
  if (q < 1 || q > 10'000'000) throw RangeError("character modulus must lie in [1, 1e7]");
  const std::int64_t count = character_count(q);
  if (index < 0 || index >= count)
    throw RangeError("character index " + std::to_string(index) + " outside [0, " +
                     std::to_string(count) + ") for modulus " + std::to_string(q));

  const auto factors = unit_group_factors(q);
  std::int64_t lcm = 1;
  for (const auto& f : factors) lcm = std::lcm(lcm, f.order);

  // exponent digits of the index, least significant factor first
  std::vector<std::int64_t> digits;
  std::int64_t rest = index;
  for (const auto& f : factors) {
    digits.push_back(rest % f.order);
    rest /= f.order;
  }

  CharacterTable chi;
  chi.modulus = q;
  chi.values.assign(static_cast<std::size_t>(q), Complex(0.0));
  if (q == 1) {
    chi.values[0] = 1.0;
    return chi;
  }

  // walk every exponent vector; element ∏ g_i^{e_i} gets phase Σ d_i e_i / ord_i
  std::vector<std::int64_t> exps(factors.size(), 0);
  while (true) {
    std::int64_t element = 1 % q;
    std::int64_t phase = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      element = mulmod(element, powmod(factors[i].generator, exps[i], q), q);
      phase = (phase + mulmod(digits[i] * exps[i] % factors[i].order, lcm / factors[i].order, lcm)) % lcm;
    }
    chi.values[static_cast<std::size_t>(element)] = root_of_unity(phase, lcm);

    std::size_t i = 0;
    for (; i < factors.size(); ++i) {
      if (++exps[i] < factors[i].order) break;
      exps[i] = 0;
    }
    if (i == factors.size()) break;
  }
  return chi;
}

bool is_valid_character(const CharacterTable& chi, double tol) {
  const std::int64_t q = chi.modulus;
  if (q < 1 || static_cast<std::int64_t>(chi.values.size()) != q) return false;
  for (std::int64_t a = 0; a < q; ++a) {
    const Complex va = chi.values[static_cast<std::size_t>(a)];
    if (std::gcd(a, q) != 1) {
      if (std::abs(va) > tol) return false;
      continue;
    }
    if (std::abs(std::abs(va) - 1.0) > tol) return false;
    for (std::int64_t b = 0; b < q; ++b) {
      const Complex lhs = chi((a * b) % q);
      const Complex rhs = va * chi.values[static_cast<std::size_t>(b)];
      if (std::abs(lhs - rhs) > tol) return false;
    }
  }
  return true;
}

}  // namespace zs
