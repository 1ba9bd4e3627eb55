#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "zs/arith.hpp"

using namespace zs;

namespace {

// μ, φ by factorization and gcd counting.
int mobius_by_factoring(std::int64_t n) {
  int sign = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return n > 1 ? -sign : sign;
}

std::int64_t phi_by_gcd(std::int64_t n) {
  std::int64_t c = 0;
  for (std::int64_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

}  // namespace

TEST_CASE("sieve examples") {
  const ArithSieve sv = build_sieve(10);
  const std::vector<int> mu{1, -1, -1, 0, -1, 1, -1, 0, 0, 1};
  const std::vector<int> phi{1, 1, 2, 2, 4, 2, 6, 4, 6, 4};
  for (int n = 1; n <= 10; ++n) {
    CHECK(sv.mu(n) == mu[static_cast<std::size_t>(n - 1)]);
    CHECK(sv.mu(n) == mobius_by_factoring(n));
    CHECK(static_cast<int>(sv.phi(n)) == phi[static_cast<std::size_t>(n - 1)]);
    CHECK(static_cast<std::int64_t>(sv.phi(n)) == phi_by_gcd(n));
  }
  const ArithSieve nine = build_sieve(9);
  CHECK(nine.von_mangoldt(8) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(nine.von_mangoldt(9) == doctest::Approx(std::log(3.0)).epsilon(1e-15));
  CHECK(nine.von_mangoldt(6) == 0.0);
  CHECK(nine.von_mangoldt(1) == 0.0);
}

TEST_CASE("divisor-sum identities up to 1e5") {
  const std::int64_t limit = 100'000;
  const ArithSieve sv = build_sieve(limit);
  std::vector<std::int64_t> mu_sum(limit + 1, 0), phi_sum(limit + 1, 0);
  std::vector<double> lambda_sum(limit + 1, 0.0);
  for (std::int64_t d = 1; d <= limit; ++d)
    for (std::int64_t n = d; n <= limit; n += d) {
      mu_sum[n] += sv.mu(d);
      phi_sum[n] += sv.phi(d);
      lambda_sum[n] += sv.von_mangoldt(d);
    }
  bool ok = true;
  for (std::int64_t n = 1; n <= limit; ++n) {
    ok = ok && mu_sum[n] == (n == 1 ? 1 : 0);
    ok = ok && phi_sum[n] == n;
    ok = ok && std::fabs(lambda_sum[n] - std::log(static_cast<double>(n))) <= 1e-12;
  }
  CHECK(ok);
}

TEST_CASE("single-value functions match the sieve") {
  const ArithSieve sv = build_sieve(5000);
  for (std::int64_t n = 1; n <= 5000; ++n) {
    REQUIRE(mobius_of(n) == sv.mu(n));
    REQUIRE(totient_of(n) == static_cast<std::int64_t>(sv.phi(n)));
    REQUIRE(von_mangoldt_of(n) == doctest::Approx(sv.von_mangoldt(n)).epsilon(1e-15));
  }
  CHECK_THROWS_AS(mobius_of(0), RangeError);
}

TEST_CASE("sieve limits") {
  CHECK_THROWS_AS(build_sieve(0), RangeError);
  CHECK_THROWS_AS(build_sieve(kMaxSieveLimit + 1), RangeError);
  CHECK_THROWS_AS(build_sieve(1'000'000, 1024), CapacityError);
  CHECK(sieve_bytes(1000) > 0);
}

TEST_CASE("characters") {
  const CharacterTable trivial = character(1, 0);
  for (int n = 1; n < 20; ++n) CHECK(trivial(n) == Complex(1.0));

  const CharacterTable chi4 = character(4, 1);
  CHECK(chi4(1) == Complex(1.0));
  CHECK(chi4(2) == Complex(0.0));
  CHECK(chi4(3) == Complex(-1.0));
  CHECK(chi4(4) == Complex(0.0));
  CHECK(chi4.is_real());
  CHECK_FALSE(chi4.is_principal());

  const CharacterTable chi3 = character(3, 1);
  CHECK(chi3(1) == Complex(1.0));
  CHECK(chi3(2) == Complex(-1.0));

  CHECK(character(4, 0).is_principal());
  CHECK_THROWS_AS(character(4, 2), RangeError);
  CHECK_THROWS_AS(character(0, 0), RangeError);
  CHECK_FALSE(character(5, 1).is_real());
}

TEST_CASE("character orthogonality") {
  for (std::int64_t q : {3, 4, 5, 7, 8}) {
    const std::int64_t count = character_count(q);
    CHECK(count == totient_of(q));
    for (std::int64_t idx = 0; idx < count; ++idx) {
      const CharacterTable chi = character(q, idx);
      CHECK(is_valid_character(chi));
      Complex total = 0.0;
      for (std::int64_t a = 0; a < q; ++a) total += chi(a);
      if (chi.is_principal())
        CHECK(std::abs(total - static_cast<double>(count)) < 1e-12);
      else
        CHECK(std::abs(total) < 1e-12);
    }
  }
}

TEST_CASE("character tables are distinct") {
  for (std::int64_t q : {5, 8, 12, 15}) {
    const std::int64_t count = character_count(q);
    for (std::int64_t i = 0; i < count; ++i)
      for (std::int64_t k = i + 1; k < count; ++k) {
        const auto a = character(q, i), b = character(q, k);
        double gap = 0.0;
        for (std::int64_t r = 0; r < q; ++r) gap = std::max(gap, std::abs(a(r) - b(r)));
        CHECK(gap > 1e-6);
      }
  }
}
