#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "qshor/arith.hpp"

using namespace qshor::arith;

namespace {

std::uint64_t brute_gcd(std::uint64_t a, std::uint64_t b) {
  std::uint64_t best = 0;
  for (std::uint64_t d = 1; d <= std::max(a, b); ++d)
    if (a % d == 0 && b % d == 0) best = d;
  return best;
}

bool contains(const std::vector<std::uint64_t>& v, std::uint64_t x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

TEST_CASE("gcd examples") {
  CHECK(gcd(6, 4) == 2);
  CHECK(gcd(9, 0) == 9);
  CHECK(gcd(35, 21) == brute_gcd(35, 21));
  CHECK_THROWS_AS(gcd(0, 0), std::invalid_argument);
}

TEST_CASE("diophantine examples") {
  const auto s = diophantine_equation(5, 0);
  CHECK(s.x == 1);
  CHECK(s.y == 0);
  CHECK(s.g == 5);
  for (auto [a, b] : {std::pair<std::int64_t, std::int64_t>{3, 5}, {6, 4}}) {
    const auto r = diophantine_equation(a, b);
    CHECK(a * r.x + b * r.y == static_cast<std::int64_t>(r.g));
    CHECK(r.g == brute_gcd(a, b));
  }
  CHECK_THROWS_AS(diophantine_equation(0, 0), std::invalid_argument);
}

TEST_CASE("property: Bezout identity for all a, b <= 1000 (strided)") {
  for (std::int64_t a = 0; a <= 1000; a += 7)
    for (std::int64_t b = 0; b <= 1000; b += 11) {
      if (a == 0 && b == 0) continue;
      const auto r = diophantine_equation(a, b);
      REQUIRE(a * r.x + b * r.y == static_cast<std::int64_t>(r.g));
      REQUIRE(r.g == std::gcd(a, b));
    }
}

TEST_CASE("modular inverse examples and property") {
  CHECK(modular_multiplicative_inverse(1, 7) == 1);
  CHECK(modular_multiplicative_inverse(3, 5) == 2);
  CHECK(modular_multiplicative_inverse(7, 15) == 13);
  CHECK_THROWS_WITH_AS(modular_multiplicative_inverse(6, 15), doctest::Contains("no inverse"),
                       std::invalid_argument);
  for (std::uint64_t N = 2; N <= 1000; N += 13)
    for (std::uint64_t a = 1; a < N; ++a)
      if (std::gcd(a, N) == 1) REQUIRE((a * modular_multiplicative_inverse(a, N)) % N == 1);
}

TEST_CASE("mod_pow examples and naive agreement") {
  CHECK(mod_pow(3, 4, 5) == 1);
  CHECK(mod_pow(7, 0, 11) == 1);
  CHECK(mod_pow(2, 10, 1000) == 24);
  for (std::uint64_t N = 1; N <= 64; ++N)
    for (std::uint64_t y = 0; y <= 64; ++y) {
      std::uint64_t acc = 1 % N;
      for (std::uint64_t x = 0; x <= 64; ++x) {
        REQUIRE(mod_pow(y, x, N) == acc);
        acc = acc * y % N;
      }
    }
}

TEST_CASE("precompute_multipliers examples") {
  CHECK(precompute_multipliers(3, 5, 4) == std::vector<std::uint64_t>{3, 4, 1, 1});
  CHECK(precompute_multipliers(1, 9, 3) == std::vector<std::uint64_t>{1, 1, 1});
  CHECK(precompute_multipliers(2, 5, 3) == std::vector<std::uint64_t>{2, 4, 1});
  CHECK_THROWS_AS(precompute_multipliers(3, 6, 2), std::invalid_argument);
}

TEST_CASE("order_candidates examples") {
  CHECK(order_candidates(0, 8, 5).empty());
  CHECK(contains(order_candidates(64, 8, 5), 4));
  CHECK(contains(order_candidates(192, 8, 5), 4));
  const auto v = order_candidates(171, 9, 21);
  CHECK(std::is_sorted(v.begin(), v.end()));
  for (auto k : v) CHECK(k < 21);
}

TEST_CASE("property: order_candidates recovers r from exact s/r") {
  for (std::uint32_t n_x = 2; n_x <= 12; ++n_x)
    for (std::uint64_t r = 2; r <= (std::uint64_t{1} << n_x); r *= 2)
      for (std::uint64_t s = 1; s < r; s += 2)
        for (std::uint64_t N : {r + 1, 2 * r + 3}) {
          const std::uint64_t outcome = s * ((std::uint64_t{1} << n_x) / r);
          REQUIRE(contains(order_candidates(outcome, n_x, N), r));
        }
}

TEST_CASE("is_perfect_power examples") {
  const auto p8 = is_perfect_power(8);
  REQUIRE(p8);
  CHECK(p8->base == 2);
  CHECK(p8->exponent == 3);
  CHECK_FALSE(is_perfect_power(15));
  const auto p49 = is_perfect_power(49);
  REQUIRE(p49);
  CHECK(p49->base == 7);
  CHECK(p49->exponent == 2);
  for (std::uint64_t N = 2; N < 5000; ++N) {
    bool brute = false;
    for (std::uint64_t a = 2; a * a <= N && !brute; ++a)
      for (std::uint64_t v = a * a; v <= N; v *= a)
        if (v == N) brute = true;
    const auto p = is_perfect_power(N);
    REQUIRE(p.has_value() == brute);
    if (p) {
      std::uint64_t v = 1;
      for (std::uint32_t i = 0; i < p->exponent; ++i) v *= p->base;
      REQUIRE(v == N);
    }
  }
}

TEST_CASE("classical_order and primes") {
  CHECK(classical_order(3, 5) == 4);
  CHECK(classical_order(4, 15) == 2);
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(21));
  CHECK(prime_factors(12) == std::vector<std::uint64_t>{2, 3});
}
