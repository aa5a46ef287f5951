#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace qshor::arith {

/// Coefficients of a*x + b*y = g with g = gcd(a, b).
struct BezoutSolution {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::uint64_t g = 0;
};

struct PerfectPower {
  std::uint64_t base = 0;
  std::uint32_t exponent = 0;
};

/// Euclid's algorithm. Throws std::invalid_argument when both inputs are zero.
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Extended Euclid. Inputs must not both be zero and must fit in int64.
BezoutSolution diophantine_equation(std::uint64_t a, std::uint64_t b);

/// Returns x in [1, N) with a*x = 1 (mod N). Throws when gcd(a, N) != 1
/// ("no inverse") or N < 2.
std::uint64_t modular_multiplicative_inverse(std::uint64_t a, std::uint64_t N);

/// y^x mod N by square-and-multiply; returns 0 for N == 1.
std::uint64_t mod_pow(std::uint64_t y, std::uint64_t x, std::uint64_t N);

/// Element i is y^(2^i) mod N, the multiplier applied when exponent bit i is set.
std::vector<std::uint64_t> precompute_multipliers(std::uint64_t y, std::uint64_t N, std::uint32_t n_x);

/// Denominators (> 1, < N, ascending, unique) of the continued-fraction
/// convergents of outcome / 2^n_x.
std::vector<std::uint64_t> order_candidates(std::uint64_t outcome, std::uint32_t n_x, std::uint64_t N);

/// Some (base, exponent >= 2) with base^exponent == N, smallest base first.
std::optional<PerfectPower> is_perfect_power(std::uint64_t N);

/// Trial division.
bool is_prime(std::uint64_t N);

/// Distinct prime factors in ascending order, by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t N);

/// Smallest r >= 1 with y^r = 1 (mod N), by direct iteration. Requires gcd(y, N) = 1.
std::uint64_t classical_order(std::uint64_t y, std::uint64_t N);

}  // namespace qshor::arith
