#include "qshor/arith.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace qshor::arith {
namespace {

constexpr std::uint64_t kMaxSigned = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t N) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % N);
}

// base^exp, saturating at limit + 1.
unsigned __int128 bounded_pow(std::uint64_t base, std::uint32_t exp, std::uint64_t limit) {
  unsigned __int128 acc = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > limit) return static_cast<unsigned __int128>(limit) + 1;
  }
  return acc;
}

}  // namespace

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  if (a == 0 && b == 0) throw std::invalid_argument("gcd(0, 0) is undefined");
  while (b != 0) {
    const std::uint64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

BezoutSolution diophantine_equation(std::uint64_t a, std::uint64_t b) {
  if (a == 0 && b == 0) throw std::invalid_argument("diophantine_equation(0, 0) has no gcd");
  if (a > kMaxSigned || b > kMaxSigned) throw std::invalid_argument("diophantine_equation: input exceeds int64");
  // Invariant: old_r = a*old_s + b*old_t, r = a*s + b*t.
  std::int64_t old_r = static_cast<std::int64_t>(a), r = static_cast<std::int64_t>(b);
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  return {old_s, old_t, static_cast<std::uint64_t>(old_r)};
}

std::uint64_t modular_multiplicative_inverse(std::uint64_t a, std::uint64_t N) {
  if (N < 2) throw std::invalid_argument("modular inverse needs N >= 2");
  const BezoutSolution sol = diophantine_equation(a % N, N);
  if (sol.g != 1)
    throw std::invalid_argument("no inverse: gcd(" + std::to_string(a) + ", " + std::to_string(N) +
                                ") = " + std::to_string(sol.g));
  const auto n = static_cast<std::int64_t>(N);
  std::int64_t x = sol.x % n;
  if (x < 0) x += n;
  return static_cast<std::uint64_t>(x);
}

std::uint64_t mod_pow(std::uint64_t y, std::uint64_t x, std::uint64_t N) {
  if (N == 0) throw std::invalid_argument("mod_pow: N must be >= 1");
  if (N == 1) return 0;
  std::uint64_t result = 1;
  std::uint64_t base = y % N;
  while (x > 0) {
    if (x & 1u) result = mul_mod(result, base, N);
    base = mul_mod(base, base, N);
    x >>= 1;
  }
  return result;
}

std::vector<std::uint64_t> precompute_multipliers(std::uint64_t y, std::uint64_t N, std::uint32_t n_x) {
  if (N < 1 || gcd(y, N) != 1)
    throw std::invalid_argument("precompute_multipliers: y=" + std::to_string(y) + " is not coprime to N=" +
                                std::to_string(N));
  std::vector<std::uint64_t> out;
  out.reserve(n_x);
  std::uint64_t m = y % N;
  for (std::uint32_t i = 0; i < n_x; ++i) {
    out.push_back(m);
    m = mul_mod(m, m, N);
  }
  return out;
}

std::vector<std::uint64_t> order_candidates(std::uint64_t outcome, std::uint32_t n_x, std::uint64_t N) {
  if (n_x >= 63) throw std::invalid_argument("order_candidates: n_x too large");
  const std::uint64_t q = std::uint64_t{1} << n_x;
  if (outcome >= q) throw std::invalid_argument("order_candidates: outcome out of range");
  std::vector<std::uint64_t> dens;
  if (outcome == 0) return dens;

  // Convergent denominators k_i = a_i k_{i-1} + k_{i-2}, with k_{-1} = 0, k_{-2} = 1.
  std::uint64_t num = outcome, den = q;
  std::uint64_t k_prev2 = 1, k_prev1 = 0;
  while (den != 0) {
    const std::uint64_t a = num / den;
    const std::uint64_t k = a * k_prev1 + k_prev2;
    if (k >= N) break;
    if (k > 1) dens.push_back(k);
    k_prev2 = std::exchange(k_prev1, k);
    num = std::exchange(den, num % den);
  }
  std::sort(dens.begin(), dens.end());
  dens.erase(std::unique(dens.begin(), dens.end()), dens.end());
  return dens;
}

std::optional<PerfectPower> is_perfect_power(std::uint64_t N) {
  if (N < 2) throw std::invalid_argument("is_perfect_power: N must be >= 2");
  // Largest exponent first, so the reported base is the smallest one.
  for (std::uint32_t e = 63; e >= 2; --e) {
    std::uint64_t lo = 1, hi = std::uint64_t{1} << (64 / e + 1);
    while (lo < hi) {
      const std::uint64_t mid = lo + (hi - lo + 1) / 2;
      if (bounded_pow(mid, e, N) <= N)
        lo = mid;
      else
        hi = mid - 1;
    }
    if (lo >= 2 && bounded_pow(lo, e, N) == N) return PerfectPower{lo, e};
  }
  return std::nullopt;
}

bool is_prime(std::uint64_t N) {
  if (N < 2) return false;
  for (std::uint64_t d = 2; d * d <= N; ++d)
    if (N % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t N) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= N; ++d) {
    if (N % d != 0) continue;
    out.push_back(d);
    while (N % d == 0) N /= d;
  }
  if (N > 1) out.push_back(N);
  return out;
}

std::uint64_t classical_order(std::uint64_t y, std::uint64_t N) {
  if (N < 2 || gcd(y, N) != 1) throw std::invalid_argument("classical_order: y must be coprime to N >= 2");
  std::uint64_t v = y % N;
  std::uint64_t r = 1;
  while (v != 1) {
    v = mul_mod(v, y, N);
    ++r;
  }
  return r;
}

}  // namespace qshor::arith
