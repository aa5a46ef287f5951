#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qshor::shor {

struct OrderOptions {
  std::uint32_t max_samples = 16;
  /// 0 samples the exact distribution; otherwise outcomes are drawn from the
  /// histogram of this many simulated shots.
  std::uint32_t shots = 0;
};

struct OrderSearch {
  std::optional<std::uint64_t> r;
  std::vector<std::uint64_t> outcomes;    // one per sample drawn
  std::vector<std::uint64_t> candidates;  // continued-fraction denominators seen
};

/// Order of y modulo N recovered from simulated order finding with an n_x-bit
/// exponent register. Every returned value satisfies y^r = 1 (mod N) and is
/// minimal. Throws std::invalid_argument unless gcd(y, N) = 1.
OrderSearch find_order_traced(std::uint64_t y, std::uint64_t N, std::uint32_t n_x, std::uint64_t seed,
                              const OrderOptions& options = {});

std::optional<std::uint64_t> find_order(std::uint64_t y, std::uint64_t N, std::uint32_t n_x,
                                        std::uint32_t max_samples, std::uint64_t seed);

struct Trial {
  std::uint64_t base = 0;
  bool gcd_shortcut = false;
  std::vector<std::uint64_t> outcomes;
  std::vector<std::uint64_t> candidates;
  std::optional<std::uint64_t> r;
  std::optional<std::uint64_t> factor;
};

struct ShorOutcome {
  std::uint64_t N = 0;
  std::string method;  // even, perfect_power, prime, gcd, order, exhausted
  std::optional<std::uint64_t> factor;
  std::uint32_t trial_count = 0;
  std::vector<Trial> trials;

  /// Last trial, the one that produced the factor when there is one.
  const Trial* last_trial() const { return trials.empty() ? nullptr : &trials.back(); }
};

struct FactorOptions {
  std::uint32_t max_trials = 20;
  OrderOptions order;
};

ShorOutcome factor(std::uint64_t N, std::uint64_t seed, const FactorOptions& options = {});

std::string to_json(const ShorOutcome& outcome);

}  // namespace qshor::shor
