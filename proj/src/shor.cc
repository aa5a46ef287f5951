#include "qshor/shor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "json.hpp"
#include "qshor/arith.hpp"
#include "qshor/simulator.hpp"

namespace qshor::shor {
namespace {

// Divides prime factors out of a verified exponent while y^v = 1 still holds.
std::uint64_t reduce_to_order(std::uint64_t y, std::uint64_t v, std::uint64_t N) {
  for (std::uint64_t p : arith::prime_factors(v))
    while (v % p == 0 && arith::mod_pow(y, v / p, N) == 1) v /= p;
  return v;
}

std::optional<std::uint64_t> order_from_candidates(std::uint64_t y, std::uint64_t N,
                                                   const std::vector<std::uint64_t>& candidates) {
  if (candidates.empty()) return std::nullopt;
  const std::uint64_t bound = 2 * candidates.back();
  std::optional<std::uint64_t> best;
  for (std::uint64_t k : candidates) {
    for (std::uint64_t v = k; v <= bound; v += k) {
      if (arith::mod_pow(y, v, N) == 1) {
        const std::uint64_t r = reduce_to_order(y, v, N);
        if (!best || r < *best) best = r;
        break;
      }
    }
  }
  return best;
}

sim::Distribution shot_histogram(const sim::Distribution& exact, std::uint32_t shots, std::mt19937_64& rng) {
  std::vector<double> counts(exact.size(), 0.0);
  for (std::uint32_t s = 0; s < shots; ++s) counts[exact.sample(rng)] += 1.0;
  for (double& c : counts) c /= shots;
  return sim::Distribution(exact.bits(), std::move(counts));
}

nlohmann::ordered_json optional_json(const std::optional<std::uint64_t>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

OrderSearch find_order_traced(std::uint64_t y, std::uint64_t N, std::uint32_t n_x, std::uint64_t seed,
                              const OrderOptions& options) {
  if (N < 2) throw std::invalid_argument("find_order: N=" + std::to_string(N) + " must be >= 2");
  if (arith::gcd(y, N) != 1)
    throw std::invalid_argument("find_order: y=" + std::to_string(y) + " is not coprime to N=" + std::to_string(N));
  OrderSearch out;
  if (y % N == 1) {
    out.r = 1;
    return out;
  }
  std::mt19937_64 rng(seed);
  sim::Distribution dist = sim::order_finding_distribution(N, y, n_x);
  if (options.shots > 0) dist = shot_histogram(dist, options.shots, rng);

  for (std::uint32_t s = 0; s < options.max_samples; ++s) {
    const std::uint64_t outcome = dist.sample(rng);
    out.outcomes.push_back(outcome);
    const auto candidates = arith::order_candidates(outcome, n_x, N);
    for (std::uint64_t k : candidates)
      if (std::find(out.candidates.begin(), out.candidates.end(), k) == out.candidates.end())
        out.candidates.push_back(k);
    if (auto r = order_from_candidates(y, N, candidates)) {
      out.r = r;
      return out;
    }
  }
  return out;
}

std::optional<std::uint64_t> find_order(std::uint64_t y, std::uint64_t N, std::uint32_t n_x,
                                        std::uint32_t max_samples, std::uint64_t seed) {
  OrderOptions options;
  options.max_samples = max_samples;
  return find_order_traced(y, N, n_x, seed, options).r;
}

ShorOutcome factor(std::uint64_t N, std::uint64_t seed, const FactorOptions& options) {
  if (N < 2) throw std::invalid_argument("factor: N=" + std::to_string(N) + " must be >= 2");
  ShorOutcome out;
  out.N = N;
  if (N % 2 == 0 && N > 2) {
    out.method = "even";
    out.factor = 2;
    return out;
  }
  if (auto pp = arith::is_perfect_power(N)) {
    out.method = "perfect_power";
    out.factor = pp->base;
    return out;
  }
  if (arith::is_prime(N)) {
    out.method = "prime";
    return out;
  }

  const std::uint32_t n = sim::register_width_for(N);
  const std::uint32_t n_x = 2 * n + 2;
  std::mt19937_64 rng(seed);
  for (std::uint32_t trial = 0; trial < options.max_trials; ++trial) {
    Trial t;
    t.base = 2 + rng() % (N - 2);
    ++out.trial_count;
    const std::uint64_t g = arith::gcd(t.base, N);
    if (g > 1) {
      t.gcd_shortcut = true;
      t.factor = g;
      out.trials.push_back(t);
      out.method = "gcd";
      out.factor = g;
      return out;
    }
    const OrderSearch search = find_order_traced(t.base, N, n_x, rng(), options.order);
    t.outcomes = search.outcomes;
    t.candidates = search.candidates;
    t.r = search.r;
    if (search.r && *search.r % 2 == 0) {
      const std::uint64_t half = arith::mod_pow(t.base, *search.r / 2, N);
      if (half != N - 1) {
        for (std::uint64_t v : {half + 1, half + N - 1}) {
          const std::uint64_t f = arith::gcd(v % N, N);
          if (f > 1 && f < N) {
            t.factor = f;
            break;
          }
        }
      }
    }
    out.trials.push_back(t);
    if (t.factor) {
      out.method = "order";
      out.factor = t.factor;
      return out;
    }
  }
  out.method = "exhausted";
  return out;
}

std::string to_json(const ShorOutcome& o) {
  nlohmann::ordered_json j;
  j["N"] = o.N;
  j["method"] = o.method;
  j["factor"] = optional_json(o.factor);
  if (!o.factor) j["message"] = "no factor found";
  const Trial* last = o.last_trial();
  j["base"] = last ? nlohmann::ordered_json(last->base) : nlohmann::ordered_json(nullptr);
  j["gcd_shortcut"] = last ? last->gcd_shortcut : false;
  j["outcome"] = (last && !last->outcomes.empty()) ? nlohmann::ordered_json(last->outcomes.back())
                                                   : nlohmann::ordered_json(nullptr);
  j["candidates"] = last ? last->candidates : std::vector<std::uint64_t>{};
  j["r"] = last ? optional_json(last->r) : nlohmann::ordered_json(nullptr);
  j["trial_count"] = o.trial_count;
  auto& trials = j["trials"] = nlohmann::ordered_json::array();
  for (const Trial& t : o.trials) {
    nlohmann::ordered_json tj;
    tj["base"] = t.base;
    tj["gcd_shortcut"] = t.gcd_shortcut;
    tj["outcomes"] = t.outcomes;
    tj["candidates"] = t.candidates;
    tj["r"] = optional_json(t.r);
    tj["factor"] = optional_json(t.factor);
    trials.push_back(tj);
  }
  return j.dump(2) + "\n";
}

}  // namespace qshor::shor
