#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qshor/circuit.hpp"
#include "qshor/linalg.hpp"

namespace qshor::sim {

inline constexpr std::uint32_t kDefaultDenseCap = 14;

struct DenseOptions {
  /// Largest circuit width the dense engine accepts.
  std::uint32_t max_qubits = kDefaultDenseCap;
};

/// 2^width amplitudes; wire w is bit w of the amplitude index.
class StateVector {
 public:
  explicit StateVector(std::uint32_t width);
  StateVector(std::uint32_t width, std::vector<cplx> amplitudes);

  static StateVector basis(std::uint32_t width, std::uint64_t index);

  std::uint32_t width() const { return width_; }
  std::span<const cplx> amplitudes() const { return amps_; }
  std::span<cplx> amplitudes() { return amps_; }
  const cplx& operator[](std::uint64_t i) const { return amps_[i]; }

  double norm_squared() const;

 private:
  std::uint32_t width_;
  std::vector<cplx> amps_;
};

/// Probabilities over the 2^bits outcomes of a measured wire list.
class Distribution {
 public:
  Distribution(std::uint32_t bits, std::vector<double> probabilities);

  std::uint32_t bits() const { return bits_; }
  std::size_t size() const { return probs_.size(); }
  double probability(std::uint64_t outcome) const { return probs_.at(outcome); }
  std::span<const double> probabilities() const { return probs_; }
  double total() const;

  /// Outcome drawn by inverse-CDF from a raw 53-bit uniform of `rng`.
  std::uint64_t sample(std::mt19937_64& rng) const;

  /// `outcome,probability` rows in increasing outcome order, omitting
  /// probabilities below `min_probability`; 12 significant digits.
  std::string to_csv(double min_probability = 1e-12) const;
  std::string to_json(double min_probability = 1e-12) const;

 private:
  std::uint32_t bits_;
  std::vector<double> probs_;
};

/// Applies every gate in order with in-place stride kernels.
StateVector simulate_dense(const Circuit& c, StateVector initial, const DenseOptions& options = {});

/// Full unitary, column j = simulate_dense(c, |j>). Intended for width <= 10.
DenseMatrix circuit_unitary(const Circuit& c, const DenseOptions& options = {});

/// Output basis state of a circuit made of X, CNOT, SWAP, Toffoli, Fredkin.
/// Throws std::invalid_argument naming the first non-classical gate.
std::uint64_t simulate_reversible(const Circuit& c, std::uint64_t basis_in);

/// Same as simulate_reversible for many inputs, 64 at a time in bit-sliced form.
std::vector<std::uint64_t> simulate_reversible_batch(const Circuit& c, std::span<const std::uint64_t> inputs);

/// Marginal distribution over `wires`; wires[i] is bit i of the outcome.
Distribution measure_probs(const StateVector& s, std::span<const WireId> wires);

/// f(x) = y^x mod N for every x < 2^n_x, read from the z register after
/// running the modular-exponentiation circuit reversibly. Throws
/// std::logic_error if the circuit disagrees with mod_pow or leaves any other
/// register altered.
std::vector<std::uint64_t> modexp_table(std::uint64_t N, std::uint64_t y, std::uint32_t n_x);

/// Exact post-inverse-QFT distribution of the x register of the order-finding
/// circuit, computed from modexp_table by grouping x values with equal f(x)
/// and Fourier-transforming each group's indicator.
Distribution order_finding_distribution(std::uint64_t N, std::uint64_t y, std::uint32_t n_x);

/// Reference pipeline: dense simulation of the whole order-finding circuit
/// followed by measure_probs on x. Only feasible under the dense cap.
Distribution order_finding_distribution_dense(std::uint64_t N, std::uint64_t y, std::uint32_t n_x,
                                              const DenseOptions& options = {});

/// Register width used for modulus N: bit width of N.
std::uint32_t register_width_for(std::uint64_t N);

}  // namespace qshor::sim
