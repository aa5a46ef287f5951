#include "qshor/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "json.hpp"

#include "qshor/arith.hpp"
#include "qshor/templates.hpp"

namespace qshor::sim {
namespace {

using Reg = RegisterLayout::Reg;

std::uint64_t bit(WireId w) { return std::uint64_t{1} << w; }

Mat2 lower_right_block(const std::vector<cplx>& m4) { return {m4[10], m4[11], m4[14], m4[15]}; }

void apply_1q(std::vector<cplx>& amps, WireId target, const Mat2& u, std::uint64_t controls) {
  const std::uint64_t tb = bit(target);
  const std::uint64_t dim = amps.size();
  // Outer loop walks blocks of 2*tb; inner loop the lower half of each block.
  for (std::uint64_t base = 0; base < dim; base += 2 * tb) {
    for (std::uint64_t i = base; i < base + tb; ++i) {
      if ((i & controls) != controls) continue;
      const cplx a0 = amps[i];
      const cplx a1 = amps[i | tb];
      amps[i] = u[0] * a0 + u[1] * a1;
      amps[i | tb] = u[2] * a0 + u[3] * a1;
    }
  }
}

void apply_x(std::vector<cplx>& amps, WireId target, std::uint64_t controls) {
  const std::uint64_t tb = bit(target);
  const std::uint64_t dim = amps.size();
  for (std::uint64_t base = 0; base < dim; base += 2 * tb)
    for (std::uint64_t i = base; i < base + tb; ++i)
      if ((i & controls) == controls) std::swap(amps[i], amps[i | tb]);
}

void apply_swap(std::vector<cplx>& amps, WireId a, WireId b, std::uint64_t controls) {
  const std::uint64_t ab = bit(a), bb = bit(b);
  for (std::uint64_t i = 0; i < amps.size(); ++i)
    if ((i & ab) && !(i & bb) && (i & controls) == controls) std::swap(amps[i], amps[i ^ ab ^ bb]);
}

// General two-qubit matrix with w0 as the high bit of the local index.
void apply_2q(std::vector<cplx>& amps, WireId w0, WireId w1, const std::vector<cplx>& m) {
  const std::uint64_t b0 = bit(w0), b1 = bit(w1);
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (i & (b0 | b1)) continue;
    const std::uint64_t idx[4] = {i, i | b1, i | b0, i | b0 | b1};
    cplx in[4];
    for (int k = 0; k < 4; ++k) in[k] = amps[idx[k]];
    for (int r = 0; r < 4; ++r) {
      cplx acc{};
      for (int k = 0; k < 4; ++k) acc += m[r * 4 + k] * in[k];
      amps[idx[r]] = acc;
    }
  }
}

void apply_gate(std::vector<cplx>& amps, const Gate& g) {
  switch (g.type()) {
    case GateType::X: apply_x(amps, g.wire(0), 0); break;
    case GateType::CNOT: apply_x(amps, g.wire(1), bit(g.wire(0))); break;
    case GateType::Toffoli: apply_x(amps, g.wire(2), bit(g.wire(0)) | bit(g.wire(1))); break;
    case GateType::SWAP: apply_swap(amps, g.wire(0), g.wire(1), 0); break;
    case GateType::Fredkin: apply_swap(amps, g.wire(1), g.wire(2), bit(g.wire(0))); break;
    case GateType::H:
    case GateType::U1:
    case GateType::R: {
      const auto m = gate_matrix(g);
      apply_1q(amps, g.wire(0), {m[0], m[1], m[2], m[3]}, 0);
      break;
    }
    case GateType::CRk:
    case GateType::CRkInv:
    case GateType::CV:
    case GateType::CVInv: apply_1q(amps, g.wire(1), lower_right_block(gate_matrix(g)), bit(g.wire(0))); break;
    case GateType::XX: apply_2q(amps, g.wire(0), g.wire(1), gate_matrix(g)); break;
  }
}

void check_dense_width(std::uint32_t width, const DenseOptions& options) {
  if (width > options.max_qubits)
    throw std::invalid_argument("circuit width " + std::to_string(width) + " exceeds the dense cap of " +
                                std::to_string(options.max_qubits) +
                                " qubits; use simulate_reversible or order_finding_distribution instead");
}

std::string format12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// In-place iterative radix-2 FFT with kernel exp(-2 pi i jk / n).
void fft(std::vector<cplx>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t b = n >> 1;
    for (; j & b; b >>= 1) j ^= b;
    j ^= b;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const cplx w_len = std::polar(1.0, -2.0 * kPi / static_cast<double>(len));
    for (std::size_t i = 0; i < n; i += len) {
      cplx w{1.0, 0.0};
      for (std::size_t k = 0; k < len / 2; ++k) {
        const cplx u = a[i + k];
        const cplx v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= w_len;
      }
    }
  }
}

}  // namespace

StateVector::StateVector(std::uint32_t width) : width_(width), amps_(std::size_t{1} << width) {
  if (width > 30) throw std::invalid_argument("state vector width too large");
  amps_[0] = 1.0;
}

StateVector::StateVector(std::uint32_t width, std::vector<cplx> amplitudes)
    : width_(width), amps_(std::move(amplitudes)) {
  if (amps_.size() != (std::size_t{1} << width)) throw std::invalid_argument("amplitude count must be 2^width");
}

StateVector StateVector::basis(std::uint32_t width, std::uint64_t index) {
  StateVector s(width);
  if (index >= s.amps_.size()) throw std::invalid_argument("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

double StateVector::norm_squared() const {
  double acc = 0.0;
  for (const cplx& a : amps_) acc += std::norm(a);
  return acc;
}

Distribution::Distribution(std::uint32_t bits, std::vector<double> probabilities)
    : bits_(bits), probs_(std::move(probabilities)) {
  if (probs_.size() != (std::size_t{1} << bits)) throw std::invalid_argument("distribution size must be 2^bits");
  for (double p : probs_)
    if (!(p >= 0.0)) throw std::invalid_argument("negative probability");
}

double Distribution::total() const {
  double acc = 0.0;
  for (double p : probs_) acc += p;
  return acc;
}

std::uint64_t Distribution::sample(std::mt19937_64& rng) const {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total();
  double acc = 0.0;
  for (std::size_t k = 0; k < probs_.size(); ++k) {
    acc += probs_[k];
    if (u < acc) return k;
  }
  // Rounding at the top end: return the last outcome with mass.
  for (std::size_t k = probs_.size(); k-- > 0;)
    if (probs_[k] > 0.0) return k;
  return 0;
}

std::string Distribution::to_csv(double min_probability) const {
  std::string out = "outcome,probability\n";
  for (std::size_t k = 0; k < probs_.size(); ++k)
    if (probs_[k] >= min_probability) out += std::to_string(k) + "," + format12(probs_[k]) + "\n";
  return out;
}

std::string Distribution::to_json(double min_probability) const {
  nlohmann::ordered_json j;
  j["bits"] = bits_;
  j["outcomes"] = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < probs_.size(); ++k) {
    if (probs_[k] < min_probability) continue;
    j["outcomes"].push_back({{"outcome", k}, {"probability", std::stod(format12(probs_[k]))}});
  }
  return j.dump(2) + "\n";
}

StateVector simulate_dense(const Circuit& c, StateVector initial, const DenseOptions& options) {
  check_dense_width(c.width(), options);
  if (initial.width() != c.width()) throw std::invalid_argument("initial state width does not match circuit");
  std::vector<cplx> amps(initial.amplitudes().begin(), initial.amplitudes().end());
  for (const Gate& g : c.gates()) apply_gate(amps, g);
  return StateVector(c.width(), std::move(amps));
}

DenseMatrix circuit_unitary(const Circuit& c, const DenseOptions& options) {
  check_dense_width(c.width(), options);
  const std::size_t dim = std::size_t{1} << c.width();
  DenseMatrix u(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const StateVector out = simulate_dense(c, StateVector::basis(c.width(), col), options);
    for (std::size_t row = 0; row < dim; ++row) u(row, col) = out[row];
  }
  return u;
}

std::uint64_t simulate_reversible(const Circuit& c, std::uint64_t basis_in) {
  if (c.width() > 64) throw std::invalid_argument("simulate_reversible supports at most 64 wires");
  std::uint64_t s = basis_in;
  std::size_t pos = 0;
  for (const Gate& g : c.gates()) {
    switch (g.type()) {
      case GateType::X: s ^= bit(g.wire(0)); break;
      case GateType::CNOT:
        if (s & bit(g.wire(0))) s ^= bit(g.wire(1));
        break;
      case GateType::Toffoli:
        if ((s & bit(g.wire(0))) && (s & bit(g.wire(1)))) s ^= bit(g.wire(2));
        break;
      case GateType::SWAP:
      case GateType::Fredkin: {
        const std::size_t off = g.type() == GateType::Fredkin ? 1 : 0;
        if (off == 1 && !(s & bit(g.wire(0)))) break;
        const WireId a = g.wire(off), b = g.wire(off + 1);
        if (((s >> a) ^ (s >> b)) & 1u) s ^= bit(a) | bit(b);
        break;
      }
      default:
        throw std::invalid_argument("simulate_reversible: non-classical gate " + std::string(gate_name(g.type())) +
                                    " at position " + std::to_string(pos));
    }
    ++pos;
  }
  return s;
}

std::vector<std::uint64_t> simulate_reversible_batch(const Circuit& c, std::span<const std::uint64_t> inputs) {
  if (c.width() > 64) throw std::invalid_argument("simulate_reversible supports at most 64 wires");
  for (std::size_t pos = 0; pos < c.size(); ++pos)
    if (!c.gates()[pos].is_classical())
      throw std::invalid_argument("simulate_reversible: non-classical gate " +
                                  std::string(gate_name(c.gates()[pos].type())) + " at position " +
                                  std::to_string(pos));

  std::vector<std::uint64_t> out(inputs.size());
  std::vector<std::uint64_t> lanes(c.width());
  for (std::size_t start = 0; start < inputs.size(); start += 64) {
    const std::size_t count = std::min<std::size_t>(64, inputs.size() - start);
    // lanes[w] bit j = wire w of input start + j
    std::fill(lanes.begin(), lanes.end(), 0);
    for (std::size_t j = 0; j < count; ++j)
      for (WireId w = 0; w < c.width(); ++w) lanes[w] |= ((inputs[start + j] >> w) & 1u) << j;

    for (const Gate& g : c.gates()) {
      switch (g.type()) {
        case GateType::X: lanes[g.wire(0)] = ~lanes[g.wire(0)]; break;
        case GateType::CNOT: lanes[g.wire(1)] ^= lanes[g.wire(0)]; break;
        case GateType::Toffoli: lanes[g.wire(2)] ^= lanes[g.wire(0)] & lanes[g.wire(1)]; break;
        case GateType::SWAP: std::swap(lanes[g.wire(0)], lanes[g.wire(1)]); break;
        case GateType::Fredkin: {
          const std::uint64_t d = (lanes[g.wire(1)] ^ lanes[g.wire(2)]) & lanes[g.wire(0)];
          lanes[g.wire(1)] ^= d;
          lanes[g.wire(2)] ^= d;
          break;
        }
        default: break;
      }
    }

    for (std::size_t j = 0; j < count; ++j) {
      std::uint64_t s = 0;
      for (WireId w = 0; w < c.width(); ++w) s |= ((lanes[w] >> j) & 1u) << w;
      out[start + j] = s;
    }
  }
  return out;
}

Distribution measure_probs(const StateVector& s, std::span<const WireId> wires) {
  for (std::size_t i = 0; i < wires.size(); ++i) {
    if (wires[i] >= s.width()) throw std::invalid_argument("measure_probs: wire out of range");
    for (std::size_t j = i + 1; j < wires.size(); ++j)
      if (wires[i] == wires[j])
        throw std::invalid_argument("measure_probs: duplicate wire " + std::to_string(wires[i]));
  }
  if (wires.size() > 30) throw std::invalid_argument("measure_probs: too many wires");
  std::vector<double> probs(std::size_t{1} << wires.size());
  const auto amps = s.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    if (p == 0.0) continue;
    std::uint64_t outcome = 0;
    for (std::size_t k = 0; k < wires.size(); ++k) outcome |= ((i >> wires[k]) & 1u) << k;
    probs[outcome] += p;
  }
  return Distribution(static_cast<std::uint32_t>(wires.size()), std::move(probs));
}

std::uint32_t register_width_for(std::uint64_t N) {
  return std::max<std::uint32_t>(1, static_cast<std::uint32_t>(std::bit_width(N)));
}

std::vector<std::uint64_t> modexp_table(std::uint64_t N, std::uint64_t y, std::uint32_t n_x) {
  if (N < 2) throw std::invalid_argument("order finding needs N >= 2");
  if (arith::gcd(y, N) != 1)
    throw std::invalid_argument("y=" + std::to_string(y) + " is not coprime to N=" + std::to_string(N));
  if (n_x < 1 || n_x > 24) throw std::invalid_argument("n_x must be in [1, 24]");
  const RegisterLayout layout(n_x, register_width_for(N));
  if (layout.width() > 64) throw std::invalid_argument("register layout wider than 64 wires");
  const Circuit circuit = templates::modular_exponentiation(layout, y, N);

  const std::uint64_t count = std::uint64_t{1} << n_x;
  std::uint64_t prepared = layout.encode(0, Reg::z, 1);
  prepared = layout.encode(prepared, Reg::N, N);
  std::vector<std::uint64_t> inputs(count);
  for (std::uint64_t x = 0; x < count; ++x) inputs[x] = layout.encode(prepared, Reg::x, x);

  const std::vector<std::uint64_t> outputs = simulate_reversible_batch(circuit, inputs);
  std::vector<std::uint64_t> table(count);
  for (std::uint64_t x = 0; x < count; ++x) {
    const std::uint64_t f = layout.decode(outputs[x], Reg::z);
    const std::uint64_t expected_rest = layout.encode(inputs[x], Reg::z, 0);
    if (layout.encode(outputs[x], Reg::z, 0) != expected_rest || f != arith::mod_pow(y, x, N))
      throw std::logic_error("modular exponentiation circuit disagrees with mod_pow at x=" + std::to_string(x));
    table[x] = f;
  }
  return table;
}

Distribution order_finding_distribution(std::uint64_t N, std::uint64_t y, std::uint32_t n_x) {
  const std::vector<std::uint64_t> f = modexp_table(N, y, n_x);
  const std::size_t q = f.size();

  std::map<std::uint64_t, std::vector<std::uint64_t>> groups;
  for (std::uint64_t x = 0; x < q; ++x) groups[f[x]].push_back(x);

  std::vector<double> probs(q, 0.0);
  std::vector<cplx> buf(q);
  const double scale = 1.0 / (static_cast<double>(q) * static_cast<double>(q));
  for (const auto& [value, xs] : groups) {
    std::fill(buf.begin(), buf.end(), cplx{});
    for (std::uint64_t x : xs) buf[x] = 1.0;
    fft(buf);
    for (std::size_t k = 0; k < q; ++k) probs[k] += std::norm(buf[k]) * scale;
  }
  return Distribution(n_x, std::move(probs));
}

Distribution order_finding_distribution_dense(std::uint64_t N, std::uint64_t y, std::uint32_t n_x,
                                              const DenseOptions& options) {
  templates::TemplateParams params;
  params.N = N;
  params.y = y;
  params.n = register_width_for(N);
  params.n_x = n_x;
  const Circuit circuit = templates::order_finding(params);
  const RegisterLayout layout = params.layout();
  check_dense_width(circuit.width(), options);

  std::uint64_t prepared = layout.encode(0, Reg::z, 1);
  prepared = layout.encode(prepared, Reg::N, N);
  const StateVector out = simulate_dense(circuit, StateVector::basis(circuit.width(), prepared), options);
  const std::vector<WireId> x = layout.wires(Reg::x);
  return measure_probs(out, x);
}

}  // namespace qshor::sim
