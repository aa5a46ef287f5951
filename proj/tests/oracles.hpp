// Reference implementations used only by tests. Gate matrices are written out
// from their textbook definitions and embedded with explicit index arithmetic,
// independent of the library's stride kernels and gate_matrix.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "qshor/circuit.hpp"
#include "qshor/linalg.hpp"
#include "qshor/transpiler.hpp"

namespace oracle {

using qshor::cplx;
using qshor::DenseMatrix;
using qshor::Gate;
using qshor::GateType;

inline constexpr double kPi = 3.14159265358979323846;

inline DenseMatrix from_rows(std::size_t dim, std::initializer_list<cplx> entries) {
  DenseMatrix m(dim);
  std::size_t i = 0;
  for (cplx v : entries) {
    m(i / dim, i % dim) = v;
    ++i;
  }
  return m;
}

// Controlled version of a 2x2 block, control on the most significant local bit.
inline DenseMatrix controlled(const DenseMatrix& u) {
  DenseMatrix m = DenseMatrix::identity(2 * u.dim());
  for (std::size_t r = 0; r < u.dim(); ++r)
    for (std::size_t c = 0; c < u.dim(); ++c) m(u.dim() + r, u.dim() + c) = u(r, c);
  return m;
}

inline DenseMatrix local_matrix(const Gate& g) {
  const double s = 1.0 / std::sqrt(2.0);
  const cplx i{0.0, 1.0};
  const DenseMatrix X = from_rows(2, {0, 1, 1, 0});
  const DenseMatrix V = from_rows(2, {0.5 * (1.0 + i), 0.5 * (1.0 - i), 0.5 * (1.0 - i), 0.5 * (1.0 + i)});
  switch (g.type()) {
    case GateType::X: return X;
    case GateType::H: return from_rows(2, {s, s, s, -s});
    case GateType::CNOT: return controlled(X);
    case GateType::SWAP: return from_rows(4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
    case GateType::Toffoli: return controlled(controlled(X));
    case GateType::Fredkin:
      return controlled(from_rows(4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1}));
    case GateType::CRk:
    case GateType::CRkInv: {
      const double sign = g.type() == GateType::CRk ? 1.0 : -1.0;
      return controlled(from_rows(2, {1, 0, 0, std::exp(i * (sign * 2.0 * kPi / std::pow(2.0, g.k())))}));
    }
    case GateType::CV: return controlled(V);
    case GateType::CVInv: return controlled(V.adjoint());
    case GateType::U1: {
      const auto& u = g.matrix();
      return from_rows(2, {u[0], u[1], u[2], u[3]});
    }
    case GateType::R: {
      const double t = g.theta(), p = g.phi();
      return from_rows(2, {std::cos(t / 2), -i * std::exp(-i * p) * std::sin(t / 2),
                           -i * std::exp(i * p) * std::sin(t / 2), std::cos(t / 2)});
    }
    case GateType::XX: {
      const cplx c = std::cos(g.chi()), n = -i * std::sin(g.chi());
      return from_rows(4, {c, 0, 0, n, 0, c, n, 0, 0, n, c, 0, n, 0, 0, c});
    }
  }
  return {};
}

// Full 2^width operator of a local matrix acting on `wires` (wires[0] is the
// most significant local bit, wire w is bit w of the global index).
inline DenseMatrix embed(const DenseMatrix& local, std::span<const qshor::WireId> wires, std::uint32_t width) {
  const std::size_t dim = std::size_t{1} << width;
  const std::size_t k = wires.size();
  std::uint64_t mask = 0;
  for (auto w : wires) mask |= std::uint64_t{1} << w;
  auto local_index = [&](std::uint64_t global) {
    std::size_t li = 0;
    for (std::size_t j = 0; j < k; ++j) li |= ((global >> wires[j]) & 1u) << (k - 1 - j);
    return li;
  };
  DenseMatrix m(dim);
  for (std::uint64_t r = 0; r < dim; ++r)
    for (std::uint64_t c = 0; c < dim; ++c)
      if ((r & ~mask) == (c & ~mask)) m(r, c) = local(local_index(r), local_index(c));
  return m;
}

inline DenseMatrix circuit_matrix(const qshor::Circuit& c) {
  DenseMatrix u = DenseMatrix::identity(std::size_t{1} << c.width());
  for (const Gate& g : c.gates()) u = embed(local_matrix(g), g.wires(), c.width()) * u;
  return u;
}

inline DenseMatrix native_matrix(const qshor::transpile::NativeProgram& p) {
  return circuit_matrix(p.to_circuit()).scaled(std::exp(cplx{0.0, p.global_phase}));
}

inline DenseMatrix mat2_dense(const qshor::Mat2& u) { return from_rows(2, {u[0], u[1], u[2], u[3]}); }

// Haar-distributed element of U(2).
inline qshor::Mat2 haar_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> n01;
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  cplx a{n01(rng), n01(rng)}, b{n01(rng), n01(rng)};
  const double norm = std::sqrt(std::norm(a) + std::norm(b));
  a /= norm;
  b /= norm;
  const cplx ph = std::polar(1.0, angle(rng));
  return {a, -std::conj(b) * ph, b, std::conj(a) * ph};
}

inline std::vector<qshor::WireId> distinct_wires(std::mt19937_64& rng, std::uint32_t width, std::size_t count) {
  std::vector<qshor::WireId> all(width);
  for (std::uint32_t i = 0; i < width; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(count);
  return all;
}

// Random circuit over the closed elementary set (no R/XX).
inline qshor::Circuit random_elementary(std::mt19937_64& rng, std::uint32_t width, std::size_t gates) {
  qshor::Circuit c(width);
  std::uniform_int_distribution<int> kind(0, width >= 3 ? 10 : 8);
  std::uniform_int_distribution<int> kk(1, 5);
  for (std::size_t i = 0; i < gates; ++i) {
    const int t = kind(rng);
    const std::size_t arity = t <= 2 ? 1 : (t <= 8 ? 2 : 3);
    const auto w = distinct_wires(rng, width, arity);
    switch (t) {
      case 0: c.add(Gate::x(w[0])); break;
      case 1: c.add(Gate::h(w[0])); break;
      case 2: c.add(Gate::u1(w[0], haar_unitary(rng))); break;
      case 3: c.add(Gate::cnot(w[0], w[1])); break;
      case 4: c.add(Gate::swap(w[0], w[1])); break;
      case 5: c.add(Gate::crk(w[0], w[1], kk(rng))); break;
      case 6: c.add(Gate::crk_inv(w[0], w[1], kk(rng))); break;
      case 7: c.add(Gate::cv(w[0], w[1])); break;
      case 8: c.add(Gate::cv_inv(w[0], w[1])); break;
      case 9: c.add(Gate::toffoli(w[0], w[1], w[2])); break;
      default: c.add(Gate::fredkin(w[0], w[1], w[2])); break;
    }
  }
  return c;
}

// Random circuit over {X, CNOT, SWAP, Toffoli, Fredkin}.
inline qshor::Circuit random_classical(std::mt19937_64& rng, std::uint32_t width, std::size_t gates) {
  qshor::Circuit c(width);
  std::uniform_int_distribution<int> kind(0, width >= 3 ? 4 : (width >= 2 ? 2 : 0));
  for (std::size_t i = 0; i < gates; ++i) {
    const int t = kind(rng);
    const std::size_t arity = t == 0 ? 1 : (t <= 2 ? 2 : 3);
    const auto w = distinct_wires(rng, width, arity);
    switch (t) {
      case 0: c.add(Gate::x(w[0])); break;
      case 1: c.add(Gate::cnot(w[0], w[1])); break;
      case 2: c.add(Gate::swap(w[0], w[1])); break;
      case 3: c.add(Gate::toffoli(w[0], w[1], w[2])); break;
      default: c.add(Gate::fredkin(w[0], w[1], w[2])); break;
    }
  }
  return c;
}

// Naive classical evaluation of a permutation circuit, one gate at a time.
inline std::uint64_t classical_eval(const qshor::Circuit& c, std::uint64_t s) {
  auto bit = [&](qshor::WireId w) { return (s >> w) & 1u; };
  auto flip = [&](qshor::WireId w) { s ^= std::uint64_t{1} << w; };
  for (const Gate& g : c.gates()) {
    switch (g.type()) {
      case GateType::X: flip(g.wire(0)); break;
      case GateType::CNOT:
        if (bit(g.wire(0))) flip(g.wire(1));
        break;
      case GateType::Toffoli:
        if (bit(g.wire(0)) && bit(g.wire(1))) flip(g.wire(2));
        break;
      case GateType::SWAP:
        if (bit(g.wire(0)) != bit(g.wire(1))) {
          flip(g.wire(0));
          flip(g.wire(1));
        }
        break;
      case GateType::Fredkin:
        if (bit(g.wire(0)) && bit(g.wire(1)) != bit(g.wire(2))) {
          flip(g.wire(1));
          flip(g.wire(2));
        }
        break;
      default: throw std::invalid_argument("classical_eval: not a permutation gate");
    }
  }
  return s;
}

// Depth of an as-soon-as-possible schedule of the two-qubit gates, built as an
// explicit list of layers each holding a set of busy wires.
inline std::size_t greedy_layers(const qshor::transpile::NativeProgram& p) {
  std::vector<std::vector<bool>> layers;
  for (const auto& g : p.gates) {
    if (!g.is_two_qubit()) continue;
    std::size_t first_free = 0;
    for (std::size_t l = layers.size(); l-- > 0;) {
      if (layers[l][g.w0] || layers[l][g.w1]) {
        first_free = l + 1;
        break;
      }
    }
    if (first_free == layers.size()) layers.emplace_back(p.width, false);
    layers[first_free][g.w0] = layers[first_free][g.w1] = true;
  }
  return layers.size();
}

}  // namespace oracle
