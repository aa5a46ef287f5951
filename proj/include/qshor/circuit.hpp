#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qshor/linalg.hpp"

namespace qshor {

/// Qubit position inside a circuit.
using WireId = std::uint32_t;

/// Raised by parse_circuit; the message carries the offending line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class GateType : std::uint8_t {
  X,
  H,
  CNOT,
  SWAP,
  Toffoli,
  Fredkin,
  CRk,
  CRkInv,
  CV,
  CVInv,
  U1,
  R,
  XX,
};

std::string_view gate_name(GateType type);
std::optional<GateType> gate_type_from_name(std::string_view name);
std::size_t gate_arity(GateType type);

/// One gate instance: a kind, its wires and (for parametric kinds) its parameters.
///
/// Multi-wire gates list control wires first. CRk/CRkInv carry k, R carries
/// (theta, phi), XX carries chi, U1 carries a 2x2 unitary.
class Gate {
 public:
  static Gate x(WireId w);
  static Gate h(WireId w);
  static Gate cnot(WireId control, WireId target);
  static Gate swap(WireId a, WireId b);
  static Gate toffoli(WireId c0, WireId c1, WireId target);
  static Gate fredkin(WireId control, WireId t0, WireId t1);
  static Gate crk(WireId control, WireId target, int k);
  static Gate crk_inv(WireId control, WireId target, int k);
  static Gate cv(WireId control, WireId target);
  static Gate cv_inv(WireId control, WireId target);
  /// Throws std::invalid_argument when `u` is not unitary within 1e-10.
  static Gate u1(WireId w, const Mat2& u);
  static Gate r(WireId w, double theta, double phi);
  static Gate xx(WireId a, WireId b, double chi);

  GateType type() const { return type_; }
  std::span<const WireId> wires() const { return {wires_.data(), arity_}; }
  WireId wire(std::size_t i) const { return wires_[i]; }
  std::size_t arity() const { return arity_; }

  int k() const { return k_; }
  double theta() const { return p0_; }
  double phi() const { return p1_; }
  double chi() const { return p0_; }
  const Mat2& matrix() const { return u_; }

  /// Conjugate transpose of this gate, as a gate of the same family.
  Gate adjoint() const;

  /// True for X, CNOT, SWAP, Toffoli and Fredkin: basis-state permutations.
  bool is_classical() const;

  bool operator==(const Gate&) const = default;

 private:
  Gate(GateType type, std::initializer_list<WireId> wires);

  GateType type_;
  std::uint8_t arity_ = 0;
  std::array<WireId, 3> wires_{};
  int k_ = 0;
  double p0_ = 0.0;
  double p1_ = 0.0;
  Mat2 u_{};
};

/// Local unitary of a gate, dimension 2^arity, row-major. The first listed
/// wire is the most significant bit of the local index (textbook order).
std::vector<cplx> gate_matrix(const Gate& g);

Mat2 r_matrix(double theta, double phi);

/// Contiguous register ranges x, z, a, b, c, N, t in that order. Registers z,
/// a, c and N have n wires, b has n + 1 and t is a single wire. Within each
/// register the lowest wire holds the least-significant bit.
class RegisterLayout {
 public:
  enum class Reg { x, z, a, b, c, N, t };

  RegisterLayout(std::uint32_t n_x, std::uint32_t n);

  /// Recovers (n_x, n) from a total wire count; throws "Wrong size of registers".
  static RegisterLayout from_width(std::uint32_t width, std::uint32_t n_x);

  std::uint32_t n_x() const { return n_x_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t width() const { return n_x_ + 5 * n_ + 2; }

  WireId offset(Reg r) const;
  std::uint32_t size(Reg r) const;
  WireId wire(Reg r, std::uint32_t i) const;
  std::vector<WireId> wires(Reg r) const;

  WireId x(std::uint32_t i) const { return wire(Reg::x, i); }
  WireId z(std::uint32_t i) const { return wire(Reg::z, i); }
  WireId a(std::uint32_t i) const { return wire(Reg::a, i); }
  WireId b(std::uint32_t i) const { return wire(Reg::b, i); }
  WireId c(std::uint32_t i) const { return wire(Reg::c, i); }
  WireId N(std::uint32_t i) const { return wire(Reg::N, i); }
  WireId t() const { return wire(Reg::t, 0); }

  /// Writes `value` into register `r` of a basis index (width <= 64).
  std::uint64_t encode(std::uint64_t basis, Reg r, std::uint64_t value) const;
  std::uint64_t decode(std::uint64_t basis, Reg r) const;

  bool operator==(const RegisterLayout&) const = default;

 private:
  std::uint32_t n_x_;
  std::uint32_t n_;
};

/// Ordered gate list over a fixed number of wires.
class Circuit {
 public:
  explicit Circuit(std::uint32_t width, std::optional<RegisterLayout> layout = std::nullopt);

  std::uint32_t width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::optional<RegisterLayout>& layout() const { return layout_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Appends a gate; throws std::invalid_argument on out-of-range wires.
  Circuit& add(const Gate& g);
  /// Appends every gate of `other`, whose width must not exceed this width.
  Circuit& append(const Circuit& other);

  void reserve(std::size_t n) { gates_.reserve(n); }

  bool operator==(const Circuit&) const = default;

 private:
  std::uint32_t width_;
  std::optional<RegisterLayout> layout_;
  std::vector<Gate> gates_;
};

/// Reversed gate order, each gate replaced by its adjoint.
Circuit inverse(const Circuit& c);

/// Text form: `qubits <width>`, an optional `layout <n_x> <n>` line, then one
/// gate per line. Parameters are printed with 17 significant digits.
std::string serialize(const Circuit& c);
Circuit parse_circuit(std::string_view text);

}  // namespace qshor
