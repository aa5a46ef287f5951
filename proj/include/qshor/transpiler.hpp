#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qshor/circuit.hpp"
#include "qshor/linalg.hpp"

namespace qshor::transpile {

/// U = e^{id} R(-pi, -c - pi/2) R(2b + pi, a - c - pi/2)
///   = e^{id} [[e^{ia} cos b, e^{ic} sin b], [-e^{-ic} sin b, e^{-ia} cos b]].
struct UnitaryParams {
  double a = 0.0;
  double b = 0.0;  // in [0, pi/2]
  double c = 0.0;
  double d = 0.0;
};

/// Closed-form angles from the entry phases of U. Throws std::invalid_argument
/// when U is not unitary within 1e-10.
UnitaryParams decompose_unitary(const Mat2& u);

/// Product of the two native rotations described by `p`, times e^{id}.
Mat2 reconstruct(const UnitaryParams& p);

struct NativeGate {
  enum class Kind { R, XX };

  Kind kind = Kind::R;
  WireId w0 = 0;
  WireId w1 = 0;
  double theta = 0.0;
  double phi = 0.0;
  double chi = 0.0;

  static NativeGate r(WireId w, double theta, double phi) { return {Kind::R, w, w, theta, phi, 0.0}; }
  static NativeGate xx(WireId a, WireId b, double chi) { return {Kind::XX, a, b, 0.0, 0.0, chi}; }
  bool is_two_qubit() const { return kind == Kind::XX; }
};

/// Native R/XX sequence. The source unitary equals e^{i global_phase} times
/// the product of the gates.
struct NativeProgram {
  std::uint32_t width = 0;
  std::vector<NativeGate> gates;
  double global_phase = 0.0;

  Circuit to_circuit() const;
};

/// Sign of chi available on each ion pair; positive unless listed.
struct TranspileOptions {
  std::set<std::pair<WireId, WireId>> negative_xx_pairs;

  int xx_sign(WireId a, WireId b) const;
};

/// Step 1: rewrite SWAP, Fredkin and CR_k into {Toffoli, CNOT, single-qubit}.
/// CV, CV^dagger and XX pass through.
Circuit expand_to_toffoli_basis(const Circuit& c);

/// Step 2: Toffoli -> 2 CNOT + 3 controlled-sqrt(X); Fredkin is expanded first.
Circuit lower_toffoli(const Circuit& c);

/// Step 3: each CNOT becomes one XX(pi/4) and each CV/CV^dagger one XX(pi/8),
/// dressed with single-qubit U1 gates that also carry the global phase.
Circuit lower_two_qubit(const Circuit& c, const TranspileOptions& options = {});

/// Step 4: multiply every maximal single-qubit run into one unitary and emit
/// it as at most two R gates. Input must contain only XX and 1-qubit gates.
NativeProgram merge_singles(const Circuit& c);

/// Steps 1-4.
NativeProgram transpile(const Circuit& c, const TranspileOptions& options = {});

/// Largest number of R gates found on one wire between two consecutive XX
/// gates touching that wire (or the program ends).
std::size_t max_single_run(const NativeProgram& p);

/// `qubits W`, one `R w theta phi` / `XX w1 w2 chi` per line, then a
/// `# global_phase d` trailer; 12 significant digits.
std::string to_text(const NativeProgram& p);
std::string to_json(const NativeProgram& p);

}  // namespace qshor::transpile
