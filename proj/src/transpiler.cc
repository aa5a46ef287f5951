#include "qshor/transpiler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace qshor::transpile {
namespace {

constexpr double kDegenerate = 1e-12;
constexpr double kIdentityTol = 1e-11;

Mat2 phase_gate(double lambda) { return {1.0, 0.0, 0.0, std::polar(1.0, lambda)}; }

// exp(-i alpha Z)
Mat2 z_rotation(double alpha) { return {std::polar(1.0, -alpha), 0.0, 0.0, std::polar(1.0, alpha)}; }

// exp(-i alpha X)
Mat2 x_rotation(double alpha) {
  const cplx c{std::cos(alpha), 0.0};
  const cplx s{0.0, -std::sin(alpha)};
  return {c, s, s, c};
}

// exp(-i theta Y / 2)
Mat2 y_rotation(double theta) {
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  return {c, -s, s, c};
}

void add_cnot_family(Circuit& out, const Gate& g, const TranspileOptions& options);

void expand_gate_step1(Circuit& out, const Gate& g) {
  switch (g.type()) {
    case GateType::SWAP:
      out.add(Gate::cnot(g.wire(0), g.wire(1)));
      out.add(Gate::cnot(g.wire(1), g.wire(0)));
      out.add(Gate::cnot(g.wire(0), g.wire(1)));
      break;
    case GateType::Fredkin:
      out.add(Gate::cnot(g.wire(2), g.wire(1)));
      out.add(Gate::toffoli(g.wire(0), g.wire(1), g.wire(2)));
      out.add(Gate::cnot(g.wire(2), g.wire(1)));
      break;
    case GateType::CRk:
    case GateType::CRkInv: {
      const double sign = g.type() == GateType::CRk ? 1.0 : -1.0;
      const double half = sign * kPi / std::ldexp(1.0, g.k());  // lambda / 2
      const WireId c = g.wire(0), t = g.wire(1);
      out.add(Gate::u1(c, phase_gate(half)));
      out.add(Gate::cnot(c, t));
      out.add(Gate::u1(t, phase_gate(-half)));
      out.add(Gate::cnot(c, t));
      out.add(Gate::u1(t, phase_gate(half)));
      break;
    }
    default: out.add(g); break;
  }
}

void expand_toffoli(Circuit& out, const Gate& g) {
  const WireId c1 = g.wire(0), c2 = g.wire(1), t = g.wire(2);
  out.add(Gate::cv(c2, t));
  out.add(Gate::cnot(c1, c2));
  out.add(Gate::cv_inv(c2, t));
  out.add(Gate::cnot(c1, c2));
  out.add(Gate::cv(c1, t));
}

// CNOT, CV and CV^dagger all equal exp(i alpha (I - Z_c)(I - X_t)), i.e.
// e^{i alpha} exp(-i alpha Z_c) exp(-i alpha X_t) exp(i alpha Z_c X_t), with
// alpha = pi/4, pi/8, -pi/8. The ZX term is an XX gate conjugated by a Y
// rotation on the control.
void add_cnot_family(Circuit& out, const Gate& g, const TranspileOptions& options) {
  double alpha = 0.0;
  switch (g.type()) {
    case GateType::CNOT: alpha = kPi / 4.0; break;
    case GateType::CV: alpha = kPi / 8.0; break;
    case GateType::CVInv: alpha = -kPi / 8.0; break;
    default: throw std::logic_error("add_cnot_family: unexpected gate");
  }
  const WireId c = g.wire(0), t = g.wire(1);
  const double beta = -alpha;  // exp(-i beta Z X)
  const int sigma = options.xx_sign(c, t);
  const double chi = sigma * std::abs(beta);
  // W X W^dagger = s Z with s = sign(beta) * sigma.
  const double w_angle = ((beta > 0) == (sigma > 0)) ? -kPi / 2.0 : kPi / 2.0;
  out.add(Gate::u1(c, y_rotation(-w_angle)));
  out.add(Gate::xx(c, t, chi));
  out.add(Gate::u1(c, z_rotation(alpha) * y_rotation(w_angle)));
  out.add(Gate::u1(t, scaled(x_rotation(alpha), std::polar(1.0, alpha))));
}

bool single_qubit(const Gate& g) { return g.arity() == 1; }

double wrap_angle(double x) {
  // Into (-pi, pi].
  double r = std::remainder(x, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

std::string format12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double round12(double v) { return std::stod(format12(v)); }

UnitaryParams decompose_unchecked(const Mat2& u) {
  const double m00 = std::abs(u[0]), m01 = std::abs(u[1]);
  UnitaryParams p;
  p.b = std::atan2(m01, m00);
  if (m01 <= kDegenerate) {
    const double p00 = std::arg(u[0]), p11 = std::arg(u[3]);
    p.a = (p00 - p11) / 2.0;
    p.c = 0.0;
    p.d = (p00 + p11) / 2.0;
  } else if (m00 <= kDegenerate) {
    const double p01 = std::arg(u[1]), p10 = std::arg(u[2]);
    p.a = 0.0;
    p.c = (p01 - p10 + kPi) / 2.0;
    p.d = (p01 + p10 - kPi) / 2.0;
  } else {
    const double p00 = std::arg(u[0]), p10 = std::arg(u[2]), p11 = std::arg(u[3]);
    p.a = (p00 - p11) / 2.0;
    p.c = (p00 - 2.0 * p10 + p11) / 2.0 - kPi;
    p.d = (p00 + p11) / 2.0;
  }
  return p;
}

}  // namespace

UnitaryParams decompose_unitary(const Mat2& u) {
  if (!(unitarity_error(u) <= 1e-10)) throw std::invalid_argument("decompose_unitary: matrix is not unitary");
  return decompose_unchecked(u);
}

Mat2 reconstruct(const UnitaryParams& p) {
  const Mat2 m = r_matrix(-kPi, -p.c - kPi / 2.0) * r_matrix(2.0 * p.b + kPi, p.a - p.c - kPi / 2.0);
  return scaled(m, std::polar(1.0, p.d));
}

Circuit NativeProgram::to_circuit() const {
  Circuit c(width);
  c.reserve(gates.size());
  for (const NativeGate& g : gates) {
    if (g.is_two_qubit())
      c.add(Gate::xx(g.w0, g.w1, g.chi));
    else
      c.add(Gate::r(g.w0, g.theta, g.phi));
  }
  return c;
}

int TranspileOptions::xx_sign(WireId a, WireId b) const {
  const auto key = std::minmax(a, b);
  return negative_xx_pairs.count({key.first, key.second}) ? -1 : 1;
}

Circuit expand_to_toffoli_basis(const Circuit& c) {
  Circuit out(c.width(), c.layout());
  out.reserve(c.size());
  for (const Gate& g : c.gates()) expand_gate_step1(out, g);
  return out;
}

Circuit lower_toffoli(const Circuit& c) {
  Circuit out(c.width(), c.layout());
  out.reserve(c.size() * 2);
  for (const Gate& g : c.gates()) {
    if (g.type() == GateType::Fredkin) {
      Circuit tmp(c.width());
      expand_gate_step1(tmp, g);
      for (const Gate& h : tmp.gates()) {
        if (h.type() == GateType::Toffoli)
          expand_toffoli(out, h);
        else
          out.add(h);
      }
    } else if (g.type() == GateType::Toffoli) {
      expand_toffoli(out, g);
    } else {
      out.add(g);
    }
  }
  return out;
}

Circuit lower_two_qubit(const Circuit& c, const TranspileOptions& options) {
  Circuit out(c.width(), c.layout());
  out.reserve(c.size() * 4);
  auto lower = [&](const Gate& g) {
    switch (g.type()) {
      case GateType::CNOT:
      case GateType::CV:
      case GateType::CVInv: add_cnot_family(out, g, options); break;
      default: out.add(g); break;
    }
  };
  for (const Gate& g : c.gates()) {
    if (single_qubit(g) || g.type() == GateType::XX || g.type() == GateType::CNOT || g.type() == GateType::CV ||
        g.type() == GateType::CVInv) {
      lower(g);
      continue;
    }
    // SWAP, CR_k and the three-qubit gates reach here only when earlier steps were skipped.
    const Circuit expanded = lower_toffoli(expand_to_toffoli_basis([&] {
      Circuit one(c.width());
      one.add(g);
      return one;
    }()));
    for (const Gate& h : expanded.gates()) lower(h);
  }
  return out;
}

NativeProgram merge_singles(const Circuit& c) {
  NativeProgram prog;
  prog.width = c.width();
  prog.gates.reserve(c.size());
  std::vector<Mat2> pending(c.width(), identity2());
  std::vector<bool> dirty(c.width(), false);

  auto emit_r = [&](WireId w, double theta, double phi) {
    const double t = std::remainder(theta, 4.0 * kPi);  // R(theta + 4 pi) == R(theta)
    if (std::abs(t) <= kIdentityTol) return;
    if (std::abs(std::abs(t) - 2.0 * kPi) <= kIdentityTol) {  // R(2 pi) == -I
      prog.global_phase += kPi;
      return;
    }
    prog.gates.push_back(NativeGate::r(w, theta, phi));
  };

  auto flush = [&](WireId w) {
    if (!dirty[w]) return;
    const Mat2 u = pending[w];
    pending[w] = identity2();
    dirty[w] = false;
    if (std::abs(u[1]) <= kIdentityTol && std::abs(u[2]) <= kIdentityTol && std::abs(u[0] - u[3]) <= kIdentityTol) {
      prog.global_phase += std::arg(u[0]);
      return;
    }
    const UnitaryParams p = decompose_unchecked(u);
    prog.global_phase += p.d;
    // Rightmost factor acts first.
    emit_r(w, 2.0 * p.b + kPi, p.a - p.c - kPi / 2.0);
    emit_r(w, -kPi, -p.c - kPi / 2.0);
  };

  for (const Gate& g : c.gates()) {
    if (single_qubit(g)) {
      const auto m = gate_matrix(g);
      pending[g.wire(0)] = Mat2{m[0], m[1], m[2], m[3]} * pending[g.wire(0)];
      dirty[g.wire(0)] = true;
    } else if (g.type() == GateType::XX) {
      flush(g.wire(0));
      flush(g.wire(1));
      prog.gates.push_back(NativeGate::xx(g.wire(0), g.wire(1), g.chi()));
    } else {
      throw std::invalid_argument("merge_singles: gate " + std::string(gate_name(g.type())) +
                                  " is neither XX nor single-qubit");
    }
  }
  for (WireId w = 0; w < c.width(); ++w) flush(w);
  prog.global_phase = wrap_angle(prog.global_phase);
  return prog;
}

NativeProgram transpile(const Circuit& c, const TranspileOptions& options) {
  return merge_singles(lower_two_qubit(lower_toffoli(expand_to_toffoli_basis(c)), options));
}

std::size_t max_single_run(const NativeProgram& p) {
  std::vector<std::size_t> run(p.width, 0);
  std::size_t worst = 0;
  for (const NativeGate& g : p.gates) {
    if (g.is_two_qubit()) {
      run[g.w0] = 0;
      run[g.w1] = 0;
    } else {
      worst = std::max(worst, ++run[g.w0]);
    }
  }
  return worst;
}

std::string to_text(const NativeProgram& p) {
  std::string out = "qubits " + std::to_string(p.width) + "\n";
  for (const NativeGate& g : p.gates) {
    if (g.is_two_qubit())
      out += "XX " + std::to_string(g.w0) + " " + std::to_string(g.w1) + " " + format12(g.chi) + "\n";
    else
      out += "R " + std::to_string(g.w0) + " " + format12(g.theta) + " " + format12(g.phi) + "\n";
  }
  out += "# global_phase " + format12(p.global_phase) + "\n";
  return out;
}

std::string to_json(const NativeProgram& p) {
  nlohmann::ordered_json j;
  j["width"] = p.width;
  j["global_phase"] = round12(p.global_phase);
  auto& gates = j["gates"] = nlohmann::ordered_json::array();
  for (const NativeGate& g : p.gates) {
    if (g.is_two_qubit())
      gates.push_back({{"gate", "XX"}, {"wires", {g.w0, g.w1}}, {"chi", round12(g.chi)}});
    else
      gates.push_back({{"gate", "R"}, {"wires", {g.w0}}, {"theta", round12(g.theta)}, {"phi", round12(g.phi)}});
  }
  return j.dump(2) + "\n";
}

}  // namespace qshor::transpile
