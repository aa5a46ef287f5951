#include "qshor/templates.hpp"

#include <algorithm>
#include <stdexcept>

#include "qshor/arith.hpp"

namespace qshor::templates {
namespace {

using Reg = RegisterLayout::Reg;

// Width for a wire-level template; rejects coincident wires.
std::uint32_t width_for(std::initializer_list<WireId> wires) {
  for (auto i = wires.begin(); i != wires.end(); ++i)
    if (std::find(i + 1, wires.end(), *i) != wires.end())
      throw std::invalid_argument("template wires must be distinct; wire " + std::to_string(*i) + " repeats");
  return std::max(wires) + 1;
}

Circuit layout_circuit(const RegisterLayout& layout) { return Circuit(layout.width(), layout); }

// CNOTs from t onto the a-register wires holding the set bits of `value`.
void toggle_constant(Circuit& c, const RegisterLayout& layout, WireId t, std::uint64_t value) {
  for (std::uint32_t j = 0; j < layout.n(); ++j)
    if ((value >> j) & 1u) c.add(Gate::cnot(t, layout.a(j)));
}

// Toffolis from (control, z_i) onto the a-register wires holding set bits of `value`.
void load_constant(Circuit& c, const RegisterLayout& layout, WireId control, WireId z_i, std::uint64_t value) {
  for (std::uint32_t j = 0; j < layout.n(); ++j)
    if ((value >> j) & 1u) c.add(Gate::toffoli(control, z_i, layout.a(j)));
}

void swap_registers(Circuit& c, const RegisterLayout& layout, Reg lhs, Reg rhs, std::uint32_t count) {
  for (std::uint32_t j = 0; j < count; ++j) c.add(Gate::swap(layout.wire(lhs, j), layout.wire(rhs, j)));
}

}  // namespace

void validate_modulus(std::uint64_t N, std::uint32_t n) {
  if (n < 1 || n > 30) throw std::invalid_argument("register width n=" + std::to_string(n) + " must be in [1, 30]");
  if (N >= (std::uint64_t{1} << n))
    throw std::invalid_argument("N is too big: N=" + std::to_string(N) + " needs more than n=" + std::to_string(n) +
                                " bits");
  if (N < 1) throw std::invalid_argument("N must be >= 1");
}

Circuit sum_gate(WireId w0, WireId w1, WireId w2) {
  Circuit c(width_for({w0, w1, w2}));
  c.add(Gate::cnot(w0, w2));
  c.add(Gate::cnot(w1, w2));
  return c;
}

Circuit sum_gate_inv(WireId w0, WireId w1, WireId w2) { return inverse(sum_gate(w0, w1, w2)); }

Circuit carry_gate(WireId c_i, WireId a, WireId b, WireId c_next) {
  Circuit c(width_for({c_i, a, b, c_next}));
  c.add(Gate::toffoli(a, b, c_next));
  c.add(Gate::cnot(a, b));
  c.add(Gate::toffoli(c_i, b, c_next));
  return c;
}

Circuit carry_gate_inv(WireId c_i, WireId a, WireId b, WireId c_next) {
  return inverse(carry_gate(c_i, a, b, c_next));
}

Circuit adder(const RegisterLayout& layout) {
  const std::uint32_t n = layout.n();
  Circuit c = layout_circuit(layout);
  for (std::uint32_t i = 0; i < n; ++i) {
    const WireId next = (i + 1 < n) ? layout.c(i + 1) : layout.b(n);
    c.append(carry_gate(layout.c(i), layout.a(i), layout.b(i), next));
  }
  c.add(Gate::cnot(layout.a(n - 1), layout.b(n - 1)));
  c.append(sum_gate(layout.c(n - 1), layout.a(n - 1), layout.b(n - 1)));
  for (std::uint32_t i = n - 1; i-- > 0;) {
    c.append(carry_gate_inv(layout.c(i), layout.a(i), layout.b(i), layout.c(i + 1)));
    c.append(sum_gate(layout.c(i), layout.a(i), layout.b(i)));
  }
  return c;
}

Circuit adder_inv(const RegisterLayout& layout) { return inverse(adder(layout)); }

Circuit adder_mod(const RegisterLayout& layout, std::uint64_t N) {
  validate_modulus(N, layout.n());
  const std::uint32_t n = layout.n();
  const WireId top = layout.b(n);
  const WireId t = layout.t();
  const Circuit add = adder(layout);
  const Circuit sub = inverse(add);

  Circuit c = layout_circuit(layout);
  // Block 1: b <- a + b - N; t flags a + b >= N (top bit of b clear).
  c.append(add);
  swap_registers(c, layout, Reg::a, Reg::N, n);
  c.append(sub);
  c.add(Gate::x(top));
  c.add(Gate::cnot(top, t));
  c.add(Gate::x(top));
  // Add N back unless t is set: register a is cleared when t = 1.
  toggle_constant(c, layout, t, N);
  c.append(add);
  toggle_constant(c, layout, t, N);
  swap_registers(c, layout, Reg::a, Reg::N, n);
  // Block 2: b - a is negative exactly when t = 1.
  c.append(sub);
  c.add(Gate::cnot(top, t));
  c.append(add);
  return c;
}

Circuit adder_mod_inv(const RegisterLayout& layout, std::uint64_t N) { return inverse(adder_mod(layout, N)); }

Circuit ctrl_mult_mod(const RegisterLayout& layout, WireId control, std::uint64_t m, std::uint64_t N) {
  validate_modulus(N, layout.n());
  if (arith::gcd(m, N) != 1)
    throw std::invalid_argument("Ctrl_MULT_MOD: m=" + std::to_string(m) + " is not coprime to N=" + std::to_string(N));
  const std::uint32_t n = layout.n();
  for (Reg r : {Reg::z, Reg::a, Reg::b, Reg::c, Reg::N, Reg::t}) {
    const WireId lo = layout.offset(r);
    if (control >= lo && control < lo + layout.size(r))
      throw std::invalid_argument("Ctrl_MULT_MOD: control wire lies inside a work register");
  }
  const Circuit add_mod = adder_mod(layout, N);

  Circuit c = layout_circuit(layout);
  std::uint64_t addend = m % N;  // 2^i * m mod N
  for (std::uint32_t i = 0; i < n; ++i) {
    load_constant(c, layout, control, layout.z(i), addend);
    c.append(add_mod);
    load_constant(c, layout, control, layout.z(i), addend);
    addend = (addend * 2) % N;
  }
  // Control clear: copy z into b.
  c.add(Gate::x(control));
  for (std::uint32_t i = 0; i < n; ++i) c.add(Gate::toffoli(control, layout.z(i), layout.b(i)));
  c.add(Gate::x(control));
  return c;
}

Circuit ctrl_mult_mod_inv(const RegisterLayout& layout, WireId control, std::uint64_t m, std::uint64_t N) {
  return inverse(ctrl_mult_mod(layout, control, m, N));
}

Circuit ctrl_swap(WireId control, WireId t1, WireId t2) {
  Circuit c(width_for({control, t1, t2}));
  c.add(Gate::fredkin(control, t1, t2));
  return c;
}

Circuit modular_exponentiation(const RegisterLayout& layout, std::uint64_t y, std::uint64_t N) {
  validate_modulus(N, layout.n());
  if (N < 2) throw std::invalid_argument("MODULAR_EXPONENTIATION: N must be >= 2");
  if (layout.n_x() < 1) throw std::invalid_argument("MODULAR_EXPONENTIATION: x register is empty");
  if (arith::gcd(y, N) != 1)
    throw std::invalid_argument("MODULAR_EXPONENTIATION: y=" + std::to_string(y) + " is not coprime to N=" +
                                std::to_string(N));
  const std::vector<std::uint64_t> multipliers = arith::precompute_multipliers(y, N, layout.n_x());

  Circuit c = layout_circuit(layout);
  for (std::uint32_t i = 0; i < layout.n_x(); ++i) {
    const std::uint64_t m = multipliers[i];
    const std::uint64_t m_inv = arith::modular_multiplicative_inverse(m, N);
    c.append(ctrl_mult_mod(layout, layout.x(i), m, N));
    swap_registers(c, layout, Reg::z, Reg::b, layout.n());
    c.append(ctrl_mult_mod_inv(layout, layout.x(i), m_inv, N));
  }
  return c;
}

Circuit cr_k(WireId control, WireId target, int k) {
  Circuit c(width_for({control, target}));
  c.add(Gate::crk(control, target, k));
  return c;
}

Circuit cr_k_inv(WireId control, WireId target, int k) { return inverse(cr_k(control, target, k)); }

Circuit qft(std::span<const WireId> wires) {
  if (wires.empty()) throw std::invalid_argument("QFT needs at least one wire");
  const auto n = static_cast<std::uint32_t>(wires.size());
  Circuit c(*std::max_element(wires.begin(), wires.end()) + 1);
  // Most-significant wire first.
  for (std::uint32_t j = n; j-- > 0;) {
    c.add(Gate::h(wires[j]));
    for (std::uint32_t l = j; l-- > 0;) c.add(Gate::crk(wires[l], wires[j], static_cast<int>(j - l + 1)));
  }
  for (std::uint32_t i = 0; i < n / 2; ++i) c.add(Gate::swap(wires[i], wires[n - 1 - i]));
  return c;
}

Circuit qft_inv(std::span<const WireId> wires) { return inverse(qft(wires)); }

Circuit order_finding(const TemplateParams& params) {
  if (params.n_x < 1) throw std::invalid_argument("Wrong size of registers: n_x must be >= 1");
  validate_modulus(params.N, params.n);
  const RegisterLayout layout = params.layout();
  const std::vector<WireId> x = layout.wires(Reg::x);

  Circuit c = layout_circuit(layout);
  for (WireId w : x) c.add(Gate::h(w));
  c.append(modular_exponentiation(layout, params.y, params.N));
  c.append(qft_inv(x));
  return c;
}

std::vector<std::string> template_names() {
  return {"SUM",           "SUM_inv",           "CARRY",     "CARRY_inv",
          "ADDER",         "ADDER_inv",         "ADDER_MOD", "ADDER_MOD_inv",
          "Ctrl_MULT_MOD", "Ctrl_MULT_MOD_inv", "Ctrl_SWAP", "MODULAR_EXPONENTIATION",
          "CR_k",          "CR_k_inv",          "QFT_",      "QFT_inv",
          "Order_Finding"};
}

Circuit build_template(std::string_view name, const TemplateParams& p) {
  auto layout = [&] { return p.layout(); };
  auto x_wires = [&] {
    if (p.n_x < 1) throw std::invalid_argument(std::string(name) + ": n_x must be >= 1");
    std::vector<WireId> w(p.n_x);
    for (std::uint32_t i = 0; i < p.n_x; ++i) w[i] = i;
    return w;
  };
  auto control = [&] {
    if (p.n_x < 1) throw std::invalid_argument(std::string(name) + ": needs n_x >= 1 for the control wire");
    return layout().x(0);
  };
  if (name == "SUM") return sum_gate(0, 1, 2);
  if (name == "SUM_inv") return sum_gate_inv(0, 1, 2);
  if (name == "CARRY") return carry_gate(0, 1, 2, 3);
  if (name == "CARRY_inv") return carry_gate_inv(0, 1, 2, 3);
  if (name == "ADDER") return adder(layout());
  if (name == "ADDER_inv") return adder_inv(layout());
  if (name == "ADDER_MOD") return adder_mod(layout(), p.N);
  if (name == "ADDER_MOD_inv") return adder_mod_inv(layout(), p.N);
  if (name == "Ctrl_MULT_MOD") return ctrl_mult_mod(layout(), control(), p.m, p.N);
  if (name == "Ctrl_MULT_MOD_inv") return ctrl_mult_mod_inv(layout(), control(), p.m, p.N);
  if (name == "Ctrl_SWAP") return ctrl_swap(0, 1, 2);
  if (name == "MODULAR_EXPONENTIATION") return modular_exponentiation(layout(), p.y, p.N);
  if (name == "CR_k") return cr_k(0, 1, p.k);
  if (name == "CR_k_inv") return cr_k_inv(0, 1, p.k);
  if (name == "QFT_") return qft(x_wires());
  if (name == "QFT_inv") return qft_inv(x_wires());
  if (name == "Order_Finding") return order_finding(p);
  throw std::invalid_argument("unknown template '" + std::string(name) + "'");
}

}  // namespace qshor::templates
