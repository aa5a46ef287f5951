#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qshor/circuit.hpp"

namespace qshor::templates {

/// Parameters shared by the arithmetic templates. `m` is only read by the
/// multiplication templates, `k` only by CR_k.
struct TemplateParams {
  std::uint64_t N = 0;
  std::uint64_t y = 0;
  std::uint64_t m = 0;
  std::uint32_t n = 0;
  std::uint32_t n_x = 0;
  int k = 1;

  RegisterLayout layout() const { return RegisterLayout(n_x, n); }
};

/// c <- c xor a xor b on (w0, w1, w2) = (a, b, c).
Circuit sum_gate(WireId w0, WireId w1, WireId w2);
Circuit sum_gate_inv(WireId w0, WireId w1, WireId w2);

/// Ripple-carry step: c_next ^= majority(c_i, a, b); leaves a xor b in b.
Circuit carry_gate(WireId c_i, WireId a, WireId b, WireId c_next);
Circuit carry_gate_inv(WireId c_i, WireId a, WireId b, WireId c_next);

/// |a>|b>|c=0> -> |a>|a+b>|0> on registers a (n), b (n+1) and c (n).
/// For arbitrary b the top wire makes this addition modulo 2^(n+1).
Circuit adder(const RegisterLayout& layout);
Circuit adder_inv(const RegisterLayout& layout);

/// |a>|b>|0>|N>|0> -> |a>|(a+b) mod N>|0>|N>|0> for a, b < N. The wiring of
/// the N-conditioned CNOTs depends on the classical value of N.
Circuit adder_mod(const RegisterLayout& layout, std::uint64_t N);
Circuit adder_mod_inv(const RegisterLayout& layout, std::uint64_t N);

/// With z < N and a, b, c, t zeroed: b <- z*m mod N when `control` is 1, b <- z
/// otherwise. Requires gcd(m, N) = 1.
Circuit ctrl_mult_mod(const RegisterLayout& layout, WireId control, std::uint64_t m, std::uint64_t N);
Circuit ctrl_mult_mod_inv(const RegisterLayout& layout, WireId control, std::uint64_t m, std::uint64_t N);

/// Fredkin gate.
Circuit ctrl_swap(WireId control, WireId t1, WireId t2);

/// |x>|1>|0>|0>|0>|N>|0> -> |x>|y^x mod N>|0>|0>|0>|N>|0>.
Circuit modular_exponentiation(const RegisterLayout& layout, std::uint64_t y, std::uint64_t N);

Circuit cr_k(WireId control, WireId target, int k);
Circuit cr_k_inv(WireId control, WireId target, int k);

/// Unitary equals F[j,k] = 2^{-n/2} exp(2 pi i jk / 2^n) with wires[0] as the
/// least-significant bit; includes the terminal bit-reversal swaps.
Circuit qft(std::span<const WireId> wires);
Circuit qft_inv(std::span<const WireId> wires);

/// H on every x wire, modular exponentiation, inverse QFT on x.
Circuit order_finding(const TemplateParams& params);

/// Validates the parameter constraints shared by the modular templates.
/// Throws std::invalid_argument with messages such as "N is too big".
void validate_modulus(std::uint64_t N, std::uint32_t n);

/// Template names accepted by build_template.
std::vector<std::string> template_names();

/// Builds a template by name. Register-based templates use the full
/// order-finding layout (n_x, n); wire-based ones use wires 0, 1, 2.
Circuit build_template(std::string_view name, const TemplateParams& params);

}  // namespace qshor::templates
