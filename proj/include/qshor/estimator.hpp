#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qshor/transpiler.hpp"

namespace qshor::estimate {

struct GateCounts {
  std::uint64_t total_native = 0;
  std::uint64_t two_qubit = 0;
  std::uint64_t single_qubit = 0;
  std::map<std::string, std::uint64_t> histogram;  // "R", "XX"
};

struct ResourceReport {
  std::uint32_t n = 0;
  std::uint32_t n_x = 0;
  std::uint64_t N = 0;
  std::uint64_t y = 0;
  std::uint64_t total_native = 0;
  std::uint64_t two_qubit = 0;
  std::uint64_t single_qubit = 0;
  std::uint64_t depth_bound = 0;  // already multiplied by 3
  std::map<std::string, std::uint64_t> histogram;
};

GateCounts count_gates(const transpile::NativeProgram& p);

/// Each two-qubit gate gets level max(label(a), label(b)) + 1 on both wires;
/// single-qubit gates are skipped. Returns 3 * the largest label.
std::uint64_t depth_bound(const transpile::NativeProgram& p);

/// Transpiles the order-finding circuit for N = 2^n - 1 and the smallest
/// y >= 2 coprime to N. n_x = 0 selects the default 2n + 2.
ResourceReport estimate_order_finding(std::uint32_t n, std::uint32_t n_x = 0);

std::string to_json(const ResourceReport& r);
std::string to_json(const std::vector<ResourceReport>& rows);
std::string to_csv(const std::vector<ResourceReport>& rows);
std::string to_text(const std::vector<ResourceReport>& rows);

}  // namespace qshor::estimate
