#include "qshor/estimator.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"
#include "qshor/arith.hpp"
#include "qshor/templates.hpp"

namespace qshor::estimate {
namespace {

nlohmann::ordered_json report_json(const ResourceReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["n_x"] = r.n_x;
  j["N"] = r.N;
  j["y"] = r.y;
  j["total_native"] = r.total_native;
  j["two_qubit"] = r.two_qubit;
  j["single_qubit"] = r.single_qubit;
  j["depth_bound"] = r.depth_bound;
  j["histogram"] = r.histogram;
  return j;
}

}  // namespace

GateCounts count_gates(const transpile::NativeProgram& p) {
  GateCounts c;
  for (const auto& g : p.gates) {
    if (g.is_two_qubit()) {
      ++c.two_qubit;
      ++c.histogram["XX"];
    } else {
      ++c.single_qubit;
      ++c.histogram["R"];
    }
  }
  c.total_native = c.two_qubit + c.single_qubit;
  return c;
}

std::uint64_t depth_bound(const transpile::NativeProgram& p) {
  std::vector<std::uint64_t> label(p.width, 0);
  std::uint64_t top = 0;
  for (const auto& g : p.gates) {
    if (!g.is_two_qubit()) continue;
    const std::uint64_t level = std::max(label[g.w0], label[g.w1]) + 1;
    label[g.w0] = label[g.w1] = level;
    top = std::max(top, level);
  }
  return 3 * top;
}

ResourceReport estimate_order_finding(std::uint32_t n, std::uint32_t n_x) {
  if (n < 2) throw std::invalid_argument("estimate: n=" + std::to_string(n) + " must be >= 2");
  if (n > 30) throw std::invalid_argument("estimate: n=" + std::to_string(n) + " must be <= 30");
  ResourceReport r;
  r.n = n;
  r.n_x = n_x == 0 ? 2 * n + 2 : n_x;
  r.N = (std::uint64_t{1} << n) - 1;
  r.y = 2;
  while (arith::gcd(r.y, r.N) != 1) ++r.y;

  templates::TemplateParams params;
  params.N = r.N;
  params.y = r.y;
  params.n = n;
  params.n_x = r.n_x;
  const transpile::NativeProgram prog = transpile::transpile(templates::order_finding(params));
  const GateCounts counts = count_gates(prog);
  r.total_native = counts.total_native;
  r.two_qubit = counts.two_qubit;
  r.single_qubit = counts.single_qubit;
  r.histogram = counts.histogram;
  r.depth_bound = depth_bound(prog);
  return r;
}

std::string to_json(const ResourceReport& r) { return report_json(r).dump(2) + "\n"; }

std::string to_json(const std::vector<ResourceReport>& rows) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& r : rows) j.push_back(report_json(r));
  return j.dump(2) + "\n";
}

std::string to_csv(const std::vector<ResourceReport>& rows) {
  std::string out = "max_N,total_native,two_qubit,depth_bound,n,n_x,N,y,single_qubit\n";
  for (const auto& r : rows) {
    out += std::to_string(std::uint64_t{1} << r.n) + "," + std::to_string(r.total_native) + "," +
           std::to_string(r.two_qubit) + "," + std::to_string(r.depth_bound) + "," + std::to_string(r.n) + "," +
           std::to_string(r.n_x) + "," + std::to_string(r.N) + "," + std::to_string(r.y) + "," +
           std::to_string(r.single_qubit) + "\n";
  }
  return out;
}

std::string to_text(const std::vector<ResourceReport>& rows) {
  std::string out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-10s %14s %14s %12s\n", "max N", "all native", "two-qubit", "depth");
  out += buf;
  for (const auto& r : rows) {
    const std::string max_n = "2^" + std::to_string(r.n);
    const std::string depth = std::to_string(r.depth_bound / 3) + "*3";
    std::snprintf(buf, sizeof buf, "%-10s %14llu %14llu %12s\n", max_n.c_str(),
                  static_cast<unsigned long long>(r.total_native), static_cast<unsigned long long>(r.two_qubit),
                  depth.c_str());
    out += buf;
  }
  return out;
}

}  // namespace qshor::estimate
