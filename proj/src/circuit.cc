#include "qshor/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace qshor {
namespace {

struct GateInfo {
  GateType type;
  std::string_view name;
  std::size_t arity;
};

constexpr std::array<GateInfo, 13> kGateInfo{{
    {GateType::X, "X", 1},
    {GateType::H, "H", 1},
    {GateType::CNOT, "CNOT", 2},
    {GateType::SWAP, "SWAP", 2},
    {GateType::Toffoli, "TOFFOLI", 3},
    {GateType::Fredkin, "FREDKIN", 3},
    {GateType::CRk, "CRK", 2},
    {GateType::CRkInv, "CRK_INV", 2},
    {GateType::CV, "CV", 2},
    {GateType::CVInv, "CV_INV", 2},
    {GateType::U1, "U1", 1},
    {GateType::R, "R", 1},
    {GateType::XX, "XX", 2},
}};

const GateInfo& info(GateType type) { return kGateInfo[static_cast<std::size_t>(type)]; }

cplx crk_phase(int k, double sign) {
  const double angle = sign * 2.0 * kPi / std::ldexp(1.0, k);
  return std::polar(1.0, angle);
}

Mat2 v_matrix() {
  return {cplx{0.5, 0.5}, cplx{0.5, -0.5}, cplx{0.5, -0.5}, cplx{0.5, 0.5}};
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string_view gate_name(GateType type) { return info(type).name; }

std::optional<GateType> gate_type_from_name(std::string_view name) {
  for (const auto& gi : kGateInfo)
    if (gi.name == name) return gi.type;
  return std::nullopt;
}

std::size_t gate_arity(GateType type) { return info(type).arity; }

Gate::Gate(GateType type, std::initializer_list<WireId> wires) : type_(type) {
  if (wires.size() != gate_arity(type))
    throw std::invalid_argument(std::string(gate_name(type)) + ": wrong number of wires");
  std::copy(wires.begin(), wires.end(), wires_.begin());
  arity_ = static_cast<std::uint8_t>(wires.size());
  for (std::size_t i = 0; i < arity_; ++i)
    for (std::size_t j = i + 1; j < arity_; ++j)
      if (wires_[i] == wires_[j])
        throw std::invalid_argument(std::string(gate_name(type)) + ": coincident wires " +
                                    std::to_string(wires_[i]));
}

Gate Gate::x(WireId w) { return Gate(GateType::X, {w}); }
Gate Gate::h(WireId w) { return Gate(GateType::H, {w}); }
Gate Gate::cnot(WireId c, WireId t) { return Gate(GateType::CNOT, {c, t}); }
Gate Gate::swap(WireId a, WireId b) { return Gate(GateType::SWAP, {a, b}); }
Gate Gate::toffoli(WireId c0, WireId c1, WireId t) { return Gate(GateType::Toffoli, {c0, c1, t}); }
Gate Gate::fredkin(WireId c, WireId t0, WireId t1) { return Gate(GateType::Fredkin, {c, t0, t1}); }

Gate Gate::crk(WireId c, WireId t, int k) {
  if (k < 1) throw std::invalid_argument("CRK: k must be >= 1");
  Gate g(GateType::CRk, {c, t});
  g.k_ = k;
  return g;
}

Gate Gate::crk_inv(WireId c, WireId t, int k) {
  if (k < 1) throw std::invalid_argument("CRK_INV: k must be >= 1");
  Gate g(GateType::CRkInv, {c, t});
  g.k_ = k;
  return g;
}

Gate Gate::cv(WireId c, WireId t) { return Gate(GateType::CV, {c, t}); }
Gate Gate::cv_inv(WireId c, WireId t) { return Gate(GateType::CVInv, {c, t}); }

Gate Gate::u1(WireId w, const Mat2& u) {
  if (!(unitarity_error(u) <= 1e-10)) throw std::invalid_argument("U1: matrix is not unitary");
  Gate g(GateType::U1, {w});
  g.u_ = u;
  return g;
}

Gate Gate::r(WireId w, double theta, double phi) {
  Gate g(GateType::R, {w});
  g.p0_ = theta;
  g.p1_ = phi;
  return g;
}

Gate Gate::xx(WireId a, WireId b, double chi) {
  Gate g(GateType::XX, {a, b});
  g.p0_ = chi;
  return g;
}

Gate Gate::adjoint() const {
  Gate g = *this;
  switch (type_) {
    case GateType::CRk: g.type_ = GateType::CRkInv; break;
    case GateType::CRkInv: g.type_ = GateType::CRk; break;
    case GateType::CV: g.type_ = GateType::CVInv; break;
    case GateType::CVInv: g.type_ = GateType::CV; break;
    case GateType::U1: g.u_ = qshor::adjoint(u_); break;
    case GateType::R: g.p0_ = -p0_; break;
    case GateType::XX: g.p0_ = -p0_; break;
    default: break;
  }
  return g;
}

bool Gate::is_classical() const {
  switch (type_) {
    case GateType::X:
    case GateType::CNOT:
    case GateType::SWAP:
    case GateType::Toffoli:
    case GateType::Fredkin: return true;
    default: return false;
  }
}

Mat2 r_matrix(double theta, double phi) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const cplx mi{0.0, -1.0};
  return {cplx{c, 0.0}, mi * std::polar(1.0, -phi) * s, mi * std::polar(1.0, phi) * s, cplx{c, 0.0}};
}

std::vector<cplx> gate_matrix(const Gate& g) {
  const std::size_t dim = std::size_t{1} << g.arity();
  std::vector<cplx> m(dim * dim);
  auto set = [&](std::size_t r, std::size_t c, cplx v) { m[r * dim + c] = v; };
  auto diag = [&] {
    for (std::size_t i = 0; i < dim; ++i) set(i, i, 1.0);
  };
  auto controlled = [&](const Mat2& u) {
    set(0, 0, 1.0);
    set(1, 1, 1.0);
    set(2, 2, u[0]);
    set(2, 3, u[1]);
    set(3, 2, u[2]);
    set(3, 3, u[3]);
  };
  const double rs2 = 1.0 / std::sqrt(2.0);
  switch (g.type()) {
    case GateType::X: set(0, 1, 1.0); set(1, 0, 1.0); break;
    case GateType::H: set(0, 0, rs2); set(0, 1, rs2); set(1, 0, rs2); set(1, 1, -rs2); break;
    case GateType::CNOT: controlled({0.0, 1.0, 1.0, 0.0}); break;
    case GateType::SWAP: set(0, 0, 1.0); set(1, 2, 1.0); set(2, 1, 1.0); set(3, 3, 1.0); break;
    case GateType::Toffoli:
      diag();
      set(6, 6, 0.0); set(7, 7, 0.0); set(6, 7, 1.0); set(7, 6, 1.0);
      break;
    case GateType::Fredkin:
      diag();
      set(5, 5, 0.0); set(6, 6, 0.0); set(5, 6, 1.0); set(6, 5, 1.0);
      break;
    case GateType::CRk: diag(); set(3, 3, crk_phase(g.k(), +1.0)); break;
    case GateType::CRkInv: diag(); set(3, 3, crk_phase(g.k(), -1.0)); break;
    case GateType::CV: controlled(v_matrix()); break;
    case GateType::CVInv: controlled(adjoint(v_matrix())); break;
    case GateType::U1: std::copy(g.matrix().begin(), g.matrix().end(), m.begin()); break;
    case GateType::R: {
      const Mat2 r = r_matrix(g.theta(), g.phi());
      std::copy(r.begin(), r.end(), m.begin());
      break;
    }
    case GateType::XX: {
      const cplx c{std::cos(g.chi()), 0.0};
      const cplx s{0.0, -std::sin(g.chi())};
      for (std::size_t i = 0; i < 4; ++i) {
        set(i, i, c);
        set(i, 3 - i, s);
      }
      break;
    }
  }
  return m;
}

RegisterLayout::RegisterLayout(std::uint32_t n_x, std::uint32_t n) : n_x_(n_x), n_(n) {
  if (n < 1) throw std::invalid_argument("register width n must be >= 1");
}

RegisterLayout RegisterLayout::from_width(std::uint32_t width, std::uint32_t n_x) {
  if (width < n_x + 2 || (width - 2 - n_x) % 5 != 0 || width - 2 - n_x == 0)
    throw std::invalid_argument("Wrong size of registers");
  return RegisterLayout(n_x, (width - 2 - n_x) / 5);
}

WireId RegisterLayout::offset(Reg r) const {
  switch (r) {
    case Reg::x: return 0;
    case Reg::z: return n_x_;
    case Reg::a: return n_x_ + n_;
    case Reg::b: return n_x_ + 2 * n_;
    case Reg::c: return n_x_ + 3 * n_ + 1;
    case Reg::N: return n_x_ + 4 * n_ + 1;
    case Reg::t: return n_x_ + 5 * n_ + 1;
  }
  return 0;
}

std::uint32_t RegisterLayout::size(Reg r) const {
  switch (r) {
    case Reg::x: return n_x_;
    case Reg::b: return n_ + 1;
    case Reg::t: return 1;
    default: return n_;
  }
}

WireId RegisterLayout::wire(Reg r, std::uint32_t i) const {
  if (i >= size(r)) throw std::out_of_range("register index out of range");
  return offset(r) + i;
}

std::vector<WireId> RegisterLayout::wires(Reg r) const {
  std::vector<WireId> out(size(r));
  for (std::uint32_t i = 0; i < size(r); ++i) out[i] = offset(r) + i;
  return out;
}

std::uint64_t RegisterLayout::encode(std::uint64_t basis, Reg r, std::uint64_t value) const {
  const std::uint32_t sz = size(r);
  if (sz < 64 && (value >> sz) != 0) throw std::invalid_argument("value does not fit register");
  const std::uint64_t mask = (sz >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << sz) - 1));
  return (basis & ~(mask << offset(r))) | (value << offset(r));
}

std::uint64_t RegisterLayout::decode(std::uint64_t basis, Reg r) const {
  const std::uint32_t sz = size(r);
  const std::uint64_t mask = (sz >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << sz) - 1));
  return (basis >> offset(r)) & mask;
}

Circuit::Circuit(std::uint32_t width, std::optional<RegisterLayout> layout)
    : width_(width), layout_(layout) {
  if (layout_ && layout_->width() != width_)
    throw std::invalid_argument("Wrong size of registers");
}

Circuit& Circuit::add(const Gate& g) {
  for (WireId w : g.wires())
    if (w >= width_)
      throw std::invalid_argument(std::string(gate_name(g.type())) + ": wire " + std::to_string(w) +
                                  " out of range for width " + std::to_string(width_));
  gates_.push_back(g);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.width_ > width_) throw std::invalid_argument("appended circuit is wider than target");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

Circuit inverse(const Circuit& c) {
  Circuit out(c.width(), c.layout());
  out.reserve(c.size());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) out.add(it->adjoint());
  return out;
}

std::string serialize(const Circuit& c) {
  std::string out = "qubits " + std::to_string(c.width()) + "\n";
  if (c.layout())
    out += "layout " + std::to_string(c.layout()->n_x()) + " " + std::to_string(c.layout()->n()) + "\n";
  for (const Gate& g : c.gates()) {
    out += gate_name(g.type());
    for (WireId w : g.wires()) out += " " + std::to_string(w);
    switch (g.type()) {
      case GateType::CRk:
      case GateType::CRkInv: out += " " + std::to_string(g.k()); break;
      case GateType::R: out += " " + format_double(g.theta()) + " " + format_double(g.phi()); break;
      case GateType::XX: out += " " + format_double(g.chi()); break;
      case GateType::U1:
        for (const cplx& v : g.matrix()) out += " " + format_double(v.real()) + " " + format_double(v.imag());
        break;
      default: break;
    }
    out += "\n";
  }
  return out;
}

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

template <typename T>
T parse_number(std::string_view tok, std::size_t line, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("malformed ") + what + " '" + std::string(tok) + "'");
  if constexpr (std::is_floating_point_v<T>)
    if (!std::isfinite(value)) throw ParseError(line, std::string("non-finite ") + what);
  return value;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  std::optional<Circuit> circuit;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = tokenize(line);
    if (tok.empty()) continue;

    if (!circuit) {
      if (tok[0] != "qubits" || tok.size() != 2) throw ParseError(line_no, "expected 'qubits <width>' header");
      circuit.emplace(parse_number<std::uint32_t>(tok[1], line_no, "width"));
      continue;
    }
    if (tok[0] == "layout") {
      if (tok.size() != 3 || !circuit->empty()) throw ParseError(line_no, "misplaced or malformed layout line");
      const auto n_x = parse_number<std::uint32_t>(tok[1], line_no, "n_x");
      const auto n = parse_number<std::uint32_t>(tok[2], line_no, "n");
      try {
        circuit.emplace(circuit->width(), RegisterLayout(n_x, n));
      } catch (const std::exception& e) {
        throw ParseError(line_no, e.what());
      }
      continue;
    }

    const auto type = gate_type_from_name(tok[0]);
    if (!type) throw ParseError(line_no, "unknown gate '" + std::string(tok[0]) + "'");
    const std::size_t arity = gate_arity(*type);
    std::size_t params = 0;
    switch (*type) {
      case GateType::CRk:
      case GateType::CRkInv:
      case GateType::XX: params = 1; break;
      case GateType::R: params = 2; break;
      case GateType::U1: params = 8; break;
      default: break;
    }
    if (tok.size() != 1 + arity + params)
      throw ParseError(line_no, std::string(tok[0]) + " expects " + std::to_string(arity) + " wires and " +
                                    std::to_string(params) + " parameters");
    std::array<WireId, 3> w{};
    for (std::size_t i = 0; i < arity; ++i) {
      w[i] = parse_number<WireId>(tok[1 + i], line_no, "wire");
      if (w[i] >= circuit->width())
        throw ParseError(line_no, "wire " + std::to_string(w[i]) + " out of range for width " +
                                      std::to_string(circuit->width()));
    }
    auto num = [&](std::size_t i) { return parse_number<double>(tok[1 + arity + i], line_no, "number"); };
    try {
      switch (*type) {
        case GateType::X: circuit->add(Gate::x(w[0])); break;
        case GateType::H: circuit->add(Gate::h(w[0])); break;
        case GateType::CNOT: circuit->add(Gate::cnot(w[0], w[1])); break;
        case GateType::SWAP: circuit->add(Gate::swap(w[0], w[1])); break;
        case GateType::Toffoli: circuit->add(Gate::toffoli(w[0], w[1], w[2])); break;
        case GateType::Fredkin: circuit->add(Gate::fredkin(w[0], w[1], w[2])); break;
        case GateType::CRk:
          circuit->add(Gate::crk(w[0], w[1], parse_number<int>(tok[3], line_no, "k")));
          break;
        case GateType::CRkInv:
          circuit->add(Gate::crk_inv(w[0], w[1], parse_number<int>(tok[3], line_no, "k")));
          break;
        case GateType::CV: circuit->add(Gate::cv(w[0], w[1])); break;
        case GateType::CVInv: circuit->add(Gate::cv_inv(w[0], w[1])); break;
        case GateType::U1: {
          Mat2 u;
          for (std::size_t i = 0; i < 4; ++i) u[i] = cplx{num(2 * i), num(2 * i + 1)};
          circuit->add(Gate::u1(w[0], u));
          break;
        }
        case GateType::R: circuit->add(Gate::r(w[0], num(0), num(1))); break;
        case GateType::XX: circuit->add(Gate::xx(w[0], w[1], num(0))); break;
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!circuit) throw ParseError(line_no, "missing 'qubits <width>' header");
  return std::move(*circuit);
}

}  // namespace qshor
