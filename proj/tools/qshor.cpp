// Command-line front end: build, simulate, transpile, estimate, factor, decompose-u.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qshor/circuit.hpp"
#include "qshor/estimator.hpp"
#include "qshor/shor.hpp"
#include "qshor/simulator.hpp"
#include "qshor/templates.hpp"
#include "qshor/transpiler.hpp"

namespace {

using namespace qshor;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return ss.str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoError("error writing to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("error writing '" + path + "'");
}

std::string fmt12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double round12(double v) { return std::stod(fmt12(v)); }

std::uint32_t dense_cap(int flag) {
  if (flag > 0) return static_cast<std::uint32_t>(flag);
  if (const char* env = std::getenv("QSHOR_DENSE_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 30)
      throw std::invalid_argument("QSHOR_DENSE_CAP='" + std::string(env) + "' must be an integer in [1, 30]");
    return static_cast<std::uint32_t>(v);
  }
  return sim::kDefaultDenseCap;
}

std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = static_cast<std::uint32_t>(std::stoul(s));
      return {v, v};
    }
    const auto lo = static_cast<std::uint32_t>(std::stoul(s.substr(0, dots)));
    const auto hi = static_cast<std::uint32_t>(std::stoul(s.substr(dots + 2)));
    if (lo > hi) throw std::invalid_argument("");
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument("--n-range '" + s + "' must look like LO..HI with LO <= HI");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shor order-finding circuits: construction, simulation, trapped-ion transpilation"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("-o,--output", output, "Write the result to this file instead of stdout");

  // build
  auto* build = app.add_subcommand("build", "Emit a template circuit in text form");
  std::string tmpl;
  templates::TemplateParams tp;
  build->add_option("--template", tmpl, "Template name")->required();
  build->add_option("--N", tp.N, "Modulus");
  build->add_option("--y", tp.y, "Base of the exponentiation");
  build->add_option("--m", tp.m, "Multiplier for Ctrl_MULT_MOD");
  build->add_option("--n", tp.n, "Register width (default: bit width of N)");
  build->add_option("--nx", tp.n_x, "Exponent register width");
  build->add_option("--k", tp.k, "Rotation index for CR_k");
  bool list_templates = false;
  build->add_flag("--list", list_templates, "List template names and exit");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Distribution of the order-finding x register");
  std::uint64_t sim_N = 0, sim_y = 0;
  std::uint32_t sim_nx = 0;
  std::string engine = "structured", sim_format = "csv";
  int sim_cap = 0;
  simulate->add_option("--N", sim_N, "Modulus")->required();
  simulate->add_option("--y", sim_y, "Base")->required();
  simulate->add_option("--nx", sim_nx, "Exponent register width")->required();
  simulate->add_option("--engine", engine, "structured or dense")->check(CLI::IsMember({"structured", "dense"}));
  simulate->add_option("--format", sim_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  simulate->add_option("--dense-cap", sim_cap, "Largest width for the dense engine (env QSHOR_DENSE_CAP)");

  // transpile
  auto* transpile_cmd = app.add_subcommand("transpile", "Lower a circuit file to native R/XX gates");
  std::string circuit_path, tr_format = "text";
  std::vector<std::string> negative_pairs;
  transpile_cmd->add_option("file", circuit_path, "Circuit text file ('-' for stdin)")->required();
  transpile_cmd->add_option("--format", tr_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  transpile_cmd->add_option("--negative-xx", negative_pairs, "Wire pairs 'a,b' whose XX angle must be negative");

  // estimate
  auto* estimate_cmd = app.add_subcommand("estimate", "Native resource table for order finding");
  std::string n_range = "2..5", est_format = "csv";
  std::uint32_t est_nx = 0;
  estimate_cmd->add_option("--n-range", n_range, "Register widths, e.g. 2..5");
  estimate_cmd->add_option("--nx", est_nx, "Exponent register width (default 2n+2)");
  estimate_cmd->add_option("--format", est_format, "csv, json or text")
      ->check(CLI::IsMember({"csv", "json", "text"}));

  // factor
  auto* factor_cmd = app.add_subcommand("factor", "Factor N with simulated order finding");
  std::uint64_t fac_N = 0, seed = 0;
  shor::FactorOptions fopts;
  factor_cmd->add_option("--N", fac_N, "Number to factor")->required();
  factor_cmd->add_option("--seed", seed, "Random seed");
  factor_cmd->add_option("--max-trials", fopts.max_trials, "Bases to try");
  factor_cmd->add_option("--shots", fopts.order.shots, "Sample from this many simulated shots (0 = exact)");

  // decompose-u
  auto* decompose = app.add_subcommand("decompose-u", "Angles a, b, c, d of a 2x2 unitary");
  std::vector<double> entries;
  std::string dec_format = "json";
  decompose->add_option("entries", entries, "re00 im00 re01 im01 re10 im10 re11 im11")->required()->expected(8);
  decompose->add_option("--format", dec_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*build) {
      if (list_templates) {
        std::string out;
        for (const auto& name : templates::template_names()) out += name + "\n";
        emit(out, output);
        return 0;
      }
      if (tp.n == 0) tp.n = sim::register_width_for(tp.N);
      if (tp.m == 0) tp.m = 1;
      emit(serialize(templates::build_template(tmpl, tp)), output);
    } else if (*simulate) {
      sim::Distribution dist = [&] {
        if (engine == "dense") {
          sim::DenseOptions opts;
          opts.max_qubits = dense_cap(sim_cap);
          return sim::order_finding_distribution_dense(sim_N, sim_y, sim_nx, opts);
        }
        return sim::order_finding_distribution(sim_N, sim_y, sim_nx);
      }();
      emit(sim_format == "json" ? dist.to_json() : dist.to_csv(), output);
    } else if (*transpile_cmd) {
      const std::string text = circuit_path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                                   : read_file(circuit_path);
      transpile::TranspileOptions topts;
      for (const auto& pair : negative_pairs) {
        unsigned a = 0, b = 0;
        char tail = 0;
        if (std::sscanf(pair.c_str(), "%u,%u%c", &a, &b, &tail) != 2)
          throw std::invalid_argument("--negative-xx '" + pair + "' must look like A,B");
        const auto key = std::minmax(a, b);
        topts.negative_xx_pairs.insert({key.first, key.second});
      }
      const auto prog = transpile::transpile(parse_circuit(text), topts);
      emit(tr_format == "json" ? transpile::to_json(prog) : transpile::to_text(prog), output);
    } else if (*estimate_cmd) {
      const auto [lo, hi] = parse_range(n_range);
      if (lo < 2) throw std::invalid_argument("--n-range: n=" + std::to_string(lo) + " must be >= 2");
      std::vector<estimate::ResourceReport> rows;
      for (std::uint32_t n = lo; n <= hi; ++n) rows.push_back(estimate::estimate_order_finding(n, est_nx));
      if (est_format == "json")
        emit(estimate::to_json(rows), output);
      else if (est_format == "text")
        emit(estimate::to_text(rows), output);
      else
        emit(estimate::to_csv(rows), output);
    } else if (*factor_cmd) {
      emit(shor::to_json(shor::factor(fac_N, seed, fopts)), output);
    } else if (*decompose) {
      const Mat2 u{cplx{entries[0], entries[1]}, cplx{entries[2], entries[3]}, cplx{entries[4], entries[5]},
                   cplx{entries[6], entries[7]}};
      const auto p = transpile::decompose_unitary(u);
      if (dec_format == "text") {
        emit("a " + fmt12(p.a) + "\nb " + fmt12(p.b) + "\nc " + fmt12(p.c) + "\nd " + fmt12(p.d) + "\n", output);
      } else {
        nlohmann::ordered_json j;
        j["a"] = round12(p.a);
        j["b"] = round12(p.b);
        j["c"] = round12(p.c);
        j["d"] = round12(p.d);
        emit(j.dump(2) + "\n", output);
      }
    }
  } catch (const IoError& e) {
    std::cerr << "qshor: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "qshor: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
