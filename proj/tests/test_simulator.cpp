#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qshor/arith.hpp"
#include "qshor/simulator.hpp"
#include "qshor/templates.hpp"

using namespace qshor;

TEST_CASE("dense engine basics") {
  const sim::StateVector s0 = sim::StateVector::basis(3, 5);
  const sim::StateVector same = sim::simulate_dense(Circuit(3), s0);
  for (std::uint64_t i = 0; i < 8; ++i) CHECK(same[i] == s0[i]);

  Circuit h(1);
  h.add(Gate::h(0));
  const auto out = sim::simulate_dense(h, sim::StateVector::basis(1, 0));
  CHECK(std::abs(out[0] - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(out[1] - 1.0 / std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("dense engine enforces the width cap") {
  Circuit wide(15);
  CHECK_THROWS_AS(sim::simulate_dense(wide, sim::StateVector(15)), std::invalid_argument);
  sim::DenseOptions opts;
  opts.max_qubits = 15;
  CHECK_NOTHROW(sim::simulate_dense(wide, sim::StateVector(15), opts));
}

TEST_CASE("property: dense engine matches matrix-product oracle") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c = oracle::random_elementary(rng, 6, 40);
    c.add(Gate::r(2, 0.7, 0.1)).add(Gate::xx(1, 4, -0.3));
    std::vector<cplx> amps(64);
    double norm = 0;
    for (auto& a : amps) {
      a = {g(rng), g(rng)};
      norm += std::norm(a);
    }
    for (auto& a : amps) a /= std::sqrt(norm);
    const auto out = sim::simulate_dense(c, sim::StateVector(6, amps));
    const DenseMatrix u = oracle::circuit_matrix(c);
    double err = 0;
    for (std::size_t r = 0; r < 64; ++r) {
      cplx acc = 0;
      for (std::size_t k = 0; k < 64; ++k) acc += u(r, k) * amps[k];
      err = std::max(err, std::abs(acc - out[r]));
    }
    CHECK(err < 1e-10);
    CHECK(std::abs(out.norm_squared() - 1.0) < 1e-9);
  }
}

TEST_CASE("reversible engine") {
  Circuit c(1);
  c.add(Gate::x(0));
  CHECK(sim::simulate_reversible(c, 0) == 1);
  const RegisterLayout l(1, 3);
  const auto in = l.encode(l.encode(0, RegisterLayout::Reg::a, 3), RegisterLayout::Reg::b, 2);
  CHECK(l.decode(sim::simulate_reversible(templates::adder(l), in), RegisterLayout::Reg::b) == 5);

  Circuit bad(2);
  bad.add(Gate::x(0)).add(Gate::h(1));
  CHECK_THROWS_WITH_AS(sim::simulate_reversible(bad, 0), doctest::Contains("H at position 1"), std::invalid_argument);
}

TEST_CASE("property: reversible, batch and naive evaluation agree") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t width = 1 + rng() % 40;
    const Circuit c = oracle::random_classical(rng, width, 30);
    std::vector<std::uint64_t> inputs(100);
    for (auto& v : inputs) v = rng() & ((std::uint64_t{1} << width) - 1);
    const auto batch = sim::simulate_reversible_batch(c, inputs);
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      REQUIRE(sim::simulate_reversible(c, inputs[i]) == oracle::classical_eval(c, inputs[i]));
      REQUIRE(batch[i] == oracle::classical_eval(c, inputs[i]));
    }
  }
}

TEST_CASE("property: dense and reversible agree on basis inputs") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint32_t width = 1 + rng() % 8;
    const Circuit c = oracle::random_classical(rng, width, 20);
    for (std::uint64_t in = 0; in < (std::uint64_t{1} << width); ++in) {
      const auto out = sim::simulate_dense(c, sim::StateVector::basis(width, in));
      REQUIRE(std::abs(out[sim::simulate_reversible(c, in)] - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("measure_probs") {
  const auto basis = sim::StateVector::basis(3, 6);
  const WireId all[] = {0, 1, 2};
  const auto d = sim::measure_probs(basis, all);
  CHECK(d.probability(6) == doctest::Approx(1.0));
  CHECK(d.total() == doctest::Approx(1.0));

  const double s = 1.0 / std::sqrt(2.0);
  const sim::StateVector bell(2, {s, 0, 0, s});
  const WireId w0[] = {0};
  const auto m = sim::measure_probs(bell, w0);
  CHECK(m.probability(0) == doctest::Approx(0.5));
  CHECK(m.probability(1) == doctest::Approx(0.5));

  const WireId dup[] = {1, 1};
  CHECK_THROWS_AS(sim::measure_probs(bell, dup), std::invalid_argument);

  std::mt19937_64 rng(14);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<cplx> amps(32);
    double norm = 0;
    for (auto& a : amps) {
      a = {g(rng), g(rng)};
      norm += std::norm(a);
    }
    for (auto& a : amps) a /= std::sqrt(norm);
    const auto wires = oracle::distinct_wires(rng, 5, 1 + rng() % 5);
    CHECK(std::abs(sim::measure_probs(sim::StateVector(5, amps), wires).total() - 1.0) < 1e-10);
  }
}

TEST_CASE("measure_probs orders bits as listed") {
  const auto s = sim::StateVector::basis(3, 0b001);
  const WireId order[] = {2, 0};
  CHECK(sim::measure_probs(s, order).probability(0b10) == doctest::Approx(1.0));
}

TEST_CASE("order-finding distribution examples") {
  const auto constant = sim::order_finding_distribution(5, 1, 4);
  CHECK(constant.probability(0) == doctest::Approx(1.0));

  const auto r2 = sim::order_finding_distribution(5, 4, 8);
  CHECK(std::abs(r2.probability(0) - 0.5) < 1e-12);
  CHECK(std::abs(r2.probability(128) - 0.5) < 1e-12);

  const auto r4 = sim::order_finding_distribution(5, 3, 8);
  for (std::uint64_t k : {0, 64, 128, 192}) CHECK(std::abs(r4.probability(k) - 0.25) < 1e-12);
  CHECK(std::abs(r4.total() - 1.0) < 1e-9);

  CHECK_THROWS_AS(sim::order_finding_distribution(15, 5, 4), std::invalid_argument);
}

TEST_CASE("property: r | 2^n_x puts 1/r on multiples of 2^n_x / r") {
  for (std::uint64_t N : {3u, 5u, 15u, 17u}) {
    for (std::uint64_t y = 2; y < N; ++y) {
      if (std::gcd(y, N) != 1) continue;
      const std::uint64_t r = arith::classical_order(y, N);
      const std::uint32_t n_x = 8;
      if ((256 % r) != 0) continue;
      const auto d = sim::order_finding_distribution(N, y, n_x);
      for (std::uint64_t k = 0; k < 256; ++k) {
        const double expect = (k % (256 / r) == 0) ? 1.0 / double(r) : 0.0;
        REQUIRE(std::abs(d.probability(k) - expect) < 1e-9);
      }
    }
  }
}

TEST_CASE("structured evaluator matches the dense pipeline") {
  for (std::uint64_t y : {1u, 2u}) {
    const auto fast = sim::order_finding_distribution(3, y, 2);
    const auto dense = sim::order_finding_distribution_dense(3, y, 2);
    for (std::uint64_t k = 0; k < 4; ++k) CHECK(std::abs(fast.probability(k) - dense.probability(k)) < 1e-9);
  }
}

TEST_CASE("modexp_table reads z after the reversible circuit") {
  const auto t = sim::modexp_table(21, 2, 10);
  for (std::uint64_t x = 0; x < t.size(); ++x) REQUIRE(t[x] == arith::mod_pow(2, x, 21));
}

TEST_CASE("distribution export") {
  const auto d = sim::order_finding_distribution(5, 3, 8);
  CHECK(d.to_csv() == "outcome,probability\n0,0.25\n64,0.25\n128,0.25\n192,0.25\n");
  CHECK(d.to_json().find("\"bits\": 8") != std::string::npos);
  std::mt19937_64 a(5), b(5);
  for (int i = 0; i < 10; ++i) CHECK(d.sample(a) == d.sample(b));
}
