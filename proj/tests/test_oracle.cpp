#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knapqaoa/fixtures.hpp"
#include "knapqaoa/oracle.hpp"
#include "support/reference.hpp"

using namespace knapqaoa;
using testref::max_abs_diff;

namespace {

KnapsackInstance make_instance(std::vector<std::int64_t> weights, std::int64_t capacity) {
  KnapsackInstance inst;
  inst.values.assign(weights.size(), 1.0);
  inst.weights = std::move(weights);
  inst.capacity = capacity;
  return inst;
}

// Basis state |x> on the choice register, everything else |0>.
StateVector basis_state(const RegisterLayout& layout, std::size_t x) {
  StateVector state(layout.total_qubits());
  for (std::size_t i = 0; i < layout.choice.size(); ++i) {
    if (x & (std::size_t{1} << i)) state.apply_x(layout.choice[i]);
  }
  return state;
}

std::size_t weight_register_value(const StateVector& state, const RegisterLayout& layout) {
  // The state must be a computational basis state for this readout.
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (std::abs(state.amp(i)) > 0.5) {
      std::size_t value = 0;
      for (std::size_t t = 0; t < layout.weight.size(); ++t) {
        if (i & (std::size_t{1} << layout.weight[t])) value |= std::size_t{1} << t;
      }
      return value;
    }
  }
  FAIL("state is not a basis state");
  return 0;
}

}  // namespace

TEST_CASE("oracle parameter derivation") {
  CHECK(derive_oracle_params(make_instance({1, 1, 1, 1}, 2)) .threshold_bit == 2);
  {
    const auto p = derive_oracle_params(make_instance({1, 1, 1, 1}, 2));
    CHECK(p.offset == 1);
    CHECK(p.weight_qubits == 3);
  }
  {
    const auto p = derive_oracle_params(make_instance({1, 1}, 1));
    CHECK(p.threshold_bit == 1);
    CHECK(p.offset == 0);
    CHECK(p.weight_qubits == 2);
  }
  {
    const auto p = derive_oracle_params(make_instance(std::vector<std::int64_t>(8, 1), 4));
    CHECK(p.threshold_bit == 3);
    CHECK(p.offset == 3);
    CHECK(p.weight_qubits == 4);
  }
  for (const auto& f : table_fixtures()) {
    const auto p = derive_oracle_params(f.instance);
    CHECK((std::int64_t{1} << p.threshold_bit) == f.instance.capacity + p.offset + 1);
    CHECK((std::int64_t{1} << p.weight_qubits) > f.instance.total_weight() + p.offset);
  }
}

TEST_CASE("layout qubit accounting matches the published counts") {
  const int expected[] = {7, 8, 10, 11, 12, 13, 15};
  int idx = 0;
  for (const auto& f : table_fixtures()) {
    const auto layout = standard_layout(f.instance);
    CHECK(layout.total_qubits() == expected[idx]);
    CHECK(layout.total_qubits() == f.qubits);
    ++idx;
  }
}

TEST_CASE("u1 writes w(x) + offset into the weight register") {
  for (const auto& weights : {std::vector<std::int64_t>{1, 1}, std::vector<std::int64_t>{2, 3, 1},
                              std::vector<std::int64_t>{1, 4, 2, 1}}) {
    for (std::int64_t cap = 0; cap <= 4; ++cap) {
      const auto inst = make_instance(weights, cap);
      const auto params = derive_oracle_params(inst);
      const auto layout = standard_layout(inst, params);
      for (std::size_t x = 0; x < (std::size_t{1} << inst.size()); ++x) {
        auto state = basis_state(layout, x);
        apply_u1(state, layout, inst, params, false);

        std::int64_t expected = params.offset;
        for (std::size_t i = 0; i < inst.size(); ++i) {
          if (x & (std::size_t{1} << i)) expected += inst.weights[i];
        }
        CHECK(weight_register_value(state, layout) == static_cast<std::size_t>(expected));

        apply_u1(state, layout, inst, params, true);
        const auto original = basis_state(layout, x);
        CHECK(max_abs_diff(state.amplitudes(), original.amplitudes()) < 1e-10);
      }
    }
  }
}

TEST_CASE("u1 offset alone loads the offset") {
  const auto inst = make_instance(std::vector<std::int64_t>(8, 1), 4);  // offset 3
  const auto params = derive_oracle_params(inst);
  const auto layout = standard_layout(inst, params);
  auto state = basis_state(layout, 0);
  apply_u1(state, layout, inst, params, false);
  CHECK(weight_register_value(state, layout) == 3);
}

TEST_CASE("u2 tests the high bits of the weight register") {
  const auto inst = make_instance({1, 1}, 1);  // k = 1, q_w = 2
  const auto params = derive_oracle_params(inst);
  const auto layout = standard_layout(inst, params);

  // Register value 1: bit 1 clear, flag flips.
  StateVector one(layout.total_qubits());
  one.apply_x(layout.weight[0]);
  apply_u2(one, layout, params, layout.ancilla_fi);
  CHECK(std::abs(one.amp((std::size_t{1} << layout.weight[0]) |
                         (std::size_t{1} << layout.ancilla_fi)) -
                 StateVector::Complex{1.0, 0.0}) < 1e-12);

  // Register value 2: bit 1 set, flag untouched.
  StateVector two(layout.total_qubits());
  two.apply_x(layout.weight[1]);
  apply_u2(two, layout, params, layout.ancilla_fi);
  CHECK(std::abs(two.amp(std::size_t{1} << layout.weight[1]) - StateVector::Complex{1.0, 0.0}) <
        1e-12);
}

TEST_CASE("u2 with no high bits always flips") {
  // capacity beyond the total weight: k >= q_w, the control set is empty.
  const auto inst = make_instance({1, 1}, 5);
  const auto params = derive_oracle_params(inst);
  CHECK(params.threshold_bit >= params.weight_qubits);
  const auto layout = standard_layout(inst, params);
  for (std::size_t x = 0; x < 4; ++x) {
    auto state = basis_state(layout, x);
    apply_oracle(state, layout, inst, params, layout.ancilla_fi);
    const std::size_t expected =
        (x & 1 ? std::size_t{1} << layout.choice[0] : 0) |
        (x & 2 ? std::size_t{1} << layout.choice[1] : 0) |
        (std::size_t{1} << layout.ancilla_fi);
    CHECK(std::abs(state.amp(expected) - StateVector::Complex{1.0, 0.0}) < 1e-9);
  }
}

TEST_CASE("oracle truth table matches classical feasibility") {
  for (const char* name : {"stocks2", "stocks3", "stocks4", "stocks5"}) {
    const auto& inst = fixture(name).instance;
    const auto params = derive_oracle_params(inst);
    const auto layout = standard_layout(inst, params);
    Bits bits(inst.size(), 0);
    for (std::size_t x = 0; x < (std::size_t{1} << inst.size()); ++x) {
      for (std::size_t i = 0; i < inst.size(); ++i) bits[i] = (x >> i) & 1u;
      auto state = basis_state(layout, x);
      apply_oracle(state, layout, inst, params, layout.ancilla_fi);

      auto expected = basis_state(layout, x);
      if (is_feasible(bits, inst)) expected.apply_x(layout.ancilla_fi);
      CHECK(max_abs_diff(state.amplitudes(), expected.amplitudes()) < 1e-9);
      CHECK(nonzero_weight_mass(state, layout) < 1e-12);
    }
  }
}

TEST_CASE("zero-weight items never move the register") {
  const auto inst = make_instance({0, 2, 1}, 2);
  const auto params = derive_oracle_params(inst);
  const auto layout = standard_layout(inst, params);
  Bits bits(inst.size(), 0);
  for (std::size_t x = 0; x < 8; ++x) {
    for (std::size_t i = 0; i < 3; ++i) bits[i] = (x >> i) & 1u;
    auto state = basis_state(layout, x);
    apply_oracle(state, layout, inst, params, layout.ancilla_fi);
    auto expected = basis_state(layout, x);
    if (is_feasible(bits, inst)) expected.apply_x(layout.ancilla_fi);
    CHECK(max_abs_diff(state.amplitudes(), expected.amplitudes()) < 1e-9);
  }
}

TEST_CASE("oracle applied twice is the identity") {
  const auto& inst = fixture("stocks3").instance;
  const auto params = derive_oracle_params(inst);
  const auto layout = standard_layout(inst, params);
  auto state = init_state(layout);
  const auto before = state.amplitudes();
  apply_oracle(state, layout, inst, params, layout.ancilla_fi);
  apply_oracle(state, layout, inst, params, layout.ancilla_fi);
  CHECK(max_abs_diff(state.amplitudes(), before) < 1e-10);
}

TEST_CASE("oracle is linear on superpositions") {
  const auto inst = make_instance({1, 2, 1}, 2);
  const auto params = derive_oracle_params(inst);
  const auto layout = standard_layout(inst, params);
  auto rng = testref::make_rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    // Random choice-register superposition with clean work registers.
    StateVector state(layout.total_qubits());
    std::vector<StateVector::Complex> coeffs(8);
    double norm = 0.0;
    for (auto& c : coeffs) {
      c = {testref::uniform(rng, -1.0, 1.0), testref::uniform(rng, -1.0, 1.0)};
      norm += std::norm(c);
    }
    for (std::size_t x = 0; x < 8; ++x) {
      std::size_t idx = 0;
      for (int i = 0; i < 3; ++i) {
        if (x & (std::size_t{1} << i)) idx |= std::size_t{1} << layout.choice[i];
      }
      state.amp(idx) = coeffs[x] / std::sqrt(norm);
    }
    auto combined = state;
    apply_oracle(combined, layout, inst, params, layout.ancilla_fi);

    // Superpose the per-basis-state oracle results with the same weights.
    std::vector<StateVector::Complex> expected(state.size(), {0.0, 0.0});
    for (std::size_t x = 0; x < 8; ++x) {
      auto column = basis_state(layout, x);
      apply_oracle(column, layout, inst, params, layout.ancilla_fi);
      for (std::size_t i = 0; i < column.size(); ++i) {
        expected[i] += coeffs[x] / std::sqrt(norm) * column.amp(i);
      }
    }
    CHECK(max_abs_diff(combined.amplitudes(), expected) < 1e-9);
  }
}

TEST_CASE("oracle rejects a dirty weight register") {
  const auto& inst = fixture("stocks2").instance;
  const auto params = derive_oracle_params(inst);
  const auto layout = standard_layout(inst, params);
  StateVector state(layout.total_qubits());
  state.apply_x(layout.weight[0]);
  CHECK_THROWS_AS(apply_oracle(state, layout, inst, params, layout.ancilla_fi), std::logic_error);
}
