#pragma once

#include "pdr/bigint.hpp"
#include "pdr/model.hpp"

namespace pdr {

// Pumping example: all states Player 0's, one stack symbol. q_I may pump or
// hand over to q_1, whose counter is drained one disturbance at a time
// towards the unsafe q_2.
PushdownGameSpec gen_fig1();

// Primorial family: one-counter game with modulo-p checker gadgets for the
// first k primes; resilience of the initial vertex is primorial(k).
PushdownGameSpec gen_primorial_ocs(int k);

// Binary-counter family: pushdown game over {0,1}; resilience of the initial
// vertex is 2^primorial(k) - 1.
PushdownGameSpec gen_binary_pds(int k);

// Value-zoo example: one-counter reachability game (target via unsafe_state)
// whose vertices exhibit every value in omega+2, including omega with and
// without a uniform witness. Fixture for the reach-optimal oracle tests.
PushdownGameSpec gen_fig3();

struct RandomSpecOptions {
  int states = 3;
  bool one_counter = true;
  int stack_symbols = 2;      // ignored when one_counter
  int extra_rules = 4;        // beyond the totality-covering ones
  int disturbance_rules = 2;
  double unsafe_probability = 0.3;
};

// Deterministic in seed; always validates (deadlock-free, bottom-preserving).
PushdownGameSpec gen_random(std::uint64_t seed,
                            const RandomSpecOptions& options = {});

BigInt primorial(int k);

}  // namespace pdr
