#include "pdr/generators.hpp"

#include <random>
#include <stdexcept>

namespace pdr {

namespace {

std::vector<int> first_primes(int k) {
  std::vector<int> out;
  for (int n = 2; static_cast<int>(out.size()) < k; ++n) {
    bool prime = true;
    for (int p : out) {
      if (p * p > n) break;
      if (n % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(n);
  }
  return out;
}

}  // namespace

PushdownGameSpec gen_fig1() {
  PushdownGameSpec g;
  g.stack_symbols = {"A"};
  int qi = g.add_state("q_I", 0);
  int q1 = g.add_state("q_1", 0);
  int q2 = g.add_state("q_2", 0, /*unsafe=*/true);
  g.initial_state = qi;
  const char A = 0;
  g.transitions = {
      {qi, A, qi, {A, A}}, {qi, kBottom, qi, {A}},
      {qi, A, q1, {A}},    {qi, kBottom, q1, ""},
      {q1, A, q1, {A}},    {q1, kBottom, q2, ""},
      {q2, A, q2, {A}},    {q2, kBottom, q2, ""},
  };
  g.disturbance_transitions = {{q1, A, q1, ""}};
  return g;
}

PushdownGameSpec gen_primorial_ocs(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  PushdownGameSpec g;
  g.stack_symbols = {"A"};
  const char A = 0;
  int i = g.add_state("i", 1);
  int c = g.add_state("c", 0);
  int d = g.add_state("d", 0);
  int s = g.add_state("s", 1, /*unsafe=*/true);
  g.initial_state = i;

  // Player 1 pumps the counter, then hands over.
  g.transitions.push_back({i, kBottom, i, {A}});
  g.transitions.push_back({i, A, i, {A, A}});
  g.transitions.push_back({i, A, c, {A}});
  // Player 0 picks a divisibility check or the drain; an empty counter at the
  // hand-over is already lost.
  g.transitions.push_back({c, A, d, {A}});
  g.transitions.push_back({c, kBottom, d, ""});
  // The drain holds the counter; only disturbances decrement it.
  g.transitions.push_back({d, A, d, {A}});
  g.transitions.push_back({d, kBottom, s, ""});
  g.disturbance_transitions.push_back({d, A, d, ""});
  g.transitions.push_back({s, A, s, {A}});
  g.transitions.push_back({s, kBottom, s, ""});

  // Modulo-p checkers: decrement through p states; remainder 0 at the bottom
  // is losing for Player 0, any other remainder is a safe harbor.
  for (int p : first_primes(k)) {
    std::vector<int> mod(p);
    for (int m = 0; m < p; ++m)
      mod[m] = g.add_state("p" + std::to_string(p) + "m" + std::to_string(m),
                           1);
    for (int m = 0; m < p; ++m) {
      g.transitions.push_back({mod[m], A, mod[(m + 1) % p], ""});
      g.transitions.push_back(
          {mod[m], kBottom, m == 0 ? s : mod[m], ""});
    }
    g.transitions.push_back({c, A, mod[0], {A}});
  }
  return g;
}

PushdownGameSpec gen_binary_pds(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  PushdownGameSpec g;
  g.stack_symbols = {"0", "1"};
  const char Z = 0, O = 1;
  int i = g.add_state("i", 1);
  int c = g.add_state("c", 0);
  int d = g.add_state("d", 0);
  int s = g.add_state("s", 1, /*unsafe=*/true);
  g.initial_state = i;

  // Player 1 refills low bits with 1s (top of stack = least significant).
  g.transitions.push_back({i, kBottom, i, {O}});
  g.transitions.push_back({i, O, i, {O, O}});
  g.transitions.push_back({i, Z, i, {O, Z}});
  g.transitions.push_back({i, O, c, {O}});
  g.transitions.push_back({i, Z, c, {Z}});
  // Height check against the modulo gadgets, or on to the decrementer.
  g.transitions.push_back({c, O, d, {O}});
  g.transitions.push_back({c, Z, d, {Z}});
  g.transitions.push_back({c, kBottom, s, ""});
  // Player 0 pops trailing 0s and waits at a 1; the disturbance flips it and
  // returns control to the refiller: a binary decrement per disturbance.
  g.transitions.push_back({d, Z, d, ""});
  g.transitions.push_back({d, O, d, {O}});
  g.transitions.push_back({d, kBottom, s, ""});
  g.disturbance_transitions.push_back({d, O, i, {Z}});
  for (char sym : {Z, O}) g.transitions.push_back({s, sym, s, {sym}});
  g.transitions.push_back({s, kBottom, s, ""});

  for (int p : first_primes(k)) {
    std::vector<int> mod(p);
    for (int m = 0; m < p; ++m)
      mod[m] = g.add_state("p" + std::to_string(p) + "m" + std::to_string(m),
                           1);
    for (int m = 0; m < p; ++m) {
      g.transitions.push_back({mod[m], Z, mod[(m + 1) % p], ""});
      g.transitions.push_back({mod[m], O, mod[(m + 1) % p], ""});
      g.transitions.push_back({mod[m], kBottom, m == 0 ? s : mod[m], ""});
    }
    g.transitions.push_back({c, O, mod[0], {O}});
    g.transitions.push_back({c, Z, mod[0], {Z}});
  }
  return g;
}

PushdownGameSpec gen_fig3() {
  PushdownGameSpec g;
  g.stack_symbols = {"A"};
  const char A = 0;
  int o = g.add_state("o", 0);
  int l = g.add_state("l", 0);
  int a = g.add_state("a", 0, /*unsafe=*/true);  // the reachability target
  int b = g.add_state("b", 0);
  g.initial_state = o;
  g.transitions = {
      {o, A, o, {A, A}}, {o, kBottom, o, {A}},
      {o, A, l, {A}},    {o, kBottom, l, ""},
      {l, A, a, {A}},    {l, kBottom, l, ""},
      {a, A, a, ""},     {a, kBottom, a, ""},
      {b, A, a, {A}},    {b, kBottom, a, ""},
  };
  g.disturbance_transitions = {{l, A, l, ""}, {b, kBottom, b, ""}};
  return g;
}

PushdownGameSpec gen_random(std::uint64_t seed,
                            const RandomSpecOptions& options) {
  std::mt19937_64 rng(seed);
  PushdownGameSpec g;
  int nsym = options.one_counter ? 1 : std::max(1, options.stack_symbols);
  for (int s = 0; s < nsym; ++s)
    g.stack_symbols.push_back(std::string(1, static_cast<char>('A' + s)));
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int q = 0; q < options.states; ++q)
    g.add_state("q" + std::to_string(q), static_cast<int>(rng() % 2),
                coin(rng) < options.unsafe_probability);
  g.initial_state = 0;

  auto rand_state = [&] { return static_cast<int>(rng() % options.states); };
  auto rand_write = [&](int top) {
    int max_len = top == kBottom ? 1 : 2;
    int len = static_cast<int>(rng() % (max_len + 1));
    std::string w;
    for (int j = 0; j < len; ++j)
      w.push_back(static_cast<char>(rng() % nsym));
    return w;
  };
  // totality first, then extra nondeterminism
  for (int q = 0; q < options.states; ++q)
    for (int t = kBottom; t < nsym; ++t)
      g.transitions.push_back({q, t, rand_state(), rand_write(t)});
  for (int j = 0; j < options.extra_rules; ++j) {
    int t = static_cast<int>(rng() % (nsym + 1)) - 1;
    g.transitions.push_back({rand_state(), t, rand_state(), rand_write(t)});
  }
  std::vector<int> owner0;
  for (int q = 0; q < options.states; ++q)
    if (g.owner[q] == 0) owner0.push_back(q);
  for (int j = 0; j < options.disturbance_rules && !owner0.empty(); ++j) {
    int from = owner0[rng() % owner0.size()];
    int t = static_cast<int>(rng() % (nsym + 1)) - 1;
    g.disturbance_transitions.push_back(
        {from, t, rand_state(), rand_write(t)});
  }
  if (auto err = g.validate())
    throw std::logic_error("gen_random produced an invalid spec: " + *err);
  return g;
}

BigInt primorial(int k) {
  BigInt out(1);
  for (int p : first_primes(k)) out = out * BigInt(p);
  return out;
}

}  // namespace pdr
