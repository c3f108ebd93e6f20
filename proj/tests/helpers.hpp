#pragma once

#include <functional>
#include <random>

#include "pdr/model.hpp"

namespace pdr::testing {

// Compact arena builder: owners[v], edges[v], optional dedges/unsafe.
struct ArenaBuilder {
  ExplicitArena arena;

  int vertex(int owner, bool unsafe = false) {
    int v = arena.add_vertex(VKind::kConfig, "v" + std::to_string(arena.size()),
                             0, owner, unsafe);
    if (arena.initial < 0) arena.initial = v;
    return v;
  }
  ArenaBuilder& edge(int a, int b) {
    arena.edges[a].push_back(b);
    return *this;
  }
  ArenaBuilder& dedge(int a, int b) {
    arena.dedges[a].push_back(b);
    return *this;
  }
};

inline ExplicitArena random_arena(std::uint64_t seed, int n, int max_degree = 3,
                                  double unsafe_p = 0.25,
                                  double dedge_p = 0.4) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  ArenaBuilder b;
  for (int v = 0; v < n; ++v)
    b.vertex(static_cast<int>(rng() % 2), coin(rng) < unsafe_p);
  for (int v = 0; v < n; ++v) {
    int deg = 1 + static_cast<int>(rng() % max_degree);
    for (int j = 0; j < deg; ++j) b.edge(v, static_cast<int>(rng() % n));
    if (b.arena.owner[v] == 0 && coin(rng) < dedge_p)
      b.dedge(v, static_cast<int>(rng() % n));
  }
  return b.arena;
}

// All positional strategies of one player, as choice vectors (-1 elsewhere).
inline void for_each_strategy(const ExplicitArena& arena, int player,
                              const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> owned;
  for (int v = 0; v < arena.size(); ++v)
    if (arena.owner[v] == player) owned.push_back(v);
  std::vector<int> pick(owned.size(), 0), choice(arena.size(), -1);
  while (true) {
    for (size_t i = 0; i < owned.size(); ++i)
      choice[owned[i]] = arena.edges[owned[i]][pick[i]];
    f(choice);
    size_t i = 0;
    for (; i < owned.size(); ++i) {
      if (++pick[i] < arena.edges[owned[i]].size()) break;
      pick[i] = 0;
    }
    if (i == owned.size()) return;
  }
}

struct Lasso {
  std::vector<int> prefix;  // up to and excluding the cycle start repeat
  int cycle_start = 0;      // index into prefix where the cycle begins
};

// The unique disturbance-free play under two positional strategies.
inline Lasso play_lasso(const ExplicitArena& arena, int start,
                        const std::vector<int>& choice0,
                        const std::vector<int>& choice1) {
  Lasso l;
  std::vector<int> seen(arena.size(), -1);
  int cur = start;
  while (seen[cur] < 0) {
    seen[cur] = static_cast<int>(l.prefix.size());
    l.prefix.push_back(cur);
    cur = arena.owner[cur] == 0 ? choice0[cur] : choice1[cur];
  }
  l.cycle_start = seen[cur];
  return l;
}

// Exhaustive-safety oracle: W1 = vertices from which some Player-1 positional
// strategy beats every Player-0 positional strategy.
inline std::vector<char> safety_w1_oracle(const ExplicitArena& arena) {
  int n = arena.size();
  std::vector<char> w1(n, 0);
  for_each_strategy(arena, 1, [&](const std::vector<int>& c1) {
    std::vector<char> wins(n, 1);
    for_each_strategy(arena, 0, [&](const std::vector<int>& c0) {
      for (int v = 0; v < n; ++v) {
        if (!wins[v]) continue;
        auto l = play_lasso(arena, v, c0, c1);
        bool hit = false;
        for (int u : l.prefix) hit = hit || arena.unsafe[u];
        if (!hit) wins[v] = 0;
      }
    });
    for (int v = 0; v < n; ++v) w1[v] = w1[v] || wins[v];
  });
  return w1;
}

// Exhaustive Büchi oracle for Player 0 (visit accepting infinitely often).
inline std::vector<char> buchi_w0_oracle(const ExplicitArena& arena,
                                         const std::vector<char>& accepting) {
  int n = arena.size();
  std::vector<char> w0(n, 0);
  for_each_strategy(arena, 0, [&](const std::vector<int>& c0) {
    std::vector<char> wins(n, 1);
    for_each_strategy(arena, 1, [&](const std::vector<int>& c1) {
      for (int v = 0; v < n; ++v) {
        if (!wins[v]) continue;
        auto l = play_lasso(arena, v, c0, c1);
        bool acc = false;
        for (size_t j = l.cycle_start; j < l.prefix.size(); ++j)
          acc = acc || accepting[l.prefix[j]];
        if (!acc) wins[v] = 0;
      }
    });
    for (int v = 0; v < n; ++v) w0[v] = w0[v] || wins[v];
  });
  return w0;
}

// With Player 0 fixed to `choice0`, can the adversary (arbitrary owner-1
// moves plus up to `budget` disturbance overrides) reach an unsafe vertex?
inline bool defeated_within(const ExplicitArena& arena, int start,
                            const std::unordered_map<int, int>& choice0,
                            int budget) {
  int n = arena.size();
  std::vector<std::vector<char>> seen(budget + 1, std::vector<char>(n, 0));
  std::vector<std::pair<int, int>> work{{start, 0}};
  seen[0][start] = 1;
  while (!work.empty()) {
    auto [v, d] = work.back();
    work.pop_back();
    if (arena.unsafe[v]) return true;
    auto push = [&](int w, int d2) {
      if (!seen[d2][w]) {
        seen[d2][w] = 1;
        work.emplace_back(w, d2);
      }
    };
    if (arena.owner[v] == 1) {
      for (int w : arena.edges[v]) push(w, d);
    } else {
      auto it = choice0.find(v);
      push(it != choice0.end() ? it->second : arena.edges[v].front(), d);
      if (d < budget)
        for (int w : arena.dedges[v]) push(w, d + 1);
    }
  }
  return false;
}

}  // namespace pdr::testing
