#include "pdr/solver.hpp"

#include <deque>

namespace pdr {

AttractorResult attractor(const ExplicitArena& arena,
                          const std::vector<char>& target, int player,
                          const std::vector<char>* allowed,
                          MaskSemantics sem) {
  int n = arena.size();
  AttractorResult res;
  res.in.assign(n, 0);
  res.attacker.player = player;
  res.defender.player = 1 - player;
  auto ok = [&](int v) { return !allowed || (*allowed)[v]; };

  // reverse adjacency
  std::vector<std::vector<int>> rev(n);
  for (int v = 0; v < n; ++v)
    for (int w : arena.edges[v]) rev[w].push_back(v);

  std::vector<int> remaining(n, 0);
  for (int v = 0; v < n; ++v) {
    if (!allowed || sem == MaskSemantics::kEscape) {
      remaining[v] = static_cast<int>(arena.edges[v].size());
    } else {
      for (int w : arena.edges[v]) remaining[v] += ok(w);
    }
  }

  std::deque<int> queue;
  for (int v = 0; v < n; ++v) {
    if (!ok(v)) continue;
    bool vacuous = arena.owner[v] != player && remaining[v] == 0;
    if (target[v] || vacuous) {
      res.in[v] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    int w = queue.front();
    queue.pop_front();
    for (int v : rev[w]) {
      if (res.in[v] || !ok(v)) continue;
      if (arena.owner[v] == player) {
        res.in[v] = 1;
        res.attacker.choice.emplace(v, w);
        queue.push_back(v);
      } else if (--remaining[v] == 0) {
        res.in[v] = 1;
        queue.push_back(v);
      }
    }
  }
  // Trap strategy: opponent vertices outside keep a successor outside.
  for (int v = 0; v < n; ++v) {
    if (res.in[v] || !ok(v) || arena.owner[v] == player) continue;
    for (int w : arena.edges[v])
      if (!res.in[w]) {
        res.defender.choice.emplace(v, w);
        break;
      }
  }
  // Attacker picks deterministically on target vertices too (lowest index).
  for (int v = 0; v < n; ++v)
    if (res.in[v] && arena.owner[v] == player && !res.attacker.defined_at(v))
      res.attacker.choice.emplace(v, arena.edges[v].front());
  return res;
}

Regions solve_safety(const ExplicitArena& arena) {
  auto att = attractor(arena, arena.unsafe, 1);
  Regions r;
  r.w1 = att.in;
  r.w0.assign(arena.size(), 0);
  for (int v = 0; v < arena.size(); ++v) r.w0[v] = !r.w1[v];
  r.strategy1 = att.attacker;
  r.strategy0 = att.defender;
  return r;
}

Regions solve_buchi(const ExplicitArena& arena,
                    const std::vector<char>& accepting) {
  int n = arena.size();
  Regions r;
  r.w1.assign(n, 0);
  r.strategy0.player = 0;
  r.strategy1.player = 1;
  std::vector<char> mask(n, 1);
  while (true) {
    std::vector<char> acc(n, 0);
    for (int v = 0; v < n; ++v) acc[v] = accepting[v] && mask[v];
    auto reach = attractor(arena, acc, 0, &mask, MaskSemantics::kSubgame);
    std::vector<char> trap(n, 0);
    bool empty = true;
    for (int v = 0; v < n; ++v)
      if (mask[v] && !reach.in[v]) {
        trap[v] = 1;
        empty = false;
      }
    if (empty) {
      r.w0 = mask;
      // strategy: walk the final 0-attractor toward accepting; on accepting
      // vertices pick any successor that stays inside.
      for (int v = 0; v < n; ++v) {
        if (!mask[v] || arena.owner[v] != 0) continue;
        if (!accepting[v] && reach.attacker.defined_at(v)) {
          r.strategy0.choice.emplace(v, reach.attacker.choice.at(v));
        } else {
          for (int w : arena.edges[v])
            if (mask[w]) {
              r.strategy0.choice.emplace(v, w);
              break;
            }
        }
      }
      break;
    }
    auto grab = attractor(arena, trap, 1, &mask, MaskSemantics::kSubgame);
    for (int v = 0; v < n; ++v)
      if (grab.in[v]) {
        r.w1[v] = 1;
        mask[v] = 0;
        if (arena.owner[v] == 1) {
          if (grab.attacker.defined_at(v))
            r.strategy1.choice.emplace(v, grab.attacker.choice.at(v));
          else
            r.strategy1.choice.emplace(v, arena.edges[v].front());
        }
      }
  }
  return r;
}

Regions solve_union_safety_or_buchi(const ExplicitArena& arena,
                                    const std::vector<char>& unsafe,
                                    const std::vector<char>& accepting) {
  int n = arena.size();
  // Once the Büchi disjunct is winnable it stays winnable (prefix
  // independence), so vertices in the Büchi region are outright wins for
  // Player 0 and act as safe havens; elsewhere Player 0 must avoid the unsafe
  // vertices that are not havens.
  Regions buchi = solve_buchi(arena, accepting);
  std::vector<char> havens = buchi.w0;
  std::vector<char> bad(n, 0), allowed(n, 0);
  for (int v = 0; v < n; ++v) {
    bad[v] = unsafe[v] && !havens[v];
    allowed[v] = !havens[v];
  }
  auto att = attractor(arena, bad, 1, &allowed);
  Regions r;
  r.w1 = att.in;
  r.w0.assign(n, 0);
  for (int v = 0; v < n; ++v) r.w0[v] = !r.w1[v];
  r.strategy1 = att.attacker;
  // Player 0: trap strategy outside the attractor until a haven is reached,
  // then the Büchi strategy.
  r.strategy0.player = 0;
  for (int v = 0; v < n; ++v) {
    if (arena.owner[v] != 0 || r.w1[v]) continue;
    if (havens[v] && buchi.strategy0.defined_at(v))
      r.strategy0.choice.emplace(v, buchi.strategy0.choice.at(v));
    else if (att.defender.defined_at(v))
      r.strategy0.choice.emplace(v, att.defender.choice.at(v));
    else
      for (int w : arena.edges[v])
        if (!r.w1[w]) {
          r.strategy0.choice.emplace(v, w);
          break;
        }
  }
  return r;
}

}  // namespace pdr
