#include "pdr/rigging.hpp"

#include <map>
#include <stdexcept>

namespace pdr {

namespace {

std::string copy_label(const std::string& l) { return l + "~copy"; }
std::string edge_label(const std::string& a, const std::string& b, bool dist) {
  return a + "→" + b + (dist ? "~d" : "~e");
}

}  // namespace

ExplicitArena rig_arena(const ExplicitArena& arena) {
  ExplicitArena out;
  int n = arena.size();
  // originals keep their indices; all become Player 1's
  for (int v = 0; v < n; ++v)
    out.add_vertex(arena.info[v].kind, arena.info[v].label,
                   arena.info[v].height, 1, arena.unsafe[v]);
  out.initial = arena.initial;
  out.frontier_reached = arena.frontier_reached;

  auto aux = [&](VKind kind, const std::string& label, int height) {
    return out.add_vertex(kind, label, height, kind == VKind::kCopy ? 0 : 1,
                          false);
  };
  for (int v = 0; v < n; ++v) {
    const std::string& lv = arena.info[v].label;
    if (arena.owner[v] == 0) {
      int c = aux(VKind::kCopy, copy_label(lv), arena.info[v].height);
      out.edges[v].push_back(c);
      out.edges[c] = arena.edges[v];  // Player 0's real choices
      for (int w : arena.dedges[v]) {
        int d = aux(VKind::kEdgeDist, edge_label(lv, arena.info[w].label, true),
                    arena.info[v].height);
        out.edges[v].push_back(d);
        out.edges[d].push_back(w);
      }
    } else {
      for (int w : arena.edges[v]) {
        int e = aux(VKind::kEdgeMove,
                    edge_label(lv, arena.info[w].label, false),
                    arena.info[v].height);
        out.edges[v].push_back(e);
        out.edges[e].push_back(w);
      }
    }
  }
  return out;
}

PushdownGameSpec rig_pds(const PushdownGameSpec& spec) {
  if (auto err = spec.validate())
    throw std::invalid_argument("invalid spec: " + *err);
  PushdownGameSpec out;
  out.stack_symbols = spec.stack_symbols;
  int nsym = static_cast<int>(spec.stack_symbols.size());
  // originals first (owner 1), then copies, then one state per rule of an
  // owner-1 source / per disturbance rule
  for (int q = 0; q < spec.num_states(); ++q)
    out.add_state(spec.state_names[q], 1, spec.unsafe_state[q]);
  out.initial_state = spec.initial_state;

  auto keep_rule = [&](int from, int to) {
    // a rule that preserves the configuration while changing state
    for (int s = 0; s < nsym; ++s)
      out.transitions.push_back({from, s, to, std::string(1, (char)s)});
    out.transitions.push_back({from, kBottom, to, ""});
  };
  auto filler_loops = [&](int q, int used_top) {
    // unreachable (state, top) pairs get self-loops to keep the spec total
    for (int s = kBottom; s < nsym; ++s) {
      if (s == used_top) continue;
      out.transitions.push_back(
          {q, s, q, s == kBottom ? std::string() : std::string(1, (char)s)});
    }
  };
  auto aux_name = [&](const Rule& r, bool dist) {
    std::string base =
        edge_label(spec.state_names[r.from], spec.state_names[r.to], dist);
    std::string name = base;
    int n = 1;
    while (true) {
      bool taken = false;
      for (const auto& s : out.state_names)
        if (s == name) {
          taken = true;
          break;
        }
      if (!taken) return name;
      name = base + std::to_string(++n);
    }
  };

  std::vector<int> copy_of(spec.num_states(), -1);
  for (int q = 0; q < spec.num_states(); ++q) {
    if (spec.owner[q] != 0) continue;
    copy_of[q] = out.add_state(copy_label(spec.state_names[q]), 0);
    keep_rule(q, copy_of[q]);
  }
  for (const auto& r : spec.transitions) {
    if (spec.owner[r.from] == 0) {
      // Player 0 moves from the copy
      out.transitions.push_back({copy_of[r.from], r.top, r.to, r.write});
    } else {
      int s = out.add_state(aux_name(r, false), 1);
      out.transitions.push_back(
          {r.from, r.top, s,
           r.top == kBottom ? std::string() : std::string(1, (char)r.top)});
      out.transitions.push_back({s, r.top, r.to, r.write});
      filler_loops(s, r.top);
    }
  }
  for (const auto& r : spec.disturbance_transitions) {
    int s = out.add_state(aux_name(r, true), 1, false, /*dist=*/true);
    out.transitions.push_back(
        {r.from, r.top, s,
         r.top == kBottom ? std::string() : std::string(1, (char)r.top)});
    out.transitions.push_back({s, r.top, r.to, r.write});
    filler_loops(s, r.top);
  }
  return out;
}

PushdownGameSpec counter_product(const PushdownGameSpec& rigged, int k) {
  if (k < 1)
    throw std::invalid_argument(
        "counter_product needs k >= 1 (every strategy is 0-resilient)");
  if (auto err = rigged.validate())
    throw std::invalid_argument("invalid spec: " + *err);
  PushdownGameSpec out;
  out.stack_symbols = rigged.stack_symbols;
  int nq = rigged.num_states();
  int nsym = static_cast<int>(rigged.stack_symbols.size());
  auto id = [&](int q, int c) { return q * (k + 1) + c; };
  for (int q = 0; q < nq; ++q) {
    for (int c = 0; c <= k; ++c) {
      out.add_state(rigged.state_names[q] + "@c" + std::to_string(c),
                    c == k ? 1 : rigged.owner[q],
                    c < k && rigged.unsafe_state[q],
                    c < k && rigged.is_dstate(q));
    }
  }
  out.initial_state = id(rigged.initial_state, 0);
  for (const auto& r : rigged.transitions) {
    bool inc = rigged.is_dstate(r.from);
    for (int c = 0; c < k; ++c) {
      int c2 = inc ? std::min(c + 1, k) : c;
      out.transitions.push_back({id(r.from, c), r.top, id(r.to, c2), r.write});
    }
  }
  // counter-k states are absorbing and safe for Player 0
  for (int q = 0; q < nq; ++q) {
    int v = id(q, k);
    for (int s = 0; s < nsym; ++s)
      out.transitions.push_back({v, s, v, std::string(1, (char)s)});
    out.transitions.push_back({v, kBottom, v, ""});
  }
  return out;
}

Play translate_play_up(const ExplicitArena& arena, const ExplicitArena& rigged,
                       const Play& play) {
  std::unordered_map<std::string, int> by_label;
  for (int v = 0; v < rigged.size(); ++v)
    by_label.emplace(rigged.info[v].label, v);
  auto find = [&](const std::string& l) {
    auto it = by_label.find(l);
    if (it == by_label.end())
      throw std::runtime_error("rigged arena lacks label " + l);
    return it->second;
  };

  Play out;
  if (play.steps.empty()) return out;
  int prev = play.steps[0].vertex;
  out.steps.push_back({find(arena.info[prev].label), false});
  for (size_t j = 1; j < play.steps.size(); ++j) {
    int cur = play.steps[j].vertex;
    const std::string& lp = arena.info[prev].label;
    const std::string& lc = arena.info[cur].label;
    std::string mid;
    if (play.steps[j].disturbance) {
      mid = edge_label(lp, lc, true);
    } else if (arena.owner[prev] == 0) {
      mid = copy_label(lp);
    } else {
      mid = edge_label(lp, lc, false);
    }
    out.steps.push_back({find(mid), false});
    out.steps.push_back({find(lc), false});
    prev = cur;
  }
  return out;
}

Play translate_play_down(const ExplicitArena& arena,
                         const ExplicitArena& rigged, const Play& rigged_play) {
  std::unordered_map<std::string, int> by_label;
  for (int v = 0; v < arena.size(); ++v)
    by_label.emplace(arena.info[v].label, v);
  Play out;
  for (size_t j = 0; j < rigged_play.steps.size(); ++j) {
    int v = rigged_play.steps[j].vertex;
    if (rigged.info[v].kind == VKind::kCopy ||
        rigged.info[v].kind == VKind::kEdgeMove)
      continue;
    if (rigged.info[v].kind == VKind::kEdgeDist) {
      // next original vertex was reached by a disturbance
      continue;
    }
    bool dist = j > 0 && rigged.is_dvertex(rigged_play.steps[j - 1].vertex);
    auto it = by_label.find(rigged.info[v].label);
    if (it == by_label.end())
      throw std::runtime_error("original arena lacks label " +
                               rigged.info[v].label);
    out.steps.push_back({it->second, out.steps.empty() ? false : dist});
  }
  return out;
}

PositionalStrategy lift_strategy_down(const ExplicitArena& arena,
                                      const ExplicitArena& rigged,
                                      const PositionalStrategy& rigged_strategy) {
  std::unordered_map<std::string, int> by_label;
  for (int v = 0; v < arena.size(); ++v)
    by_label.emplace(arena.info[v].label, v);
  PositionalStrategy out;
  out.player = 0;
  for (int c = 0; c < rigged.size(); ++c) {
    if (rigged.info[c].kind != VKind::kCopy || !rigged_strategy.defined_at(c))
      continue;
    const std::string& lc = rigged.info[c].label;
    std::string orig = lc.substr(0, lc.size() - 5);  // strip "~copy"
    int target = rigged_strategy.choice.at(c);
    auto vi = by_label.find(orig);
    auto wi = by_label.find(rigged.info[target].label);
    if (vi == by_label.end() || wi == by_label.end()) continue;
    out.choice.emplace(vi->second, wi->second);
  }
  return out;
}

}  // namespace pdr
