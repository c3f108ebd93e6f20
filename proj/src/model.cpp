#include "pdr/model.hpp"

#include <deque>
#include <random>
#include <set>
#include <stdexcept>

namespace pdr {

namespace {

std::string rule_text(const PushdownGameSpec& spec, const Rule& r) {
  auto sym = [&](int s) {
    return s == kBottom ? std::string("_") : spec.stack_symbols[s];
  };
  std::string w;
  for (char c : r.write) w += spec.stack_symbols[static_cast<int>(c)];
  if (w.empty()) w = "eps";
  return spec.state_names[r.from] + " " + sym(r.top) + " -> " +
         spec.state_names[r.to] + " " + w;
}

}  // namespace

std::optional<std::string> PushdownGameSpec::validate() const {
  if (stack_symbols.empty()) return "stack alphabet is empty";
  if (state_names.empty()) return "no states";
  if (initial_state < 0 || initial_state >= num_states())
    return "initial state out of range";
  int nsym = static_cast<int>(stack_symbols.size());
  auto check_rule = [&](const Rule& r, bool dist) -> std::optional<std::string> {
    if (r.from < 0 || r.from >= num_states() || r.to < 0 ||
        r.to >= num_states())
      return "rule references unknown state: " + rule_text(*this, r);
    if (r.top != kBottom && (r.top < 0 || r.top >= nsym))
      return "rule reads unknown symbol: " + rule_text(*this, r);
    size_t max_len = r.top == kBottom ? 1 : 2;
    if (r.write.size() > max_len)
      return "replacement word too long (would write/delete bottom): " +
             rule_text(*this, r);
    for (char c : r.write)
      if (c < 0 || c >= nsym)
        return "rule writes unknown symbol: " + rule_text(*this, r);
    if (dist && owner[r.from] != 0)
      return "disturbance rule from owner-1 state: " + rule_text(*this, r);
    return std::nullopt;
  };
  for (const auto& r : transitions)
    if (auto e = check_rule(r, false)) return e;
  for (const auto& r : disturbance_transitions)
    if (auto e = check_rule(r, true)) return e;
  // Deadlock freedom: every (state, top) pair has a standard rule.
  std::vector<char> covered(num_states() * (nsym + 1), 0);
  for (const auto& r : transitions)
    covered[r.from * (nsym + 1) + r.top + 1] = 1;
  for (int q = 0; q < num_states(); ++q)
    for (int t = kBottom; t < nsym; ++t)
      if (!covered[q * (nsym + 1) + t + 1])
        return "deadlocked pair: state " + state_names[q] + ", top " +
               (t == kBottom ? std::string("_") : stack_symbols[t]);
  return std::nullopt;
}

std::string config_label(const PushdownGameSpec& spec, const Configuration& c) {
  std::string out = spec.state_names[c.state] + ":";
  if (c.stack.empty()) {
    out += "_";
  } else {
    for (char s : c.stack) out += spec.stack_symbols[static_cast<int>(s)];
  }
  return out;
}

std::optional<std::string> ExplicitArena::validate() const {
  for (int v = 0; v < size(); ++v) {
    if (edges[v].empty())
      return "dead end at vertex " + info[v].label;
    if (!dedges[v].empty() && owner[v] != 0)
      return "disturbance edge from owner-1 vertex " + info[v].label;
  }
  return std::nullopt;
}

std::optional<int> ExplicitArena::find_label(const std::string& label) const {
  for (int v = 0; v < size(); ++v)
    if (info[v].label == label) return v;
  return std::nullopt;
}

ExplicitArena expand_truncated(const PushdownGameSpec& spec, int max_height,
                               FrontierMode mode, std::size_t max_vertices) {
  if (max_height < 0) throw std::invalid_argument("max_height must be >= 0");
  if (auto err = spec.validate())
    throw std::invalid_argument("invalid spec: " + *err);

  ExplicitArena arena;
  std::unordered_map<std::string, int> index;  // "state#stack" -> vertex
  auto key = [](int state, const std::string& stack) {
    return std::to_string(state) + "#" + stack;
  };
  int frontier = -1;
  auto get_frontier = [&]() {
    if (frontier < 0) {
      frontier = arena.add_vertex(
          VKind::kFrontier, "frontier", max_height + 1, 1,
          mode == FrontierMode::kPessimisticFor0);
      arena.edges[frontier].push_back(frontier);
      arena.frontier_reached = true;
    }
    return frontier;
  };

  std::deque<Configuration> work;
  auto intern = [&](const Configuration& c) {
    auto [it, fresh] = index.try_emplace(key(c.state, c.stack), arena.size());
    if (fresh) {
      int v = arena.add_vertex(VKind::kConfig, config_label(spec, c),
                               c.height(), spec.owner[c.state],
                               spec.unsafe_state[c.state]);
      arena.info[v].dstate = spec.is_dstate(c.state);
      work.push_back(c);
    }
    return it->second;
  };

  Configuration init{spec.initial_state, ""};
  arena.initial = intern(init);

  // index rules by (state, top) so expansion doesn't rescan the rule list
  int nsym = static_cast<int>(spec.stack_symbols.size());
  auto slot = [&](int state, int top) { return state * (nsym + 1) + top + 1; };
  std::vector<std::vector<const Rule*>> at(spec.num_states() * (nsym + 1));
  std::vector<std::vector<const Rule*>> dat(spec.num_states() * (nsym + 1));
  for (const auto& r : spec.transitions) at[slot(r.from, r.top)].push_back(&r);
  for (const auto& r : spec.disturbance_transitions)
    dat[slot(r.from, r.top)].push_back(&r);

  auto apply = [&](const Configuration& c, const Rule& r,
                   Configuration* out) -> bool {
    // caller guarantees the rule matches (state, top)
    out->state = r.to;
    out->stack = r.write + (c.stack.empty() ? "" : c.stack.substr(1));
    return out->height() <= max_height;
  };

  while (!work.empty()) {
    if (static_cast<std::size_t>(arena.size()) > max_vertices) {
      arena.budget_exceeded = true;
      return arena;
    }
    Configuration c = work.front();
    work.pop_front();
    int v = index.at(key(c.state, c.stack));
    int top = c.stack.empty() ? kBottom : c.stack[0];
    std::set<int> succ, dsucc;
    for (const Rule* r : at[slot(c.state, top)]) {
      Configuration next;
      succ.insert(apply(c, *r, &next) ? intern(next) : get_frontier());
    }
    for (const Rule* r : dat[slot(c.state, top)]) {
      Configuration next;
      dsucc.insert(apply(c, *r, &next) ? intern(next) : get_frontier());
    }
    arena.edges[v].assign(succ.begin(), succ.end());
    arena.dedges[v].assign(dsucc.begin(), dsucc.end());
  }
  return arena;
}

PushdownGameSpec f_sink_normalize(const PushdownGameSpec& spec) {
  if (auto err = spec.validate())
    throw std::invalid_argument("invalid spec: " + *err);
  PushdownGameSpec out = spec;
  // Unsafe states lose all their rules and deterministically pop.
  std::erase_if(out.transitions,
                [&](const Rule& r) { return spec.unsafe_state[r.from]; });
  std::erase_if(out.disturbance_transitions,
                [&](const Rule& r) { return spec.unsafe_state[r.from]; });
  int qf = out.add_state("q_f", 1, /*unsafe=*/true);
  int nsym = static_cast<int>(spec.stack_symbols.size());
  for (int q = 0; q < spec.num_states(); ++q) {
    if (!spec.unsafe_state[q]) continue;
    for (int s = 0; s < nsym; ++s)
      out.transitions.push_back({q, s, q, ""});  // pop
    out.transitions.push_back({q, kBottom, qf, ""});
  }
  for (int s = 0; s < nsym; ++s) out.transitions.push_back({qf, s, qf, ""});
  out.transitions.push_back({qf, kBottom, qf, ""});
  return out;
}

Play simulate(const ExplicitArena& arena, int start,
              const PositionalStrategy& strategy0,
              const PositionalStrategy* adversary,
              const std::vector<int>& disturbance_schedule, int max_steps,
              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<int> schedule(disturbance_schedule.begin(),
                         disturbance_schedule.end());
  Play play;
  play.steps.push_back({start, false});
  int cur = start;
  for (int pos = 1; pos <= max_steps; ++pos) {
    bool fire = schedule.count(pos) != 0;
    if (fire && !arena.dedges[cur].empty()) {
      const auto& d = arena.dedges[cur];
      int next = d[d.size() == 1 ? 0 : rng() % d.size()];
      play.steps.push_back({next, true});
      cur = next;
      continue;
    }
    if (fire) play.skipped_schedule_entries.push_back(pos);
    int next;
    if (arena.owner[cur] == 0 && strategy0.defined_at(cur)) {
      next = strategy0.choice.at(cur);
    } else if (arena.owner[cur] == 1 && adversary &&
               adversary->defined_at(cur)) {
      next = adversary->choice.at(cur);
    } else {
      const auto& e = arena.edges[cur];
      next = e[e.size() == 1 ? 0 : rng() % e.size()];
    }
    play.steps.push_back({next, false});
    cur = next;
  }
  return play;
}

std::vector<int> consequential_disturbances(const ExplicitArena& arena,
                                            const Play& play,
                                            const PositionalStrategy& s0) {
  std::vector<int> out;
  for (size_t j = 1; j < play.steps.size(); ++j) {
    if (!play.steps[j].disturbance) continue;
    int prev = play.steps[j - 1].vertex;
    if (arena.owner[prev] == 0 && s0.defined_at(prev) &&
        s0.choice.at(prev) != play.steps[j].vertex)
      out.push_back(static_cast<int>(j));
  }
  return out;
}

}  // namespace pdr
