#include "pdr/reach.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdr {

PushdownGameSpec split_edges_transform(const PushdownGameSpec& spec) {
  if (!spec.disturbance_transitions.empty())
    throw std::invalid_argument(
        "split_edges_transform expects a disturbance-free reachability game");
  if (auto err = spec.validate())
    throw std::invalid_argument("invalid spec: " + *err);

  PushdownGameSpec out;
  out.stack_symbols = spec.stack_symbols;
  out.initial_state = spec.initial_state;
  for (int q = 0; q < spec.num_states(); ++q)
    out.add_state(spec.state_names[q], 1 - spec.owner[q],
                  spec.unsafe_state[q]);

  int nsym = static_cast<int>(spec.stack_symbols.size());
  auto unique_name = [&](std::string base) {
    std::string name = base;
    int n = 1;
    while (std::find(out.state_names.begin(), out.state_names.end(), name) !=
           out.state_names.end())
      name = base + std::to_string(++n);
    return name;
  };
  for (const auto& r : spec.transitions) {
    int e = out.add_state(
        unique_name(spec.state_names[r.from] + "→" + spec.state_names[r.to] +
                    "~e"),
        0);
    std::string keep =
        r.top == kBottom ? std::string() : std::string(1, (char)r.top);
    out.transitions.push_back({r.from, r.top, e, keep});
    // waiting self-loops; the move itself costs a disturbance
    for (int s = kBottom; s < nsym; ++s)
      out.transitions.push_back(
          {e, s, e, s == kBottom ? std::string() : std::string(1, (char)s)});
    out.disturbance_transitions.push_back({e, r.top, r.to, r.write});
  }
  return out;
}

ResilienceValue optimal_reach_value(const PushdownGameSpec& spec,
                                    const EngineOptions& opts) {
  return resilience_initial(split_edges_transform(spec), opts);
}

std::vector<std::uint64_t> backward_induction_oracle(
    const ExplicitArena& arena, const std::vector<char>& target) {
  int n = arena.size();
  std::vector<std::uint64_t> value(n, kOmegaPlusOneSentinel);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      std::uint64_t cand;
      if (target[v]) {
        cand = 0;
      } else if (arena.owner[v] == 0) {
        cand = kOmegaPlusOneSentinel;
        for (int w : arena.edges[v])
          if (value[w] != kOmegaPlusOneSentinel)
            cand = std::min(cand, value[w] + 1);
      } else {
        cand = 0;
        for (int w : arena.edges[v]) {
          if (value[w] == kOmegaPlusOneSentinel) {
            cand = kOmegaPlusOneSentinel;
            break;
          }
          cand = std::max(cand, value[w] + 1);
        }
      }
      if (cand < value[v]) {
        value[v] = cand;
        changed = true;
      }
    }
  }
  return value;
}

}  // namespace pdr
