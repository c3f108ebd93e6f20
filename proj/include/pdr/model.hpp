#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace pdr {

// ---------------------------------------------------------------------------
// Symbolic pushdown game with disturbances.
//
// A rule (state, top, state', word) rewrites the top of the stack. top == kBottom
// means the rule fires on the empty stack; its replacement word (length <= 1)
// is pushed on top of the preserved bottom symbol. Stack words are stored
// top-first, each char being a stack-alphabet index.
// ---------------------------------------------------------------------------

inline constexpr int kBottom = -1;

struct Rule {
  int from = 0;
  int top = kBottom;         // stack symbol index, or kBottom
  int to = 0;
  std::string write;         // replacement word, top-first, indices as chars
  bool operator==(const Rule&) const = default;
};

struct PushdownGameSpec {
  std::vector<std::string> state_names;
  std::vector<int> owner;            // per state, 0 or 1
  std::vector<char> unsafe_state;    // per state
  std::vector<char> dstate;          // per state: marks disturbance-simulation
                                     // states of rigged systems (empty = none)
  int initial_state = 0;
  std::vector<std::string> stack_symbols;  // names; bottom not a member
  std::vector<Rule> transitions;
  std::vector<Rule> disturbance_transitions;

  int num_states() const { return static_cast<int>(state_names.size()); }
  bool is_one_counter() const { return stack_symbols.size() == 1; }
  bool is_dstate(int q) const {
    return q < static_cast<int>(dstate.size()) && dstate[q];
  }

  int add_state(const std::string& name, int own, bool unsafe = false,
                bool dist = false) {
    state_names.push_back(name);
    owner.push_back(own);
    unsafe_state.push_back(unsafe);
    dstate.push_back(dist);
    return num_states() - 1;
  }

  // Returns an error message naming the offending rule/state, or nullopt.
  std::optional<std::string> validate() const;
};

struct Configuration {
  int state = 0;
  std::string stack;  // top-first symbol indices; empty = bottom only

  int height() const { return static_cast<int>(stack.size()); }
  bool operator==(const Configuration&) const = default;
};

std::string config_label(const PushdownGameSpec& spec, const Configuration& c);

// ---------------------------------------------------------------------------
// Explicit finite arena (truncated configuration graphs, rigged arenas, ...).
// ---------------------------------------------------------------------------

enum class VKind : std::uint8_t {
  kConfig,    // an original configuration
  kCopy,      // rigged copy of an owner-0 vertex
  kEdgeMove,  // rigged auxiliary vertex for a Player-1 standard edge
  kEdgeDist,  // rigged auxiliary vertex for a disturbance edge (the D set)
  kFrontier,  // truncation sink
};

struct VertexInfo {
  VKind kind = VKind::kConfig;
  std::string label;
  int height = 0;
  bool dstate = false;  // configuration of a disturbance-simulation state
};

struct ExplicitArena {
  std::vector<VertexInfo> info;
  std::vector<int> owner;
  std::vector<std::vector<int>> edges;
  std::vector<std::vector<int>> dedges;
  std::vector<char> unsafe;
  int initial = -1;
  bool frontier_reached = false;  // set by expand_truncated
  bool budget_exceeded = false;   // expansion stopped early; arena unusable

  int size() const { return static_cast<int>(info.size()); }
  bool is_dvertex(int v) const {
    return info[v].kind == VKind::kEdgeDist || info[v].dstate;
  }

  int add_vertex(VKind kind, std::string label, int height, int own,
                 bool uns) {
    info.push_back({kind, std::move(label), height});
    owner.push_back(own);
    edges.emplace_back();
    dedges.emplace_back();
    unsafe.push_back(uns);
    return size() - 1;
  }

  std::optional<std::string> validate() const;
  std::optional<int> find_label(const std::string& label) const;
};

enum class FrontierMode { kOptimisticFor0, kPessimisticFor0 };

// Materializes the configuration graph up to stack height max_height, starting
// from the initial configuration. Moves that would exceed the bound are
// redirected to a frontier sink (safe or unsafe depending on mode). If more
// than max_vertices configurations are discovered, expansion stops and the
// result only carries budget_exceeded.
ExplicitArena expand_truncated(const PushdownGameSpec& spec, int max_height,
                               FrontierMode mode,
                               std::size_t max_vertices = SIZE_MAX);

// Rewires unsafe states to deterministically pop to height 0 and enter a fresh
// absorbing unsafe state q_f; resilience of original vertices is unchanged.
PushdownGameSpec f_sink_normalize(const PushdownGameSpec& spec);

// ---------------------------------------------------------------------------
// Plays, strategies, simulation.
// ---------------------------------------------------------------------------

struct PlayStep {
  int vertex = 0;
  bool disturbance = false;  // first step always false
};

struct Play {
  std::vector<PlayStep> steps;
  std::vector<int> skipped_schedule_entries;  // positions where the schedule
                                              // fired but no dedge existed
  int disturbance_count() const {
    int n = 0;
    for (const auto& s : steps) n += s.disturbance;
    return n;
  }
};

struct PositionalStrategy {
  int player = 0;
  std::unordered_map<int, int> choice;  // owned vertex -> successor

  bool defined_at(int v) const { return choice.count(v) != 0; }
};

// Plays the arena for max_steps steps. strategy0 drives owner-0 vertices; the
// adversary strategy (if given) drives owner-1 vertices, otherwise a seeded
// uniform pick. The disturbance schedule lists play positions at which a
// disturbance edge overrides Player 0's move; entries at vertices without
// disturbance edges are skipped and recorded.
Play simulate(const ExplicitArena& arena, int start,
              const PositionalStrategy& strategy0,
              const PositionalStrategy* adversary,
              const std::vector<int>& disturbance_schedule, int max_steps,
              std::uint64_t seed);

// Positions j > 0 with bit 1 where the move differs from strategy0's choice.
std::vector<int> consequential_disturbances(const ExplicitArena& arena,
                                            const Play& play,
                                            const PositionalStrategy& s0);

}  // namespace pdr
