#pragma once

#include "pdr/engine.hpp"
#include "pdr/model.hpp"

namespace pdr {

// Certificate object for "Player 1 wins the k-counter product from v_I" on
// one-counter games: the play graph of a winning strategy together with the
// two ranking functions that make it checkable locally.
struct StrategyGraph {
  int k = 1;
  std::vector<std::string> labels;  // product-configuration labels
  std::vector<std::vector<int>> edges;
  std::vector<std::uint64_t> mu_r;  // max disturbances still to be simulated
  std::vector<std::uint64_t> mu_d;  // max steps until the F-visit

  int size() const { return static_cast<int>(labels.size()); }
  std::optional<int> find(const std::string& label) const;
};

struct Violation {
  int property = 0;  // 1..5, or 0 for structural problems
  std::string where;
  std::string detail;
};

std::string violation_text(const Violation& v);

// Checks the five defining properties against the configuration graph of
// counter_product(rig_pds(spec), k). spec must be one-counter and
// f_sink-normalized; an empty result means the graph is a valid certificate.
std::vector<Violation> verify_strategy_graph(const StrategyGraph& graph,
                                             const PushdownGameSpec& spec,
                                             int k);

struct ExtractionResult {
  bool ok = false;
  StrategyGraph graph;
  std::string failure;  // names a witness play when !ok
};

// Builds the play graph of a Player-1 positional strategy on a truncated
// product arena, dropping edges out of F, and computes mu_r/mu_d. Fails (with
// a witness) if some consistent play avoids F or simulates >= k disturbances.
ExtractionResult extract_strategy_graph(const ExplicitArena& product_arena,
                                        const PositionalStrategy& strategy1,
                                        int k);

struct ExistenceResult {
  bool exists = false;
  Certificate certificate = Certificate::kExact;
  StrategyGraph graph;  // populated when exists
};

// A strategy graph for the k-disturbance game exists iff Player 1 wins the
// k-product from v_I, i.e. iff the resilience of v_I is < k.
ExistenceResult strategy_graph_exists(const PushdownGameSpec& spec, int k,
                                      const EngineOptions& opts = {});

// (2k)^{|Q|^2} with |Q| the original (pre-rigging) state count.
BigInt level_bound(const PushdownGameSpec& spec, int k);

}  // namespace pdr
