#include "pdr/strategy_graph.hpp"

#include <algorithm>
#include <map>

#include "pdr/rigging.hpp"
#include "pdr/solver.hpp"

namespace pdr {

namespace {

int label_height(const std::string& label) {
  auto pos = label.rfind(':');
  if (pos == std::string::npos || label.substr(pos + 1) == "_") return 0;
  return static_cast<int>(label.size() - pos - 1);
}

std::string label_state(const std::string& label) {
  auto pos = label.rfind(':');
  return pos == std::string::npos ? label : label.substr(0, pos);
}

}  // namespace

std::optional<int> StrategyGraph::find(const std::string& label) const {
  for (int v = 0; v < size(); ++v)
    if (labels[v] == label) return v;
  return std::nullopt;
}

std::string violation_text(const Violation& v) {
  std::string head = v.property == 0
                         ? std::string("structural")
                         : "property " + std::to_string(v.property);
  return head + " at " + v.where + ": " + v.detail;
}

BigInt level_bound(const PushdownGameSpec& spec, int k) {
  std::uint64_t n = spec.num_states();
  return BigInt::pow(BigInt(2ull * static_cast<std::uint64_t>(k)), n * n);
}

std::vector<Violation> verify_strategy_graph(const StrategyGraph& graph,
                                             const PushdownGameSpec& spec,
                                             int k) {
  if (!spec.is_one_counter())
    throw std::invalid_argument("strategy graphs require a one-counter spec");
  std::vector<Violation> out;
  PushdownGameSpec product = counter_product(rig_pds(spec), k);
  std::map<std::string, char> dstate_of;
  for (int q = 0; q < product.num_states(); ++q)
    dstate_of[product.state_names[q]] = product.is_dstate(q);

  int maxh = 0;
  for (const auto& l : graph.labels) maxh = std::max(maxh, label_height(l));
  ExplicitArena arena =
      expand_truncated(product, maxh + 1, FrontierMode::kOptimisticFor0);

  // resolve graph vertices in the configuration graph
  std::vector<int> at(graph.size(), -1);
  std::unordered_map<std::string, int> by_label;
  for (int v = 0; v < arena.size(); ++v) by_label.emplace(arena.info[v].label, v);
  for (int g = 0; g < graph.size(); ++g) {
    auto it = by_label.find(graph.labels[g]);
    if (it == by_label.end())
      out.push_back({0, graph.labels[g], "not a reachable configuration"});
    else
      at[g] = it->second;
  }
  if (!out.empty()) return out;

  // property 1: contains v_I, heights within the level bound
  const std::string init_label = arena.info[arena.initial].label;
  if (!graph.find(init_label))
    out.push_back({1, init_label, "initial vertex missing from the graph"});
  BigInt bound = level_bound(spec, k);
  for (const auto& l : graph.labels)
    if (bound < BigInt(static_cast<std::uint64_t>(label_height(l))))
      out.push_back({1, l, "stack height exceeds (2k)^{|Q|^2}"});

  std::uint64_t n = graph.size();
  for (int g = 0; g < graph.size(); ++g) {
    int v = at[g];
    bool in_f = arena.unsafe[v];
    if (graph.mu_r[g] >= static_cast<std::uint64_t>(k))
      out.push_back({0, graph.labels[g], "mu_r out of range"});
    if (graph.mu_d[g] > n)
      out.push_back({0, graph.labels[g], "mu_d out of range"});

    // edges must exist in the configuration graph
    for (int h : graph.edges[g]) {
      int w = at[h];
      if (std::find(arena.edges[v].begin(), arena.edges[v].end(), w) ==
          arena.edges[v].end())
        out.push_back({0, graph.labels[g],
                       "edge to " + graph.labels[h] + " not in the arena"});
    }
    if (!in_f) {
      if (arena.owner[v] == 0) {
        // property 2: all arena successors kept
        for (int w : arena.edges[v]) {
          bool kept = false;
          for (int h : graph.edges[g]) kept = kept || at[h] == w;
          if (!kept)
            out.push_back({2, graph.labels[g],
                           "missing successor " + arena.info[w].label});
        }
      } else if (graph.edges[g].size() != 1) {
        out.push_back({3, graph.labels[g],
                       "has " + std::to_string(graph.edges[g].size()) +
                           " outgoing edges instead of one"});
      }
    }
    bool is_d = dstate_of[label_state(graph.labels[g])];
    for (int h : graph.edges[g]) {
      if (graph.mu_r[g] < graph.mu_r[h] || (is_d && graph.mu_r[g] == graph.mu_r[h]))
        out.push_back({4, graph.labels[g],
                       "mu_r " + std::to_string(graph.mu_r[g]) + " -> " +
                           std::to_string(graph.mu_r[h]) + " towards " +
                           graph.labels[h]});
      if (graph.mu_d[g] <= graph.mu_d[h])
        out.push_back({5, graph.labels[g],
                       "mu_d " + std::to_string(graph.mu_d[g]) + " -> " +
                           std::to_string(graph.mu_d[h]) + " towards " +
                           graph.labels[h]});
    }
  }
  return out;
}

ExtractionResult extract_strategy_graph(const ExplicitArena& arena,
                                        const PositionalStrategy& strategy1,
                                        int k) {
  ExtractionResult res;
  res.graph.k = k;
  int n = arena.size();
  std::vector<int> id(n, -1);
  std::vector<int> order;  // graph vertex -> arena vertex
  auto intern = [&](int v) {
    if (id[v] < 0) {
      id[v] = res.graph.size();
      res.graph.labels.push_back(arena.info[v].label);
      res.graph.edges.emplace_back();
      order.push_back(v);
    }
    return id[v];
  };
  intern(arena.initial);
  for (size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    if (arena.unsafe[v]) continue;  // F-visit ends the certificate
    if (arena.info[v].kind == VKind::kFrontier) {
      res.failure = "a consistent play escapes the truncation";
      return res;
    }
    if (arena.owner[v] == 1) {
      int w = strategy1.defined_at(v) ? strategy1.choice.at(v)
                                      : arena.edges[v].front();
      int g = intern(w);  // may grow the edge table, so index afterwards
      res.graph.edges[id[v]].push_back(g);
    } else {
      for (int w : arena.edges[v]) {
        int g = intern(w);
        res.graph.edges[id[v]].push_back(g);
      }
    }
  }

  // topological order; a cycle is a consistent play avoiding F
  int m = res.graph.size();
  std::vector<int> state(m, 0), topo;
  std::vector<int> stack, pos(m, -1);
  for (int s = 0; s < m; ++s) {
    if (state[s]) continue;
    stack.push_back(s);
    while (!stack.empty()) {
      int g = stack.back();
      if (state[g] == 0) {
        state[g] = 1;
        pos[g] = static_cast<int>(stack.size()) - 1;
        for (int h : res.graph.edges[g]) {
          if (state[h] == 1) {
            std::string lasso;
            for (size_t i = pos[h]; i < stack.size(); ++i)
              lasso += res.graph.labels[stack[i]] + " -> ";
            res.failure = "consistent lasso avoiding F: " + lasso +
                          res.graph.labels[h];
            return res;
          }
          if (state[h] == 0) stack.push_back(h);
        }
      } else {
        if (state[g] == 1) {
          state[g] = 2;
          topo.push_back(g);
        }
        stack.pop_back();
      }
    }
  }

  res.graph.mu_r.assign(m, 0);
  res.graph.mu_d.assign(m, 0);
  for (int g : topo) {  // successors already final
    bool is_d = arena.is_dvertex(order[g]);
    for (int h : res.graph.edges[g]) {
      res.graph.mu_d[g] = std::max(res.graph.mu_d[g], res.graph.mu_d[h] + 1);
      res.graph.mu_r[g] =
          std::max(res.graph.mu_r[g], res.graph.mu_r[h] + (is_d ? 1 : 0));
    }
  }
  int root = id[arena.initial];
  if (res.graph.mu_r[root] >= static_cast<std::uint64_t>(k)) {
    res.failure = "a consistent play simulates " +
                  std::to_string(res.graph.mu_r[root]) + " disturbances";
    return res;
  }
  res.ok = true;
  return res;
}

ExistenceResult strategy_graph_exists(const PushdownGameSpec& spec, int k,
                                      const EngineOptions& opts) {
  if (!spec.is_one_counter())
    throw std::invalid_argument("strategy graphs require a one-counter spec");
  PushdownGameSpec rigged = rig_pds(spec);
  BigInt bound = level_bound(spec, k);
  ProductSolve solve = solve_product_game(rigged, k, opts, &bound);
  ExistenceResult res;
  res.certificate = solve.certificate;
  if (!solve.player1_wins) return res;

  // re-solve at the witnessing truncation to get the strategy back
  PushdownGameSpec product = counter_product(rigged, k);
  ExplicitArena arena = expand_truncated(product, solve.truncation_height,
                                         FrontierMode::kOptimisticFor0);
  Regions regions = solve_safety(arena);
  auto extraction = extract_strategy_graph(arena, regions.strategy1, k);
  if (!extraction.ok)
    throw std::runtime_error("extraction from a winning strategy failed: " +
                             extraction.failure);
  res.exists = true;
  res.graph = std::move(extraction.graph);
  return res;
}

}  // namespace pdr
