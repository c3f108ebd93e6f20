#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "pdr/generators.hpp"
#include "pdr/rigging.hpp"
#include "pdr/solver.hpp"

using namespace pdr;
using namespace pdr::testing;

namespace {

// Canonical form identifying a vertex of a rigged configuration graph across
// the two construction orders (rig the expanded arena / expand the rigged
// system). Auxiliary vertices are reduced to (tag, source state, target
// state, source stack); dedup suffixes and target stacks are dropped.
//   rig_arena side:  "q:w", "q:w~copy", "q:w→q':w'~e|d"
//   rig_pds side:    "q:w", "q~copy:w", "q→q'~e|d<digits>:w"
std::string canon_label(const std::string& label) {
  auto split_config = [](const std::string& s) {
    auto pos = s.rfind(':');
    return std::pair{s.substr(0, pos), s.substr(pos + 1)};
  };
  auto arrow = label.find("→");
  if (arrow == std::string::npos) {
    if (label.size() > 5 && label.ends_with("~copy")) {  // arena-side copy
      auto [q, w] = split_config(label.substr(0, label.size() - 5));
      return "copy|" + q + "|" + w;
    }
    auto [q, w] = split_config(label);
    if (q.size() > 5 && q.ends_with("~copy"))  // pds-side copy
      return "copy|" + q.substr(0, q.size() - 5) + "|" + w;
    return "conf|" + q + "|" + w;
  }
  std::string left = label.substr(0, arrow);
  std::string right = label.substr(arrow + std::string("→").size());
  if (left.find(':') != std::string::npos) {
    // arena side: left is the full source configuration, right "q':w'~e"
    auto [q, w] = split_config(left);
    auto tilde = right.rfind('~');
    std::string tag = right.substr(tilde + 1);
    std::string q2 = split_config(right.substr(0, tilde)).first;
    return tag + "|" + q + "|" + q2 + "|" + w;
  }
  // pds side: left is the source state, right "q'~e<digits>:w"
  auto [mangled, w] = split_config(right);
  auto tilde = mangled.rfind('~');
  std::string q2 = mangled.substr(0, tilde);
  std::string tag = mangled.substr(tilde + 1);
  while (!tag.empty() && std::isdigit(static_cast<unsigned char>(tag.back())))
    tag.pop_back();
  return tag + "|" + left + "|" + q2 + "|" + w;
}

// Multisets of canonical vertices and edges, restricted to heights < cut so
// both sides saw the full neighborhood of every kept vertex.
struct CanonGraph {
  std::multiset<std::string> vertices;
  std::multiset<std::string> edges;
};

CanonGraph canonize(const ExplicitArena& arena, int cut) {
  CanonGraph g;
  std::vector<char> keep(arena.size(), 0);
  for (int v = 0; v < arena.size(); ++v) {
    if (arena.info[v].kind == VKind::kFrontier || arena.info[v].height >= cut)
      continue;
    keep[v] = 1;
    g.vertices.insert(canon_label(arena.info[v].label));
  }
  for (int v = 0; v < arena.size(); ++v) {
    if (!keep[v]) continue;
    for (int w : arena.edges[v])
      if (keep[w])
        g.edges.insert(canon_label(arena.info[v].label) + " -> " +
                       canon_label(arena.info[w].label));
  }
  return g;
}

}  // namespace

TEST_CASE("rigging an arena flips ownership and removes disturbances") {
  auto arena = expand_truncated(gen_fig1(), 5, FrontierMode::kOptimisticFor0);
  auto rigged = rig_arena(arena);
  REQUIRE(!rigged.validate().has_value());
  for (int v = 0; v < rigged.size(); ++v) {
    CHECK(rigged.dedges[v].empty());
    CHECK(rigged.owner[v] == (rigged.info[v].kind == VKind::kCopy ? 0 : 1));
  }
  // every original vertex survives with its label and unsafe flag
  for (int v = 0; v < arena.size(); ++v) {
    auto w = rigged.find_label(arena.info[v].label);
    REQUIRE(w.has_value());
    CHECK(rigged.unsafe[*w] == arena.unsafe[v]);
  }
  // disturbance edges became Player-1 options through marked vertices
  int q1A = *arena.find_label("q_1:A");
  int rv = *rigged.find_label("q_1:A");
  bool found_dist = false;
  for (int w : rigged.edges[rv])
    if (rigged.info[w].kind == VKind::kEdgeDist) {
      found_dist = true;
      CHECK(rigged.is_dvertex(w));
      REQUIRE(rigged.edges[w].size() == 1);
      CHECK(rigged.info[rigged.edges[w][0]].label ==
            arena.info[arena.dedges[q1A][0]].label);
    }
  CHECK(found_dist);
}

TEST_CASE("rigging commutes with expansion up to canonical labels") {
  std::vector<PushdownGameSpec> specs = {gen_fig1(), gen_primorial_ocs(1),
                                         gen_fig3()};
  for (std::uint64_t seed : {3ull, 14ull, 27ull}) {
    auto g = gen_random(seed, {.states = 3, .one_counter = false,
                               .stack_symbols = 2, .extra_rules = 3,
                               .disturbance_rules = 2});
    // drop duplicate rules: they collapse to one edge in the expanded arena
    // but keep distinct auxiliary states in the rigged system
    std::vector<Rule> unique;
    for (const auto& r : g.transitions)
      if (std::find(unique.begin(), unique.end(), r) == unique.end())
        unique.push_back(r);
    g.transitions = unique;
    if (!g.validate()) specs.push_back(g);
  }
  for (const auto& spec : specs) {
    const int T = 5;
    auto via_arena =
        rig_arena(expand_truncated(spec, T, FrontierMode::kOptimisticFor0));
    auto via_pds = expand_truncated(rig_pds(spec), T,
                                    FrontierMode::kOptimisticFor0);
    auto a = canonize(via_arena, T);
    auto b = canonize(via_pds, T);
    CHECK(a.vertices == b.vertices);
    CHECK(a.edges == b.edges);
    CHECK(!a.edges.empty());
  }
}

TEST_CASE("player 0 survives the rigged pumping game") {
  // fig1's initial vertex has resilience omega+1, so Player 0 wins plain
  // safety even when Player 1 schedules the disturbances
  auto rigged = expand_truncated(rig_pds(gen_fig1()), 4,
                                 FrontierMode::kOptimisticFor0);
  auto regions = solve_safety(rigged);
  CHECK(regions.w0[rigged.initial]);
}

TEST_CASE("counter product structure") {
  auto rigged = rig_pds(gen_primorial_ocs(1));
  const int k = 3;
  auto prod = counter_product(rigged, k);
  REQUIRE(!prod.validate().has_value());
  CHECK(prod.num_states() == rigged.num_states() * (k + 1));
  CHECK(prod.state_names[prod.initial_state] ==
        rigged.state_names[rigged.initial_state] + "@c0");
  for (int q = 0; q < prod.num_states(); ++q) {
    bool at_cap = prod.state_names[q].ends_with("@c" + std::to_string(k));
    if (at_cap) {
      CHECK(prod.owner[q] == 1);
      CHECK(!prod.unsafe_state[q]);
      CHECK(!prod.is_dstate(q));
      // absorbing: every rule from q stays at q
      for (const auto& r : prod.transitions)
        if (r.from == q) CHECK(r.to == q);
    }
  }
  // counter increments exactly on rules leaving disturbance states
  auto counter_of = [&](int q) {
    const std::string& n = prod.state_names[q];
    return n.back() - '0';
  };
  for (const auto& r : prod.transitions) {
    if (counter_of(r.from) == k) continue;
    int expect = counter_of(r.from);
    if (prod.is_dstate(r.from)) ++expect;
    CHECK(counter_of(r.to) == expect);
  }
  CHECK_THROWS_AS(counter_product(rigged, 0), std::invalid_argument);
}

TEST_CASE("play translation round-trips through the rigged arena") {
  auto arena = expand_truncated(gen_fig1(), 6, FrontierMode::kOptimisticFor0);
  auto rigged = rig_arena(arena);
  PositionalStrategy empty;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto play =
        simulate(arena, arena.initial, empty, nullptr, {2, 4, 7}, 12, seed);
    auto up = translate_play_up(arena, rigged, play);
    // the translated sequence is a real path of the rigged arena
    REQUIRE(!up.steps.empty());
    CHECK(up.steps[0].vertex == rigged.initial);
    for (size_t j = 1; j < up.steps.size(); ++j) {
      const auto& e = rigged.edges[up.steps[j - 1].vertex];
      CHECK(std::find(e.begin(), e.end(), up.steps[j].vertex) != e.end());
    }
    // and it projects back to the play we started from
    auto down = translate_play_down(arena, rigged, up);
    REQUIRE(down.steps.size() == play.steps.size());
    for (size_t j = 0; j < play.steps.size(); ++j) {
      CHECK(down.steps[j].vertex == play.steps[j].vertex);
      CHECK(down.steps[j].disturbance == play.steps[j].disturbance);
    }
  }
}

TEST_CASE("rigged winning strategy survives below the original game") {
  // In the rigged pumping game Player 0 wins plain safety; the strategy
  // restricted to the original arena survives arbitrary disturbance schedules.
  auto arena = expand_truncated(gen_fig1(), 6, FrontierMode::kOptimisticFor0);
  auto rigged = rig_arena(arena);
  auto regions = solve_safety(rigged);
  REQUIRE(regions.w0[rigged.initial]);
  auto s0 = lift_strategy_down(arena, rigged, regions.strategy0);
  std::unordered_map<int, int> choice(s0.choice.begin(), s0.choice.end());
  CHECK(!defeated_within(arena, arena.initial, choice, 4));
}
