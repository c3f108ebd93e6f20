#pragma once

#include <stdexcept>

#include "pdr/engine.hpp"
#include "pdr/model.hpp"
#include "pdr/strategy_graph.hpp"

namespace pdr {

struct ParseError : std::runtime_error {
  int line;  // 1-based; 0 = whole file
  ParseError(int line_, const std::string& what)
      : std::runtime_error(line_ ? "line " + std::to_string(line_) + ": " + what
                                 : what),
        line(line_) {}
};

// Line-oriented game format; see README. Throws ParseError with the offending
// line on any problem, including spec-level validation failures.
PushdownGameSpec parse_game(const std::string& text);
std::string serialize_game(const PushdownGameSpec& spec);

// `omega+1` | `omega` | `omega?nonuniform` | decimal, optionally followed by a
// `!certificate` suffix (ignored on input).
ResilienceValue parse_resilience(const std::string& text);

// One line per owner-0 configuration: `state <stack-word> -> state <stack-word>`
// with `_` for the empty stack.
std::string serialize_strategy(const ExplicitArena& arena,
                               const PositionalStrategy& strategy);
PositionalStrategy parse_strategy(const ExplicitArena& arena,
                                  const std::string& text);

// Headed by `strategy-graph k=<k>`; then one line per vertex
// `<label> <mu_r> <mu_d>` and one per edge `<label> -> <label>`.
std::string serialize_strategy_graph(const StrategyGraph& graph);
StrategyGraph parse_strategy_graph(const std::string& text);

}  // namespace pdr
