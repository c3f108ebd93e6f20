#include "pdr/io.hpp"

#include <charconv>
#include <sstream>

namespace pdr {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string stripped = line.substr(0, line.find('#'));
  std::istringstream in(stripped);
  std::vector<std::string> tokens;
  std::string t;
  while (in >> t) tokens.push_back(t);
  return tokens;
}

std::uint64_t parse_number(const std::string& t, int line) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size())
    throw ParseError(line, "expected a number, got '" + t + "'");
  return v;
}

// splits a label "state:word" produced by config_label
std::pair<std::string, std::string> split_label(const std::string& label) {
  auto pos = label.rfind(':');
  if (pos == std::string::npos) return {label, "_"};
  return {label.substr(0, pos), label.substr(pos + 1)};
}

}  // namespace

PushdownGameSpec parse_game(const std::string& text) {
  PushdownGameSpec g;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool saw_game = false, saw_initial = false;
  std::unordered_map<std::string, int> states, symbols;
  bool one_counter = false;

  auto find_state = [&](const std::string& name, int ln) {
    auto it = states.find(name);
    if (it == states.end()) throw ParseError(ln, "unknown state '" + name + "'");
    return it->second;
  };
  auto find_top = [&](const std::string& name, int ln) {
    if (name == "_") return kBottom;
    auto it = symbols.find(name);
    if (it == symbols.end())
      throw ParseError(ln, "unknown stack symbol '" + name + "'");
    return it->second;
  };
  auto parse_write = [&](const std::string& w, int top, int ln) {
    if (w == "eps") return std::string();
    // greedy split into declared symbol names
    std::string out;
    size_t at = 0;
    while (at < w.size()) {
      bool found = false;
      for (const auto& [name, idx] : symbols) {
        if (w.compare(at, name.size(), name) == 0) {
          out.push_back(static_cast<char>(idx));
          at += name.size();
          found = true;
          break;
        }
      }
      if (!found)
        throw ParseError(ln, "cannot read '" + w + "' as stack symbols");
    }
    size_t max_len = top == kBottom ? 1 : 2;
    if (out.size() > max_len)
      throw ParseError(ln, top == kBottom
                               ? "bottom rule may write at most one symbol"
                               : "rule may write at most two symbols");
    return out;
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0];
    if (!saw_game) {
      if (head != "game" || tokens.size() != 2 ||
          (tokens[1] != "pushdown" && tokens[1] != "onecounter"))
        throw ParseError(lineno,
                         "expected 'game pushdown' or 'game onecounter'");
      one_counter = tokens[1] == "onecounter";
      saw_game = true;
    } else if (head == "stack") {
      if (tokens.size() < 2)
        throw ParseError(lineno, "stack line needs at least one symbol");
      for (size_t j = 1; j < tokens.size(); ++j) {
        if (tokens[j] == "_")
          throw ParseError(lineno, "the bottom symbol is implicit");
        if (!symbols.emplace(tokens[j], g.stack_symbols.size()).second)
          throw ParseError(lineno, "duplicate stack symbol '" + tokens[j] + "'");
        g.stack_symbols.push_back(tokens[j]);
      }
    } else if (head == "state") {
      if (tokens.size() < 3 || tokens[2].rfind("owner=", 0) != 0 ||
          (tokens[2] != "owner=0" && tokens[2] != "owner=1"))
        throw ParseError(lineno, "expected 'state <name> owner=<0|1> ...'");
      bool initial = false, unsafe = false;
      for (size_t j = 3; j < tokens.size(); ++j) {
        if (tokens[j] == "initial")
          initial = true;
        else if (tokens[j] == "unsafe")
          unsafe = true;
        else
          throw ParseError(lineno, "unknown state flag '" + tokens[j] + "'");
      }
      if (!states.emplace(tokens[1], g.num_states()).second)
        throw ParseError(lineno, "duplicate state '" + tokens[1] + "'");
      int q = g.add_state(tokens[1], tokens[2] == "owner=1", unsafe);
      if (initial) {
        if (saw_initial) throw ParseError(lineno, "duplicate initial state");
        saw_initial = true;
        g.initial_state = q;
      }
    } else if (head == "edge" || head == "dedge") {
      if (tokens.size() != 6 || tokens[3] != "->")
        throw ParseError(lineno,
                         "expected '" + head + " <q> <top> -> <q'> <w>'");
      Rule r;
      r.from = find_state(tokens[1], lineno);
      r.top = find_top(tokens[2], lineno);
      r.to = find_state(tokens[4], lineno);
      r.write = parse_write(tokens[5], r.top, lineno);
      if (head == "dedge") {
        if (g.owner[r.from] != 0)
          throw ParseError(lineno, "disturbance edge from owner-1 state '" +
                                       tokens[1] + "'");
        g.disturbance_transitions.push_back(r);
      } else {
        g.transitions.push_back(r);
      }
    } else {
      throw ParseError(lineno, "unknown directive '" + head + "'");
    }
  }
  if (!saw_game) throw ParseError(0, "empty input: missing 'game' line");
  if (!saw_initial) throw ParseError(0, "no state marked initial");
  if (one_counter && g.stack_symbols.size() != 1)
    throw ParseError(0, "a onecounter game needs exactly one stack symbol");
  if (auto err = g.validate()) throw ParseError(0, *err);
  return g;
}

std::string serialize_game(const PushdownGameSpec& spec) {
  std::ostringstream out;
  out << "game " << (spec.is_one_counter() ? "onecounter" : "pushdown")
      << "\n";
  out << "stack";
  for (const auto& s : spec.stack_symbols) out << " " << s;
  out << "\n";
  for (int q = 0; q < spec.num_states(); ++q) {
    out << "state " << spec.state_names[q] << " owner=" << spec.owner[q];
    if (q == spec.initial_state) out << " initial";
    if (spec.unsafe_state[q]) out << " unsafe";
    out << "\n";
  }
  auto emit = [&](const char* head, const Rule& r) {
    out << head << " " << spec.state_names[r.from] << " "
        << (r.top == kBottom ? "_" : spec.stack_symbols[r.top]) << " -> "
        << spec.state_names[r.to] << " ";
    if (r.write.empty()) {
      out << "eps";
    } else {
      for (char c : r.write) out << spec.stack_symbols[static_cast<int>(c)];
    }
    out << "\n";
  };
  for (const auto& r : spec.transitions) emit("edge", r);
  for (const auto& r : spec.disturbance_transitions) emit("dedge", r);
  return out.str();
}

ResilienceValue parse_resilience(const std::string& text) {
  std::string t = text.substr(0, text.find('!'));
  while (!t.empty() && (t.back() == ' ' || t.back() == '\n')) t.pop_back();
  if (t == "omega+1") return ResilienceValue::omega_plus_one();
  if (t == "omega") return ResilienceValue::omega(ResilienceValue::Witness::kYes);
  if (t == "omega?nonuniform")
    return ResilienceValue::omega(ResilienceValue::Witness::kNo);
  return ResilienceValue::fin(parse_number(t, 0));
}

std::string serialize_strategy(const ExplicitArena& arena,
                               const PositionalStrategy& strategy) {
  std::ostringstream out;
  for (int v = 0; v < arena.size(); ++v) {
    if (!strategy.defined_at(v)) continue;
    auto [q, w] = split_label(arena.info[v].label);
    auto [q2, w2] = split_label(arena.info[strategy.choice.at(v)].label);
    out << q << " " << (w.empty() ? "_" : w) << " -> " << q2 << " "
        << (w2.empty() ? "_" : w2) << "\n";
  }
  return out.str();
}

PositionalStrategy parse_strategy(const ExplicitArena& arena,
                                  const std::string& text) {
  std::unordered_map<std::string, int> by_label;
  for (int v = 0; v < arena.size(); ++v)
    by_label.emplace(arena.info[v].label, v);
  auto resolve = [&](const std::string& q, const std::string& w, int ln) {
    auto it = by_label.find(q + ":" + w);
    // vertices without a stack part (e.g. the frontier sink) serialize as
    // `<label> _`
    if (it == by_label.end() && w == "_") it = by_label.find(q);
    if (it == by_label.end())
      throw ParseError(ln, "no configuration '" + q + " " + w + "'");
    return it->second;
  };
  PositionalStrategy s;
  s.player = 0;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 5 || tokens[2] != "->")
      throw ParseError(lineno, "expected '<q> <w> -> <q'> <w'>'");
    s.choice[resolve(tokens[0], tokens[1], lineno)] =
        resolve(tokens[3], tokens[4], lineno);
  }
  return s;
}

std::string serialize_strategy_graph(const StrategyGraph& graph) {
  std::ostringstream out;
  out << "strategy-graph k=" << graph.k << "\n";
  for (int v = 0; v < graph.size(); ++v)
    out << graph.labels[v] << " " << graph.mu_r[v] << " " << graph.mu_d[v]
        << "\n";
  for (int v = 0; v < graph.size(); ++v)
    for (int w : graph.edges[v])
      out << graph.labels[v] << " -> " << graph.labels[w] << "\n";
  return out.str();
}

StrategyGraph parse_strategy_graph(const std::string& text) {
  StrategyGraph graph;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool saw_head = false;
  std::unordered_map<std::string, int> index;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (!saw_head) {
      if (tokens.size() != 2 || tokens[0] != "strategy-graph" ||
          tokens[1].rfind("k=", 0) != 0)
        throw ParseError(lineno, "expected 'strategy-graph k=<k>'");
      graph.k = static_cast<int>(parse_number(tokens[1].substr(2), lineno));
      saw_head = true;
    } else if (tokens.size() == 3 && tokens[1] != "->") {
      if (!index.emplace(tokens[0], graph.size()).second)
        throw ParseError(lineno, "duplicate vertex '" + tokens[0] + "'");
      graph.labels.push_back(tokens[0]);
      graph.edges.emplace_back();
      graph.mu_r.push_back(parse_number(tokens[1], lineno));
      graph.mu_d.push_back(parse_number(tokens[2], lineno));
    } else if (tokens.size() == 3 && tokens[1] == "->") {
      auto a = index.find(tokens[0]);
      auto b = index.find(tokens[2]);
      if (a == index.end() || b == index.end())
        throw ParseError(lineno, "edge references an undeclared vertex");
      graph.edges[a->second].push_back(b->second);
    } else {
      throw ParseError(lineno, "cannot read strategy-graph line");
    }
  }
  if (!saw_head) throw ParseError(0, "empty strategy-graph");
  return graph;
}

}  // namespace pdr
