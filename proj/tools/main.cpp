#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "pdr/engine.hpp"
#include "pdr/generators.hpp"
#include "pdr/io.hpp"
#include "pdr/reach.hpp"
#include "pdr/rigging.hpp"
#include "pdr/strategy_graph.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw pdr::ParseError(0, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw pdr::ParseError(0, "cannot write " + out_path);
  out << content;
}

void print_bounds(const pdr::Bounds& bounds) {
  std::cout << "h(P): " << bounds.h.to_report() << "\n";
  std::cout << "b(P): " << (bounds.b_exact ? bounds.b.to_report()
                                           : "~2^" + bounds.b_bits.to_report())
            << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"resilience of safety games with disturbances on pushdown "
               "configuration graphs"};
  app.require_subcommand(1);

  std::string game_file, out_file, graph_file, strategy_file;
  int height_cap = 128;
  std::uint64_t k_cap = 1ull << 16;
  std::string alpha;
  int height = 8, k = 1, truncate = 8, budget = 4, disturbances = 1, runs = 100;
  std::uint64_t seed = 1;
  std::vector<std::string> gen_args;

  auto* c_res = app.add_subcommand("resilience",
                                   "resilience of the initial configuration");
  c_res->add_option("file", game_file)->required();
  c_res->add_option("--height-cap", height_cap);
  c_res->add_option("--k-cap", k_cap);

  auto* c_check = app.add_subcommand("check", "is the initial configuration "
                                              "alpha-resilient?");
  c_check->add_option("file", game_file)->required();
  c_check->add_option("--alpha", alpha)->required();
  c_check->add_option("--height-cap", height_cap);
  c_check->add_option("--k-cap", k_cap);

  auto* c_strat = app.add_subcommand("strategy", "optimally resilient "
                                                 "strategy on a truncation");
  c_strat->add_option("file", game_file)->required();
  c_strat->add_option("--height", height)->required();
  c_strat->add_option("--out", out_file);

  auto* c_graph = app.add_subcommand("strategy-graph",
                                     "extract or verify a strategy graph");
  c_graph->add_option("file", game_file)->required();
  c_graph->add_option("--k", k)->required();
  c_graph->add_option("--verify", graph_file);
  c_graph->add_option("--height-cap", height_cap);
  c_graph->add_option("--out", out_file);

  auto* c_reach = app.add_subcommand("reach-optimal",
                                     "value of a reachability-optimal "
                                     "strategy");
  c_reach->add_option("file", game_file)->required();
  c_reach->add_option("--height-cap", height_cap);
  c_reach->add_option("--k-cap", k_cap);

  auto* c_gen = app.add_subcommand("generate", "emit a fixture game");
  c_gen->add_option("what", gen_args)->required()->expected(1, 2);
  c_gen->add_option("--out", out_file);

  auto* c_sim = app.add_subcommand("simulate", "play a strategy against "
                                               "random schedules");
  c_sim->add_option("game", game_file)->required();
  c_sim->add_option("strategy", strategy_file)->required();
  c_sim->add_option("--disturbances", disturbances);
  c_sim->add_option("--runs", runs);
  c_sim->add_option("--seed", seed);
  c_sim->add_option("--height", height);

  auto* c_oracle = app.add_subcommand("oracle", "brute-force resilience "
                                                "table on a truncation");
  c_oracle->add_option("file", game_file)->required();
  c_oracle->add_option("--truncate", truncate);
  c_oracle->add_option("--budget", budget);

  CLI11_PARSE(app, argc, argv);

  try {
    pdr::EngineOptions opts{height_cap, k_cap};

    if (c_res->parsed()) {
      auto spec = pdr::parse_game(slurp(game_file));
      auto value = pdr::resilience_initial(spec, opts);
      std::cout << value.to_string() << "\n";
      print_bounds(pdr::compute_bounds(spec));
    } else if (c_check->parsed()) {
      auto spec = pdr::parse_game(slurp(game_file));
      auto threshold = pdr::parse_resilience(alpha);
      auto value = pdr::resilience_initial(spec, opts);
      bool yes = !(value < threshold);  // alpha-resilient iff r >= alpha
      std::cout << (yes ? "yes" : "no") << " "
                << value.to_string().substr(value.to_string().find('!'))
                << "\n";
    } else if (c_strat->parsed()) {
      auto spec = pdr::parse_game(slurp(game_file));
      auto arena = pdr::expand_truncated(spec, height,
                                         pdr::FrontierMode::kOptimisticFor0);
      auto table = pdr::resilience_fixpoint(arena);
      auto strategy = pdr::extract_optimal_strategy(arena, table);
      emit(out_file, pdr::serialize_strategy(arena, strategy));
    } else if (c_graph->parsed()) {
      auto spec = pdr::parse_game(slurp(game_file));
      if (!graph_file.empty()) {
        auto graph = pdr::parse_strategy_graph(slurp(graph_file));
        auto violations = pdr::verify_strategy_graph(graph, spec, graph.k);
        if (violations.empty()) {
          std::cout << "ok\n";
        } else {
          for (const auto& v : violations)
            std::cout << pdr::violation_text(v) << "\n";
        }
      } else {
        auto res = pdr::strategy_graph_exists(spec, k, opts);
        std::string cert = pdr::ResilienceValue::fin(0, res.certificate)
                               .to_string();
        std::cout << (res.exists ? "exists " : "does-not-exist ")
                  << cert.substr(cert.find('!')) << "\n";
        if (res.exists) emit(out_file, pdr::serialize_strategy_graph(res.graph));
      }
    } else if (c_reach->parsed()) {
      auto spec = pdr::parse_game(slurp(game_file));
      std::cout << pdr::optimal_reach_value(spec, opts).to_string() << "\n";
    } else if (c_gen->parsed()) {
      pdr::PushdownGameSpec spec;
      const std::string& what = gen_args[0];
      auto arg = [&](int def) {
        return gen_args.size() > 1 ? std::stoi(gen_args[1]) : def;
      };
      if (what == "fig1") spec = pdr::gen_fig1();
      else if (what == "fig3") spec = pdr::gen_fig3();
      else if (what == "primorial-ocs") spec = pdr::gen_primorial_ocs(arg(1));
      else if (what == "binary-pds") spec = pdr::gen_binary_pds(arg(1));
      else if (what == "random")
        spec = pdr::gen_random(static_cast<std::uint64_t>(arg(1)));
      else throw pdr::ParseError(0, "unknown fixture '" + what + "'");
      emit(out_file, pdr::serialize_game(spec));
    } else if (c_sim->parsed()) {
      auto spec = pdr::parse_game(slurp(game_file));
      auto arena = pdr::expand_truncated(spec, height,
                                         pdr::FrontierMode::kOptimisticFor0);
      auto strategy = pdr::parse_strategy(arena, slurp(strategy_file));
      std::mt19937_64 rng(seed);
      const int max_steps = 200;
      int wins = 0;
      for (int run = 0; run < runs; ++run) {
        std::vector<int> schedule;
        for (int j = 0; j < disturbances; ++j)
          schedule.push_back(1 + static_cast<int>(rng() % max_steps));
        auto play = pdr::simulate(arena, arena.initial, strategy, nullptr,
                                  schedule, max_steps, rng());
        bool lost = false;
        for (const auto& step : play.steps) lost = lost || arena.unsafe[step.vertex];
        wins += !lost;
      }
      std::cout << "wins " << wins << " losses " << (runs - wins) << "\n";
    } else if (c_oracle->parsed()) {
      auto spec = pdr::parse_game(slurp(game_file));
      auto arena = pdr::expand_truncated(spec, truncate,
                                         pdr::FrontierMode::kOptimisticFor0);
      auto table = pdr::brute_force_resilience(arena, budget);
      for (int v = 0; v < arena.size(); ++v) {
        std::cout << arena.info[v].label << " ";
        if (table[v] == pdr::kOmegaPlusOneSentinel)
          std::cout << "omega+1-above-" << budget << "\n";
        else
          std::cout << table[v] << "\n";
      }
    }
  } catch (const pdr::CapsExhausted& e) {
    std::cout << "unknown: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
