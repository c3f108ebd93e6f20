#include "pdr/engine.hpp"

#include <algorithm>
#include <map>

#include "pdr/rigging.hpp"

namespace pdr {

std::string ResilienceValue::to_string(bool with_certificate) const {
  std::string s;
  switch (kind) {
    case Kind::kFinite:
      s = std::to_string(finite);
      break;
    case Kind::kOmega:
      s = uniform_witness == Witness::kNo ? "omega?nonuniform" : "omega";
      break;
    case Kind::kOmegaPlusOne:
      s = "omega+1";
      break;
  }
  if (with_certificate) {
    switch (certificate) {
      case Certificate::kExact: s += " !exact"; break;
      case Certificate::kSoundLowerBound: s += " !sound-lb"; break;
      case Certificate::kHeuristic: s += " !heuristic"; break;
    }
  }
  return s;
}

std::vector<char> d_boundary(const ExplicitArena& arena,
                             const std::vector<char>& x) {
  std::vector<char> out(arena.size(), 0);
  for (int v = 0; v < arena.size(); ++v) {
    if (x[v] || arena.owner[v] != 0) continue;
    for (int w : arena.dedges[v])
      if (x[w]) {
        out[v] = 1;
        break;
      }
  }
  return out;
}

ResilienceTable resilience_fixpoint(const ExplicitArena& arena) {
  int n = arena.size();
  ResilienceTable table;
  table.value.assign(n, kOmegaPlusOneSentinel);

  std::vector<char> target = arena.unsafe;
  while (true) {
    auto att = attractor(arena, target, 1);
    size_t j = table.layers.size();
    for (int v = 0; v < n; ++v)
      if (att.in[v] && table.value[v] == kOmegaPlusOneSentinel)
        table.value[v] = j;
    if (!table.layers.empty() && att.in == table.layers.back()) break;
    table.layers.push_back(att.in);
    table.trap_strategies.push_back(att.defender);
    auto bndr = d_boundary(arena, att.in);
    bool grew = false;
    target = att.in;
    for (int v = 0; v < n; ++v)
      if (bndr[v] && !target[v]) {
        target[v] = 1;
        grew = true;
      }
    if (!grew) break;
  }
  return table;
}

PositionalStrategy extract_optimal_strategy(const ExplicitArena& arena,
                                            const ResilienceTable& table) {
  PositionalStrategy s;
  s.player = 0;
  for (int v = 0; v < arena.size(); ++v) {
    if (arena.owner[v] != 0) continue;
    std::uint64_t r = table.value[v];
    if (r == kOmegaPlusOneSentinel) {
      // some successor also has value omega+1 (Player 0 can stay outside S)
      for (int w : arena.edges[v])
        if (table.value[w] == kOmegaPlusOneSentinel) {
          s.choice.emplace(v, w);
          break;
        }
    } else if (r > 0) {
      const auto& trap = table.trap_strategies[r - 1];
      if (trap.defined_at(v)) s.choice.emplace(v, trap.choice.at(v));
    }
    if (!s.defined_at(v)) s.choice.emplace(v, arena.edges[v].front());
  }
  return s;
}

std::vector<std::uint64_t> brute_force_resilience(const ExplicitArena& arena,
                                                  int budget_cap) {
  int n = arena.size();
  // lose[d][v]: with d disturbances available, Player 1 forces an unsafe visit
  std::vector<std::vector<char>> lose(budget_cap + 1,
                                      std::vector<char>(n, 0));
  bool changed = true;
  while (changed) {
    changed = false;
    for (int d = 0; d <= budget_cap; ++d) {
      for (int v = 0; v < n; ++v) {
        if (lose[d][v]) continue;
        bool l = arena.unsafe[v];
        if (!l && arena.owner[v] == 1) {
          for (int w : arena.edges[v]) l = l || lose[d][w];
        } else if (!l) {
          bool all = true;
          for (int w : arena.edges[v]) all = all && lose[d][w];
          l = all;
          if (!l && d > 0)
            for (int w : arena.dedges[v]) l = l || lose[d - 1][w];
        }
        if (l) {
          lose[d][v] = 1;
          changed = true;
        }
      }
    }
  }
  std::vector<std::uint64_t> value(n, kOmegaPlusOneSentinel);
  for (int v = 0; v < n; ++v)
    for (int d = 0; d <= budget_cap; ++d)
      if (lose[d][v]) {
        value[v] = d;
        break;
      }
  return value;
}

Bounds bounds_from_counts(std::uint64_t q_rig, std::uint64_t nsym) {
  Bounds b;
  b.q_rig = q_rig;
  BigInt q(q_rig), gamma(nsym);
  b.h = q * gamma * BigInt::pow(BigInt(2), q_rig + 1) + BigInt(1);
  // bit_length(b) <= bits(q) + bits(h) + h * bits(gamma)
  b.b_bits = BigInt(q.bit_length()) + BigInt(b.h.bit_length()) +
             b.h * BigInt(gamma.bit_length());
  if (nsym == 1) {
    b.b = q * b.h;  // Γ^h = 1
  } else if (b.b_bits < BigInt(1u << 21)) {
    // small enough to materialize (and then h certainly fits in 64 bits)
    b.b = q * b.h * BigInt::pow(gamma, b.h.as_u64());
  } else {
    b.b_exact = false;
    return b;
  }
  b.b_exact = true;
  b.b_bits = BigInt(b.b.bit_length());
  return b;
}

Bounds compute_bounds(const PushdownGameSpec& spec) {
  return bounds_from_counts(rig_pds(spec).num_states(),
                            spec.stack_symbols.size());
}

namespace {

// Heuristic exactness: on optimistic truncations the Player-1 region only
// grows with the height, so a Player-0 verdict is trusted once the low part
// of the Player-0 region (heights <= T_first - delta) survives two further
// delta-deepenings untouched. Deeper truncations reach extra low
// configurations; those are irrelevant to the criterion.
class StabilizationTracker {
 public:
  explicit StabilizationTracker(int delta) : delta_(delta) {}

  void record(int t, const ExplicitArena& arena, const std::vector<char>& w0) {
    Snapshot snap;
    snap.t = t;
    for (int v = 0; v < arena.size(); ++v)
      if (w0[v]) snap.w0.emplace(arena.info[v].label, arena.info[v].height);
    history_.push_back(std::move(snap));
  }

  bool stable() const {
    if (history_.size() < 3) return false;
    size_t n = history_.size();
    const Snapshot& base = history_[n - 3];
    int cutoff = base.t - delta_;
    if (cutoff < 0) return false;
    for (const auto& [label, h] : base.w0) {
      if (h > cutoff) continue;
      if (!history_[n - 2].w0.count(label) || !history_[n - 1].w0.count(label))
        return false;
    }
    return true;
  }

 private:
  struct Snapshot {
    int t = 0;
    std::unordered_map<std::string, int> w0;  // label -> height
  };
  int delta_;
  std::vector<Snapshot> history_;
};

// Largest height <= cap whose truncation stays within the vertex budget
// (exponential configuration graphs force small truncations).
int feasible_height(const PushdownGameSpec& spec, int cap,
                    std::size_t budget) {
  auto fits = [&](int t) {
    return !expand_truncated(spec, t, FrontierMode::kOptimisticFor0, budget)
                .budget_exceeded;
  };
  if (fits(cap)) return cap;
  int lo = 0, hi = cap;  // fits(lo), !fits(hi)
  while (hi - lo > 1) {
    int mid = lo + (hi - lo) / 2;
    (fits(mid) ? lo : hi) = mid;
  }
  return lo;
}

std::vector<int> truncation_schedule(int delta_pref, int feasible) {
  // equal increments so the stabilization windows line up; when the budget
  // caps the height below 3 steps of the preferred increment, shrink it
  int delta = std::max(1, std::min(delta_pref, feasible / 3));
  std::vector<int> out;
  for (int t = delta; t <= feasible; t += delta) out.push_back(t);
  if (out.empty() && feasible > 0) out.push_back(feasible);
  return out;
}

bool at_least(const BigInt& bound, int t) {
  return BigInt(static_cast<std::uint64_t>(t)) >= bound;
}

}  // namespace

OmegaPlusOneCheck check_omega_plus_one(const PushdownGameSpec& spec,
                                       const EngineOptions& opts) {
  PushdownGameSpec rigged = rig_pds(spec);
  Bounds bounds = compute_bounds(spec);
  int tmax = feasible_height(rigged, opts.height_cap, opts.vertex_budget);
  auto schedule = truncation_schedule(rigged.num_states(), tmax);
  StabilizationTracker tracker(schedule.empty() ? 1 : schedule.front());
  OmegaPlusOneCheck res;
  for (int t : schedule) {
    ExplicitArena arena = expand_truncated(rigged, t,
                                           FrontierMode::kOptimisticFor0);
    Regions regions = solve_safety(arena);
    bool p0_wins = regions.w0[arena.initial];
    bool exact = !arena.frontier_reached || at_least(bounds.h, t);
    if (!p0_wins) {
      // a Player-1 win on the optimistic truncation carries over verbatim
      res.holds = false;
      res.certificate = Certificate::kExact;
      return res;
    }
    tracker.record(t, arena, regions.w0);
    if (exact || tracker.stable()) {
      res.holds = true;
      res.certificate = exact ? Certificate::kExact : Certificate::kHeuristic;
      res.rigged_truncation = std::move(arena);
      res.strategy = std::move(regions.strategy0);
      return res;
    }
  }
  throw CapsExhausted("height cap " + std::to_string(opts.height_cap) +
                      " exhausted while checking for omega+1 resilience");
}

ProductSolve solve_product_game(const PushdownGameSpec& rigged, int k,
                                const EngineOptions& opts,
                                const BigInt* exact_height_bound) {
  PushdownGameSpec product = counter_product(rigged, k);
  int tmax = feasible_height(product, opts.height_cap, opts.vertex_budget);
  auto schedule = truncation_schedule(rigged.num_states(), tmax);
  StabilizationTracker tracker(schedule.empty() ? 1 : schedule.front());
  for (int t : schedule) {
    ExplicitArena opt = expand_truncated(product, t,
                                         FrontierMode::kOptimisticFor0);
    Regions ropt = solve_safety(opt);
    if (ropt.w1[opt.initial])
      return {true, Certificate::kExact, t};
    if (!opt.frontier_reached)
      return {false, Certificate::kExact, t};
    ExplicitArena pes = expand_truncated(product, t,
                                         FrontierMode::kPessimisticFor0);
    Regions rpes = solve_safety(pes);
    if (rpes.w0[pes.initial])
      return {false, Certificate::kExact, t};
    if (exact_height_bound && at_least(*exact_height_bound, t))
      return {false, Certificate::kExact, t};
    tracker.record(t, opt, ropt.w0);
    if (tracker.stable())
      return {false, Certificate::kHeuristic, t};
  }
  throw CapsExhausted("height cap " + std::to_string(opts.height_cap) +
                      " exhausted on the k=" + std::to_string(k) +
                      " counter product");
}

ResilienceValue resilience_initial(const PushdownGameSpec& spec,
                                   const EngineOptions& opts) {
  OmegaPlusOneCheck top = check_omega_plus_one(spec, opts);
  if (top.holds) return ResilienceValue::omega_plus_one(top.certificate);

  PushdownGameSpec rigged = rig_pds(spec);
  Bounds bounds = compute_bounds(spec);
  std::uint64_t k_cap = opts.k_cap;
  if (bounds.b_exact && bounds.b.fits_u64())
    k_cap = std::min(k_cap, bounds.b.as_u64());

  // The product's own height bound certifies Player-0 wins below the cap; the
  // one-counter form (2k)^{|Q|^2} is usually far smaller, so take the minimum.
  auto height_bound = [&](int k) {
    PushdownGameSpec product = counter_product(rigged, k);
    BigInt q(static_cast<std::uint64_t>(product.num_states()));
    BigInt gamma(product.stack_symbols.size());
    BigInt h = q * gamma * BigInt::pow(BigInt(2), product.num_states() + 1) +
               BigInt(1);
    if (spec.is_one_counter()) {
      std::uint64_t n = spec.num_states();
      BigInt ocs = BigInt::pow(BigInt(2ull * k), n * n);
      if (ocs < h) return ocs;
    }
    return h;
  };
  auto probe = [&](std::uint64_t k) {
    BigInt bound = height_bound(static_cast<int>(k));
    return solve_product_game(rigged, static_cast<int>(k), opts, &bound);
  };

  // gallop to the first Player-1 win, then bisect (monotone in k)
  std::map<std::uint64_t, ProductSolve> solves;
  std::uint64_t lo = 0, hi = 0;  // lo: largest known Player-0 win
  for (std::uint64_t k = 1;; k = std::min(k * 2, k_cap)) {
    auto s = probe(k);
    solves.emplace(k, s);
    if (s.player1_wins) {
      hi = k;
      break;
    }
    lo = k;
    if (k == k_cap)
      throw CapsExhausted("no Player-1 win up to k = " + std::to_string(k_cap));
  }
  while (hi - lo > 1) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    auto s = probe(mid);
    solves.emplace(mid, s);
    (s.player1_wins ? hi : lo) = mid;
  }
  Certificate cert = solves.at(hi).certificate;
  if (hi > 1) {
    if (!solves.count(hi - 1)) solves.emplace(hi - 1, probe(hi - 1));
    // value = hi - 1 exactly iff Player 0's win at the hi-1 product is sound
    if (solves.at(hi - 1).certificate == Certificate::kHeuristic)
      cert = Certificate::kSoundLowerBound;
  }
  return ResilienceValue::fin(hi - 1, cert);
}

}  // namespace pdr
