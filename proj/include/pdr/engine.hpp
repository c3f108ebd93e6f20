#pragma once

#include <limits>

#include "pdr/bigint.hpp"
#include "pdr/model.hpp"
#include "pdr/solver.hpp"

namespace pdr {

// ---------------------------------------------------------------------------
// Resilience ordinals (omega + 2) with a certificate tier.
// ---------------------------------------------------------------------------

enum class Certificate { kExact, kSoundLowerBound, kHeuristic };

struct ResilienceValue {
  enum class Kind { kFinite, kOmega, kOmegaPlusOne };
  enum class Witness { kYes, kNo, kUnknown };  // uniform witness for kOmega

  Kind kind = Kind::kFinite;
  std::uint64_t finite = 0;
  Witness uniform_witness = Witness::kUnknown;
  Certificate certificate = Certificate::kExact;

  static ResilienceValue fin(std::uint64_t k,
                             Certificate c = Certificate::kExact) {
    return {Kind::kFinite, k, Witness::kUnknown, c};
  }
  static ResilienceValue omega(Witness w, Certificate c = Certificate::kExact) {
    return {Kind::kOmega, 0, w, c};
  }
  static ResilienceValue omega_plus_one(Certificate c = Certificate::kExact) {
    return {Kind::kOmegaPlusOne, 0, Witness::kUnknown, c};
  }

  // total order on the ordinal part (certificate ignored)
  friend bool operator<(const ResilienceValue& a, const ResilienceValue& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.kind == Kind::kFinite && a.finite < b.finite;
  }
  bool same_ordinal(const ResilienceValue& o) const {
    return kind == o.kind && (kind != Kind::kFinite || finite == o.finite);
  }

  std::string to_string(bool with_certificate = true) const;
};

// Raised when height/k caps run out before any certificate can be produced.
struct CapsExhausted : std::runtime_error {
  explicit CapsExhausted(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Finite-arena resilience (the layered attractor fixpoint) and its
// brute-force oracle.
// ---------------------------------------------------------------------------

inline constexpr std::uint64_t kOmegaPlusOneSentinel =
    std::numeric_limits<std::uint64_t>::max();

struct ResilienceTable {
  // per vertex: disturbance count (layer index), or the omega+1 sentinel
  std::vector<std::uint64_t> value;
  std::vector<std::vector<char>> layers;             // S_0 ⊆ S_1 ⊆ ...
  std::vector<PositionalStrategy> trap_strategies;   // per layer
};

// Owner-0 vertices outside X with a disturbance edge into X.
std::vector<char> d_boundary(const ExplicitArena& arena,
                             const std::vector<char>& x);

ResilienceTable resilience_fixpoint(const ExplicitArena& arena);

// The optimally resilient strategy stitched from the layer trap strategies.
PositionalStrategy extract_optimal_strategy(const ExplicitArena& arena,
                                            const ResilienceTable& table);

// Independent oracle: least fixpoint over (vertex, budget) pairs by plain
// round-robin iteration. value[v] = least budget with which the adversary
// forces an unsafe visit, or the omega+1 sentinel if budget_cap never
// suffices.
std::vector<std::uint64_t> brute_force_resilience(const ExplicitArena& arena,
                                                  int budget_cap);

// ---------------------------------------------------------------------------
// Bounds and Algorithm 1 on symbolic specs.
// ---------------------------------------------------------------------------

struct Bounds {
  std::uint64_t q_rig = 0;  // states of rig_pds(spec)
  BigInt h;                 // |Q'|·|Γ|·2^{|Q'|+1} + 1
  // b = |Q'|·h·|Γ|^h. For |Γ| >= 2 this has ~h bits and is only materialized
  // while that stays reasonable; otherwise b_exact is false and only the
  // bit-length estimate below is meaningful.
  BigInt b;
  bool b_exact = true;
  BigInt b_bits;  // upper estimate of bit_length(b), always set
};

// The formulas on raw counts; compute_bounds measures rig_pds(spec) first.
Bounds bounds_from_counts(std::uint64_t q_rig, std::uint64_t gamma);
Bounds compute_bounds(const PushdownGameSpec& spec);

struct EngineOptions {
  int height_cap = 128;
  std::uint64_t k_cap = 1ull << 16;
  // Truncations never materialize more configurations than this; games whose
  // configuration graphs grow exponentially in the height (general pushdown
  // stacks) get their truncation schedule shrunk to fit.
  std::size_t vertex_budget = 400'000;
};

struct OmegaPlusOneCheck {
  bool holds = false;
  Certificate certificate = Certificate::kExact;
  // winning Player-0 strategy on the rigged truncation, when holds
  ExplicitArena rigged_truncation;
  PositionalStrategy strategy;
};

OmegaPlusOneCheck check_omega_plus_one(const PushdownGameSpec& spec,
                                       const EngineOptions& opts = {});

// Winner of the k-product safety game from the initial vertex, solved by
// one-sided truncation; used by Algorithm 1 and the strategy-graph module.
struct ProductSolve {
  bool player1_wins = false;
  Certificate certificate = Certificate::kExact;
  int truncation_height = 0;
};

ProductSolve solve_product_game(const PushdownGameSpec& rigged, int k,
                                const EngineOptions& opts,
                                const BigInt* exact_height_bound);

// Algorithm 1: omega+1 check, then the ascending-k loop (with galloping).
ResilienceValue resilience_initial(const PushdownGameSpec& spec,
                                   const EngineOptions& opts = {});

}  // namespace pdr
