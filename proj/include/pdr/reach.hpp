#pragma once

#include "pdr/engine.hpp"
#include "pdr/model.hpp"

namespace pdr {

// Edge-splitting reduction: reachability game (target = unsafe_state markings, no
// disturbances) to a safety game with disturbances in which every original
// move costs one disturbance. Ownership of original states is flipped; each
// rule gains an intermediate edge-state with a waiting self-loop, left only by
// a disturbance.
PushdownGameSpec split_edges_transform(const PushdownGameSpec& spec);

// Value of an optimal Player-0 strategy for reaching the target from the
// initial configuration: Finite(n) = target guaranteed within n steps,
// OmegaPlusOne = Player 0 cannot force the target at all. Computed as
// resilience_initial of the transformed game.
ResilienceValue optimal_reach_value(const PushdownGameSpec& spec,
                                    const EngineOptions& opts = {});

// Independent oracle on explicit disturbance-free arenas: backward induction
// value(v) = min over own moves / max over opponent moves of 1 + value, 0 on
// target; the omega+1 sentinel outside the Player-0 attractor.
std::vector<std::uint64_t> backward_induction_oracle(
    const ExplicitArena& arena, const std::vector<char>& target);

}  // namespace pdr
