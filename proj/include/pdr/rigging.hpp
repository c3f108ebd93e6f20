#pragma once

#include "pdr/model.hpp"

namespace pdr {

// The rigging transformation: Player 1 gains control over disturbances.
// Output has no disturbance edges; Player 0 owns exactly the copy vertices.
// Disturbance-simulation vertices are marked VKind::kEdgeDist.
ExplicitArena rig_arena(const ExplicitArena& arena);

// Same transformation on the symbolic level: the configuration graph of the
// result is isomorphic to rig_arena of the input's configuration graph.
// Auxiliary states are name-mangled (`q~copy`, `q→q'~d`, `q→q'~e`) and
// disturbance-simulation states are flagged in dstate.
PushdownGameSpec rig_pds(const PushdownGameSpec& spec);

// Product of a rigged spec with a saturating disturbance counter {0..k}.
// Counter increments on transitions leaving disturbance-simulation states;
// counter-k states become absorbing-safe for Player 0, turning the objective
// Safety(F)_rig ∪ R_{>=k} into plain safety. State names get `@c<i>` suffixes.
PushdownGameSpec counter_product(const PushdownGameSpec& rigged, int k);

// Translates a play of `arena` into the corresponding play of rigged: every
// move is replaced by its two-step simulation. Vertices are matched by label.
Play translate_play_up(const ExplicitArena& arena, const ExplicitArena& rigged,
                       const Play& play);

// Inverse direction, defined on rigged plays that start in an original
// vertex; used for round-trip checks.
Play translate_play_down(const ExplicitArena& arena,
                         const ExplicitArena& rigged, const Play& rigged_play);

// Restricts a Player-0 strategy on the rigged arena (defined on copy
// vertices) to a Player-0 strategy on the original arena.
PositionalStrategy lift_strategy_down(const ExplicitArena& arena,
                                      const ExplicitArena& rigged,
                                      const PositionalStrategy& rigged_strategy);

}  // namespace pdr
