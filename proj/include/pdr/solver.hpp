#pragma once

#include "pdr/model.hpp"

namespace pdr {

struct AttractorResult {
  std::vector<char> in;          // membership mask
  PositionalStrategy attacker;   // for `player`, forces a target visit from in
  PositionalStrategy defender;   // for the opponent, traps play outside in
};

// How a mask restricts the universal (opponent) closure rule:
//  kEscape  — successors outside the mask never join, so they count as escapes
//             for the opponent (the outside acts as a safe haven for it);
//  kSubgame — edges leaving the mask are ignored entirely (the computation
//             lives in the induced subarena).
enum class MaskSemantics { kEscape, kSubgame };

// Least set containing target and closed under player-controlled single edges
// into the set / opponent-controlled universal edges into the set. Vertices
// with allowed[v] == 0 never join the set. Disturbance edges are ignored.
AttractorResult attractor(const ExplicitArena& arena,
                          const std::vector<char>& target, int player,
                          const std::vector<char>* allowed = nullptr,
                          MaskSemantics sem = MaskSemantics::kEscape);

struct Regions {
  std::vector<char> w0, w1;
  PositionalStrategy strategy0, strategy1;
};

// Safety for Player 0: avoid arena.unsafe forever (disturbance-free).
Regions solve_safety(const ExplicitArena& arena);

// Büchi for Player 0: visit `accepting` infinitely often (disturbance-free).
Regions solve_buchi(const ExplicitArena& arena,
                    const std::vector<char>& accepting);

// Player 0 wins iff the play avoids `unsafe` forever OR visits `accepting`
// infinitely often.
Regions solve_union_safety_or_buchi(const ExplicitArena& arena,
                                    const std::vector<char>& unsafe,
                                    const std::vector<char>& accepting);

}  // namespace pdr
