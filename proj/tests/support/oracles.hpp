#pragma once

#include <vector>

#include "rtsynth/core.hpp"
#include "rtsynth/game.hpp"
#include "rtsynth/lasso.hpp"

// Independent reference implementations used to validate the library. These
// deliberately use naive algorithms (explicit enumeration, simple-cycle
// search) rather than the production code paths.
namespace rtsynth::oracles {

// Existential parity acceptance on a lasso, decided by enumerating the
// reachable (position, configuration) nodes and then all simple cycles.
// Throws if the search exceeds step_cap (tests must size instances down).
bool nra_membership(const RegisterAutomaton& a, const LassoDataWord& w,
                    long long step_cap = 4'000'000);

// Winner of every arena vertex, decided by enumerating all of Eve's
// memoryless strategies and checking the cycles Adam can still reach.
// Exponential; keep arenas tiny.
std::vector<Player> solve_by_enumeration(const ParityArena& g,
                                         long long step_cap = 50'000'000);

}  // namespace rtsynth::oracles
