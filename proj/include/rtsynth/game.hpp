#pragma once

#include <string>
#include <vector>

#include "rtsynth/core.hpp"

namespace rtsynth {

enum class Player { Adam, Eve };  // Adam = environment, Eve = system

inline Player opponent(Player p) {
  return p == Player::Adam ? Player::Eve : Player::Adam;
}

// Finite parity game arena, max-even convention: Eve wins a play iff the
// maximal priority seen infinitely often is even.
struct ParityArena {
  std::vector<Player> owner;
  std::vector<int> priority;
  std::vector<std::vector<int>> moves;
  std::vector<std::string> names;  // optional; empty or one per vertex

  int num_vertices() const { return static_cast<int>(owner.size()); }
};

// Ranges, size agreement, and (for solving) no dead ends.
void validate(const ParityArena& g);

struct GameSolution {
  std::vector<Player> winner;
  // Winning move target for vertices owned by their winner, -1 elsewhere.
  std::vector<int> strategy;
};

// Zielonka's recursive algorithm with memoryless strategies for both
// players. The arena must be dead-end free.
GameSolution solve_parity(const ParityArena& g);

// Copy of the arena where every dead end gains a move to a fresh absorbing
// vertex losing for the dead end's owner (being stuck loses).
ParityArena complete_dead_ends(const ParityArena& g);

std::string arena_to_text(const ParityArena& g);
std::string arena_to_dot(const ParityArena& g, const GameSolution* sol = nullptr);

}  // namespace rtsynth
