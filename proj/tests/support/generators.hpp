#pragma once

#include <random>
#include <vector>

#include "rtsynth/core.hpp"
#include "rtsynth/game.hpp"
#include "rtsynth/lasso.hpp"

// Seeded random instance generators for property tests. All distributions
// take the engine by reference so suites stay reproducible.
namespace rtsynth::testgen {

using Rng = std::mt19937_64;

int pick(Rng& rng, int lo, int hi);  // inclusive bounds

Test random_test(Rng& rng, int num_registers, int depth);

struct PlainAutomatonOptions {
  int max_states = 3;
  int max_registers = 2;
  int max_labels = 2;
  int max_priority = 2;
  int max_transitions = 6;
};

RegisterAutomaton random_plain_nra(Rng& rng, const PlainAutomatonOptions& opt);

struct SpecAutomatonOptions {
  int max_state_pairs = 2;     // input/output states generated in pairs
  int max_registers = 2;
  int max_in_labels = 2;
  int max_out_labels = 2;
  int max_priority = 2;
  int transitions_per_state = 3;
  bool deterministic_ido = false;  // deterministic with single-Eq output tests
  bool test_free = false;          // top input tests, Eq outputs, no output asgn
};

RegisterAutomaton random_spec_automaton(Rng& rng, const SpecAutomatonOptions& opt);

// Random ultimately periodic word over the automaton's labels, relational if
// the automaton is a spec. Data drawn from {0..max_data}.
LassoDataWord random_lasso(Rng& rng, const RegisterAutomaton& a, int max_pairs,
                           DataValue max_data);

// Random word obtained by walking the automaton and choosing data that
// satisfy some enabled transition. Words rarely die on the automaton, so the
// accepting side of membership properties gets sampled. Falls back to
// random_lasso when the walk hits a dead end.
LassoDataWord random_walk_lasso(Rng& rng, const RegisterAutomaton& a,
                                int max_pairs, DataValue max_data);

// Random input-only lasso over the transducer's input labels.
LassoDataWord random_input_lasso(Rng& rng, const RegisterTransducer& t,
                                 int max_pairs, DataValue max_data);

struct ArenaOptions {
  int max_vertices = 6;
  int max_priority = 3;
  int max_moves = 3;
};

// Random dead-end-free arena with mixed ownership.
ParityArena random_arena(Rng& rng, const ArenaOptions& opt);

}  // namespace rtsynth::testgen
