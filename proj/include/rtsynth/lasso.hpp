#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "rtsynth/core.hpp"

namespace rtsynth {

// One position of a data word: a label (combined index, see
// RegisterAutomaton) and a datum.
struct LData {
  int label = -1;
  DataValue data = 0;

  bool operator==(const LData& o) const { return label == o.label && data == o.data; }
};

// Ultimately periodic data word prefix . loop^omega. The loop is nonempty.
struct LassoDataWord {
  std::vector<LData> prefix;
  std::vector<LData> loop;

  int prefix_len() const { return static_cast<int>(prefix.size()); }
  int loop_len() const { return static_cast<int>(loop.size()); }
  int total_len() const { return prefix_len() + loop_len(); }

  // Letter at global position i >= 0 of the unfolded word.
  const LData& at(long long i) const {
    if (i < prefix_len()) return prefix[static_cast<size_t>(i)];
    return loop[static_cast<size_t>((i - prefix_len()) % loop_len())];
  }
  // Position in [0, prefix+loop) representing global position i.
  int norm_pos(long long i) const {
    if (i < prefix_len()) return static_cast<int>(i);
    return prefix_len() + static_cast<int>((i - prefix_len()) % loop_len());
  }

  bool operator==(const LassoDataWord& o) const {
    return prefix == o.prefix && loop == o.loop;
  }
};

// Checks labels exist; for spec automata additionally checks the word is
// relational: labels alternate input/output and both prefix and loop have
// even length. Throws ContractViolation.
void validate_lasso(const RegisterAutomaton& a, const LassoDataWord& w);

// Equivalent lasso with the loop unrolled `extra` more times into the prefix.
LassoDataWord unfold(const LassoDataWord& w, int extra);

// Applies an injective renaming to all data. Used to state that acceptance
// only depends on the equality pattern relative to the initial datum.
LassoDataWord rename_data(const LassoDataWord& w,
                          const std::function<DataValue(DataValue)>& pi);

// Relational accessors, 1-based as in ordinary indexing of i/o pairs.
DataValue dt_in(const LassoDataWord& w, long long j);
DataValue dt_out(const LassoDataWord& w, long long j);

// Lasso-shaped run: configurations[i] is the configuration before step i,
// transitions[i] the transition taken at step i. The configuration after the
// last step equals configurations[loop_start], and positions align with w.
struct Run {
  int loop_start = 0;
  std::vector<int> transitions;
  std::vector<Configuration> configurations;  // transitions.size() + 1 entries
};

// Validates a run against an automaton and word; throws on malformed shape.
bool run_is_valid(const RegisterAutomaton& a, const LassoDataWord& w, const Run& r);

// Maximal priority visited on the cycle part of the run.
int run_cycle_max_priority(const RegisterAutomaton& a, const Run& r);

// Existential acceptance: some run has even maximal priority infinitely
// often. Returns such a run as witness.
std::optional<Run> nra_membership(const RegisterAutomaton& a, const LassoDataWord& w);

// Universal acceptance: every run (runs that die impose nothing) accepting.
bool ura_membership(const RegisterAutomaton& a, const LassoDataWord& w);

struct DraRunResult {
  bool accepted = false;
  // True when the unique run hit a state/datum with no matching transition;
  // the word is rejected by convention.
  bool incomplete = false;
  std::optional<Run> run;
};

// Follows the unique run of a deterministic automaton. Throws
// ContractViolation if two transitions are enabled at some step.
DraRunResult dra_run(const RegisterAutomaton& a, const LassoDataWord& w);

// Membership under the automaton's semantics tag (DRA uses the
// missing-transition-rejects convention).
bool accepts(const RegisterAutomaton& a, const LassoDataWord& w);

// Runs the transducer on a lasso of inputs (labels index t.in_labels) and
// returns the induced relational lasso over the combined label table.
LassoDataWord transducer_run(const RegisterTransducer& t, const LassoDataWord& input);

// Does some run of `a` survive the given finite prefix? (Acceptance is not
// considered; this is plain run existence.)
bool has_run_on_prefix(const RegisterAutomaton& a, const std::vector<LData>& prefix);

}  // namespace rtsynth
